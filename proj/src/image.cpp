// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/image.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include <jpeglib.h>
#include <png.h>

#include "nofade/errors.hpp"

namespace nofade {

namespace {

[[noreturn]] void fail_unreadable(const std::filesystem::path& path)
{
    throw DecodeError("unreadable file: " + path.string());
}

[[noreturn]] void fail_unsupported(const std::filesystem::path& path, const std::string& what)
{
    throw DecodeError("unsupported format (" + what + "): " + path.string());
}

[[noreturn]] void fail_corrupt(const std::filesystem::path& path, const std::string& what)
{
    throw DecodeError("corrupt stream (" + what + "): " + path.string());
}

void check_dimensions(const std::filesystem::path& path, long width, long height)
{
    if (width < 1 || height < 1)
        fail_corrupt(path, "zero-sized image");
    if (width > (1 << 20) || height > (1 << 20))
        fail_corrupt(path, "implausible dimensions");
}

struct FileCloser {
    void operator()(std::FILE* f) const { if (f) std::fclose(f); }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// ---------------------------------------------------------------------
// PNG via libpng
// ---------------------------------------------------------------------

Raster decode_png(const std::filesystem::path& path)
{
    FilePtr file(std::fopen(path.string().c_str(), "rb"));
    if (!file)
        fail_unreadable(path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png)
        throw DecodeError("libpng init failed: " + path.string());
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw DecodeError("libpng init failed: " + path.string());
    }

    Raster raster;
    std::vector<png_bytep> row_pointers;

    // libpng reports errors by longjmp; everything it may unwind past
    // lives outside this block.
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail_corrupt(path, "png decode error");
    }

    png_init_io(png, file.get());
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const png_byte color_type = png_get_color_type(png, info);
    const png_byte bit_depth = png_get_bit_depth(png, info);

    check_dimensions(path, static_cast<long>(width), static_cast<long>(height));

    if (bit_depth == 16)
        png_set_strip_16(png);  // drops the low byte, i.e. a right shift
    if (color_type == PNG_COLOR_TYPE_PALETTE)
        png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_tRNS_to_alpha(png);
    if (color_type & PNG_COLOR_MASK_ALPHA || png_get_valid(png, info, PNG_INFO_tRNS))
        png_set_strip_alpha(png);

    png_set_interlace_handling(png);
    png_read_update_info(png, info);

    const int channels = png_get_channels(png, info);
    if (channels != 1 && channels != 3) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail_unsupported(path, "png channel layout");
    }

    raster.width = static_cast<int>(width);
    raster.height = static_cast<int>(height);
    raster.channels = channels;
    raster.data.resize(raster.pixel_count() * static_cast<std::size_t>(channels));

    row_pointers.resize(height);
    const std::size_t stride = static_cast<std::size_t>(width) * static_cast<std::size_t>(channels);
    for (png_uint_32 y = 0; y < height; ++y)
        row_pointers[y] = raster.data.data() + y * stride;

    png_read_image(png, row_pointers.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return raster;
}

// ---------------------------------------------------------------------
// JPEG via libjpeg
// ---------------------------------------------------------------------

struct JpegErrorMgr {
    jpeg_error_mgr base;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo)
{
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(mgr->jump, 1);
}

Raster decode_jpeg(const std::filesystem::path& path)
{
    FilePtr file(std::fopen(path.string().c_str(), "rb"));
    if (!file)
        fail_unreadable(path);

    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_exit;

    Raster raster;

    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        fail_corrupt(path, "jpeg decode error");
    }

    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, file.get());
    jpeg_read_header(&cinfo, TRUE);

    cinfo.out_color_space =
        (cinfo.jpeg_color_space == JCS_GRAYSCALE) ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_start_decompress(&cinfo);

    check_dimensions(path, cinfo.output_width, cinfo.output_height);
    const int channels = cinfo.output_components;
    if (channels != 1 && channels != 3) {
        jpeg_destroy_decompress(&cinfo);
        fail_unsupported(path, "jpeg channel layout");
    }

    raster.width = static_cast<int>(cinfo.output_width);
    raster.height = static_cast<int>(cinfo.output_height);
    raster.channels = channels;
    raster.data.resize(raster.pixel_count() * static_cast<std::size_t>(channels));

    const std::size_t stride =
        static_cast<std::size_t>(raster.width) * static_cast<std::size_t>(channels);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = raster.data.data() + cinfo.output_scanline * stride;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);

    // libjpeg pads truncated streams with a fake EOI and only warns; a
    // warning therefore means the bytes on disk were not all there.
    const long warnings = err.base.num_warnings;
    jpeg_destroy_decompress(&cinfo);
    if (warnings > 0)
        fail_corrupt(path, "truncated jpeg stream");
    return raster;
}

// ---------------------------------------------------------------------
// PGM (binary P5)
// ---------------------------------------------------------------------

int pgm_next_value(std::istream& in, const std::filesystem::path& path)
{
    // Skip whitespace and '#' comments between header tokens.
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n')
                c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    if (c == EOF || !std::isdigit(c))
        fail_corrupt(path, "malformed pgm header");
    long value = 0;
    while (c != EOF && std::isdigit(c)) {
        value = value * 10 + (c - '0');
        if (value > 1 << 24)
            fail_corrupt(path, "pgm header value out of range");
        c = in.get();
    }
    if (c != EOF)
        in.unget();
    return static_cast<int>(value);
}

Raster decode_pgm(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail_unreadable(path);

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5')
        fail_unsupported(path, "only binary P5 pgm is accepted");

    const int width = pgm_next_value(in, path);
    const int height = pgm_next_value(in, path);
    const int maxval = pgm_next_value(in, path);
    check_dimensions(path, width, height);
    if (maxval < 1 || maxval > 65535)
        fail_corrupt(path, "pgm maxval out of range");

    // Exactly one whitespace byte separates the header from the samples.
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep))
        fail_corrupt(path, "malformed pgm header");

    Raster raster;
    raster.width = width;
    raster.height = height;
    raster.channels = 1;
    raster.data.resize(raster.pixel_count());

    if (maxval <= 255) {
        in.read(reinterpret_cast<char*>(raster.data.data()),
                static_cast<std::streamsize>(raster.data.size()));
        if (static_cast<std::size_t>(in.gcount()) != raster.data.size())
            fail_corrupt(path, "pgm pixel data truncated");
    } else {
        // Two-byte big-endian samples, right-shifted down to 8 bits.
        const int shift = std::bit_width(static_cast<unsigned>(maxval)) - 8;
        std::vector<std::uint8_t> wide(raster.data.size() * 2);
        in.read(reinterpret_cast<char*>(wide.data()),
                static_cast<std::streamsize>(wide.size()));
        if (static_cast<std::size_t>(in.gcount()) != wide.size())
            fail_corrupt(path, "pgm pixel data truncated");
        for (std::size_t i = 0; i < raster.data.size(); ++i) {
            const unsigned sample =
                (static_cast<unsigned>(wide[2 * i]) << 8) | wide[2 * i + 1];
            raster.data[i] = static_cast<std::uint8_t>(sample >> shift);
        }
    }
    return raster;
}

// ---------------------------------------------------------------------
// BMP (uncompressed, 8-bit palette / 24-bit / 32-bit)
// ---------------------------------------------------------------------

std::uint32_t read_u32(const std::uint8_t* p)
{
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const std::uint8_t* p)
{
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

Raster decode_bmp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail_unreadable(path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (bytes.size() < 54 || bytes[0] != 'B' || bytes[1] != 'M')
        fail_corrupt(path, "bmp header too short");

    const std::uint32_t data_offset = read_u32(&bytes[10]);
    const std::uint32_t header_size = read_u32(&bytes[14]);
    if (header_size < 40 || 14 + header_size > bytes.size())
        fail_unsupported(path, "bmp header variant");

    const std::int32_t width = static_cast<std::int32_t>(read_u32(&bytes[18]));
    const std::int32_t raw_height = static_cast<std::int32_t>(read_u32(&bytes[22]));
    const std::uint16_t planes = read_u16(&bytes[26]);
    const std::uint16_t bpp = read_u16(&bytes[28]);
    const std::uint32_t compression = read_u32(&bytes[30]);

    const bool top_down = raw_height < 0;
    const std::int32_t height = top_down ? -raw_height : raw_height;
    check_dimensions(path, width, height);
    if (planes != 1 || compression != 0)
        fail_unsupported(path, "compressed bmp");
    if (bpp != 8 && bpp != 24 && bpp != 32)
        fail_unsupported(path, "bmp bit depth " + std::to_string(bpp));

    // 8-bit BMPs carry a BGRA palette right after the info header.
    std::vector<std::array<std::uint8_t, 3>> palette;
    if (bpp == 8) {
        std::uint32_t colors = read_u32(&bytes[46]);
        if (colors == 0)
            colors = 256;
        const std::size_t palette_at = 14 + header_size;
        if (palette_at + colors * 4 > bytes.size())
            fail_corrupt(path, "bmp palette truncated");
        palette.resize(colors);
        for (std::uint32_t i = 0; i < colors; ++i) {
            const std::uint8_t* e = &bytes[palette_at + i * 4];
            palette[i] = {e[2], e[1], e[0]};  // stored BGR
        }
    }

    const std::size_t bytes_per_pixel = bpp / 8;
    const std::size_t row_size =
        ((static_cast<std::size_t>(width) * bytes_per_pixel + 3) / 4) * 4;
    if (data_offset + row_size * static_cast<std::size_t>(height) > bytes.size())
        fail_corrupt(path, "bmp pixel data truncated");

    Raster raster;
    raster.width = width;
    raster.height = height;
    raster.channels = 3;
    raster.data.resize(raster.pixel_count() * 3);

    for (std::int32_t y = 0; y < height; ++y) {
        const std::int32_t src_y = top_down ? y : height - 1 - y;
        const std::uint8_t* row = &bytes[data_offset + static_cast<std::size_t>(src_y) * row_size];
        std::uint8_t* dst = &raster.data[static_cast<std::size_t>(y) * width * 3];
        for (std::int32_t x = 0; x < width; ++x) {
            if (bpp == 8) {
                const std::uint8_t idx = row[x];
                if (idx >= palette.size())
                    fail_corrupt(path, "bmp palette index out of range");
                dst[x * 3 + 0] = palette[idx][0];
                dst[x * 3 + 1] = palette[idx][1];
                dst[x * 3 + 2] = palette[idx][2];
            } else {
                const std::uint8_t* px = row + x * bytes_per_pixel;  // BGR(A)
                dst[x * 3 + 0] = px[2];
                dst[x * 3 + 1] = px[1];
                dst[x * 3 + 2] = px[0];
            }
        }
    }
    return raster;
}

}  // namespace

Raster decode_image(const std::filesystem::path& path)
{
    std::ifstream probe(path, std::ios::binary);
    if (!probe)
        fail_unreadable(path);
    std::uint8_t magic[8] = {};
    probe.read(reinterpret_cast<char*>(magic), sizeof(magic));
    const std::streamsize got = probe.gcount();
    probe.close();
    if (got < 2)
        fail_corrupt(path, "file shorter than any raster header");

    if (magic[0] == 0x89 && magic[1] == 'P' && magic[2] == 'N' && magic[3] == 'G')
        return decode_png(path);
    if (magic[0] == 0xFF && magic[1] == 0xD8 && magic[2] == 0xFF)
        return decode_jpeg(path);
    if (magic[0] == 'P' && magic[1] == '5')
        return decode_pgm(path);
    if (magic[0] == 'B' && magic[1] == 'M')
        return decode_bmp(path);
    fail_unsupported(path, "unrecognized magic bytes");
}

GreyImage to_greyscale(const Raster& raster)
{
    if (raster.width < 1 || raster.height < 1)
        throw ValidationError("empty raster");
    if (raster.channels != 1 && raster.channels != 3)
        throw ValidationError("raster must have 1 or 3 channels");

    GreyImage grey;
    grey.width = raster.width;
    grey.height = raster.height;

    if (raster.channels == 1) {
        grey.intensities = raster.data;  // greyscale sources bypass conversion
        return grey;
    }

    grey.intensities.resize(grey.pixel_count());
    const std::uint8_t* src = raster.data.data();
    for (std::size_t i = 0; i < grey.intensities.size(); ++i) {
        const double luma = 0.299 * src[3 * i] + 0.587 * src[3 * i + 1] + 0.114 * src[3 * i + 2];
        double rounded = std::floor(luma + 0.5);  // round half up
        if (rounded < 0.0)
            rounded = 0.0;
        if (rounded > 255.0)
            rounded = 255.0;
        grey.intensities[i] = static_cast<std::uint8_t>(rounded);
    }
    return grey;
}

IntensityHistogram intensity_histogram(const GreyImage& image)
{
    if (image.width < 1 || image.height < 1 ||
        image.intensities.size() != image.pixel_count())
        throw ShapeError("malformed grey image");

    IntensityHistogram hist;
    for (std::uint8_t v : image.intensities)
        ++hist.counts[v];
    hist.total = image.pixel_count();
    return hist;
}

}  // namespace nofade
