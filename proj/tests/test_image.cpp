// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>

#include <jpeglib.h>
#include <png.h>

#include <array>
#include <csetjmp>
#include <vector>

#include "doctest.h"
#include "nofade/errors.hpp"
#include "nofade/image.hpp"
#include "test_util.hpp"

using namespace nofade;
using testutil::TempDir;

namespace {

void write_png_file(const std::filesystem::path& path, int width, int height, int channels,
                    int bit_depth, const std::vector<std::uint8_t>& bytes) {
    FILE* fp = std::fopen(path.c_str(), "wb");
    REQUIRE(fp != nullptr);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    REQUIRE(setjmp(png_jmpbuf(png)) == 0);
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height),
                 bit_depth, channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    const std::size_t stride =
        static_cast<std::size_t>(width) * channels * (bit_depth == 16 ? 2 : 1);
    for (int y = 0; y < height; ++y) {
        png_write_row(png, const_cast<png_bytep>(bytes.data() + y * stride));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

void write_palette_png(const std::filesystem::path& path, int width, int height,
                       const std::vector<std::uint8_t>& indices,
                       const std::vector<std::array<std::uint8_t, 3>>& palette) {
    FILE* fp = std::fopen(path.c_str(), "wb");
    REQUIRE(fp != nullptr);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    REQUIRE(setjmp(png_jmpbuf(png)) == 0);
    png_init_io(png, fp);
    png_set_IHDR(png, info, static_cast<png_uint_32>(width), static_cast<png_uint_32>(height), 8,
                 PNG_COLOR_TYPE_PALETTE, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    std::vector<png_color> colors(palette.size());
    for (std::size_t i = 0; i < palette.size(); ++i) {
        colors[i] = {palette[i][0], palette[i][1], palette[i][2]};
    }
    png_set_PLTE(png, info, colors.data(), static_cast<int>(colors.size()));
    png_write_info(png, info);
    for (int y = 0; y < height; ++y) {
        png_write_row(png, const_cast<png_bytep>(indices.data() +
                                                 static_cast<std::size_t>(y) * width));
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

void write_jpeg_file(const std::filesystem::path& path, int width, int height, int channels,
                     const std::vector<std::uint8_t>& pixels, int quality = 95) {
    jpeg_compress_struct cinfo{};
    jpeg_error_mgr jerr{};
    cinfo.err = jpeg_std_error(&jerr);
    jpeg_create_compress(&cinfo);
    FILE* fp = std::fopen(path.c_str(), "wb");
    REQUIRE(fp != nullptr);
    jpeg_stdio_dest(&cinfo, fp);
    cinfo.image_width = static_cast<JDIMENSION>(width);
    cinfo.image_height = static_cast<JDIMENSION>(height);
    cinfo.input_components = channels;
    cinfo.in_color_space = channels == 1 ? JCS_GRAYSCALE : JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    const std::size_t stride = static_cast<std::size_t>(width) * channels;
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(pixels.data() + cinfo.next_scanline * stride);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
    std::fclose(fp);
}

void push_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void push_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

/// 24-bit uncompressed BMP; rows is top-down RGB. height_sign controls
/// whether the file stores rows bottom-up (+1) or top-down (-1).
std::vector<std::uint8_t> make_bmp24(int width, int height,
                                     const std::vector<std::uint8_t>& rgb_top_down,
                                     int height_sign = 1) {
    const int stride = width * 3;
    const int padded = (stride + 3) & ~3;
    std::vector<std::uint8_t> out;
    out.push_back('B');
    out.push_back('M');
    push_u32(out, static_cast<std::uint32_t>(54 + padded * height));
    push_u32(out, 0);
    push_u32(out, 54);
    push_u32(out, 40);
    push_u32(out, static_cast<std::uint32_t>(width));
    push_u32(out, static_cast<std::uint32_t>(height * height_sign));
    push_u16(out, 1);
    push_u16(out, 24);
    push_u32(out, 0);  // BI_RGB
    push_u32(out, 0);
    push_u32(out, 0);
    push_u32(out, 0);
    push_u32(out, 0);
    push_u32(out, 0);
    for (int file_row = 0; file_row < height; ++file_row) {
        const int y = height_sign > 0 ? height - 1 - file_row : file_row;
        for (int x = 0; x < width; ++x) {
            const std::uint8_t* px = &rgb_top_down[static_cast<std::size_t>(y * stride + x * 3)];
            out.push_back(px[2]);  // B
            out.push_back(px[1]);  // G
            out.push_back(px[0]);  // R
        }
        for (int p = stride; p < padded; ++p) out.push_back(0);
    }
    return out;
}

std::vector<std::uint8_t> make_bmp8(int width, int height,
                                    const std::vector<std::uint8_t>& indices_top_down,
                                    const std::vector<std::array<std::uint8_t, 3>>& palette) {
    const int stride = width;
    const int padded = (stride + 3) & ~3;
    const std::uint32_t palette_bytes = static_cast<std::uint32_t>(palette.size()) * 4;
    std::vector<std::uint8_t> out;
    out.push_back('B');
    out.push_back('M');
    push_u32(out, 54 + palette_bytes + static_cast<std::uint32_t>(padded * height));
    push_u32(out, 0);
    push_u32(out, 54 + palette_bytes);
    push_u32(out, 40);
    push_u32(out, static_cast<std::uint32_t>(width));
    push_u32(out, static_cast<std::uint32_t>(height));
    push_u16(out, 1);
    push_u16(out, 8);
    push_u32(out, 0);  // BI_RGB
    push_u32(out, 0);
    push_u32(out, 0);
    push_u32(out, 0);
    push_u32(out, static_cast<std::uint32_t>(palette.size()));
    push_u32(out, 0);
    for (const auto& c : palette) {
        out.push_back(c[2]);
        out.push_back(c[1]);
        out.push_back(c[0]);
        out.push_back(0);
    }
    for (int file_row = 0; file_row < height; ++file_row) {
        const int y = height - 1 - file_row;
        for (int x = 0; x < width; ++x) {
            out.push_back(indices_top_down[static_cast<std::size_t>(y * stride + x)]);
        }
        for (int p = stride; p < padded; ++p) out.push_back(0);
    }
    return out;
}

std::string bytes_to_string(const std::vector<std::uint8_t>& bytes) {
    return std::string(bytes.begin(), bytes.end());
}

}  // namespace

TEST_CASE("pgm decodes 8-bit binary data") {
    TempDir dir("img-pgm");
    testutil::write_pgm(dir.path / "a.pgm", 2, 2, {10, 20, 30, 40});
    const Raster r = decode_image(dir.path / "a.pgm");
    CHECK(r.width == 2);
    CHECK(r.height == 2);
    CHECK(r.channels == 1);
    CHECK(r.data == std::vector<std::uint8_t>{10, 20, 30, 40});
}

TEST_CASE("pgm header comments are skipped") {
    TempDir dir("img-pgm-comment");
    testutil::spew(dir.path / "c.pgm", std::string("P5\n# a comment\n2 # inline\n1\n255\n") +
                                           std::string("\x05\x06", 2));
    const Raster r = decode_image(dir.path / "c.pgm");
    CHECK(r.width == 2);
    CHECK(r.height == 1);
    CHECK(r.data == std::vector<std::uint8_t>{5, 6});
}

TEST_CASE("16-bit pgm is reduced by shifting out the extra depth") {
    TempDir dir("img-pgm16");
    // maxval 65535: two bytes per sample, big-endian, shifted down by 8.
    testutil::spew(dir.path / "w.pgm",
                   std::string("P5\n2 1\n65535\n") + std::string("\x12\x34\xFF\x00", 4));
    const Raster wide = decode_image(dir.path / "w.pgm");
    CHECK(wide.data == std::vector<std::uint8_t>{0x12, 0xFF});

    // maxval 1023 occupies 10 bits, so the shift is 2.
    std::vector<std::uint8_t> bytes = {0x03, 0xFF, 0x00, 0x40};  // 1023, 64
    testutil::spew(dir.path / "n.pgm", std::string("P5\n2 1\n1023\n") +
                                           std::string(bytes.begin(), bytes.end()));
    const Raster narrow = decode_image(dir.path / "n.pgm");
    CHECK(narrow.data == std::vector<std::uint8_t>{255, 16});
}

TEST_CASE("pgm rejects truncated pixel data") {
    TempDir dir("img-pgm-short");
    testutil::spew(dir.path / "t.pgm", std::string("P5\n2 2\n255\n") + std::string("\x01", 1));
    CHECK_THROWS_WITH_AS(decode_image(dir.path / "t.pgm"), doctest::Contains("corrupt stream"),
                         DecodeError);
}

TEST_CASE("bmp 24-bit bottom-up decodes to top-down rgb") {
    TempDir dir("img-bmp24");
    // Top-down rows: (255,0,0) (0,255,0) / (0,0,255) (9,8,7)
    const std::vector<std::uint8_t> rgb = {255, 0, 0, 0, 255, 0, 0, 0, 255, 9, 8, 7};
    testutil::spew(dir.path / "b.bmp", bytes_to_string(make_bmp24(2, 2, rgb, 1)));
    const Raster r = decode_image(dir.path / "b.bmp");
    CHECK(r.channels == 3);
    CHECK(r.data == rgb);
}

TEST_CASE("bmp top-down rows decode identically") {
    TempDir dir("img-bmp-td");
    const std::vector<std::uint8_t> rgb = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    testutil::spew(dir.path / "td.bmp", bytes_to_string(make_bmp24(2, 2, rgb, -1)));
    const Raster r = decode_image(dir.path / "td.bmp");
    CHECK(r.data == rgb);
}

TEST_CASE("bmp 8-bit palette resolves through the palette") {
    TempDir dir("img-bmp8");
    const std::vector<std::array<std::uint8_t, 3>> palette = {
        {0, 0, 0}, {255, 255, 255}, {10, 20, 30}};
    const std::vector<std::uint8_t> indices = {0, 1, 2, 1, 0, 2};
    testutil::spew(dir.path / "p.bmp", bytes_to_string(make_bmp8(3, 2, indices, palette)));
    const Raster r = decode_image(dir.path / "p.bmp");
    CHECK(r.channels == 3);
    REQUIRE(r.data.size() == 18);
    CHECK(r.data[0] == 0);
    CHECK(r.data[3] == 255);
    CHECK(r.data[6] == 10);
    CHECK(r.data[7] == 20);
    CHECK(r.data[8] == 30);
}

TEST_CASE("bmp with compression is rejected as unsupported") {
    TempDir dir("img-bmp-rle");
    std::vector<std::uint8_t> bytes = make_bmp24(2, 2, std::vector<std::uint8_t>(12, 0), 1);
    bytes[30] = 1;  // biCompression = BI_RLE8
    testutil::spew(dir.path / "rle.bmp", bytes_to_string(bytes));
    CHECK_THROWS_WITH_AS(decode_image(dir.path / "rle.bmp"), doctest::Contains("unsupported"),
                         DecodeError);
}

TEST_CASE("png grey and rgb round-trip") {
    TempDir dir("img-png");
    write_png_file(dir.path / "g.png", 2, 2, 1, 8, {1, 2, 3, 4});
    const Raster grey = decode_image(dir.path / "g.png");
    CHECK(grey.channels == 1);
    CHECK(grey.data == std::vector<std::uint8_t>{1, 2, 3, 4});

    const std::vector<std::uint8_t> rgb = {255, 0, 0, 0, 255, 0, 0, 0, 255, 50, 60, 70};
    write_png_file(dir.path / "c.png", 2, 2, 3, 8, rgb);
    const Raster color = decode_image(dir.path / "c.png");
    CHECK(color.channels == 3);
    CHECK(color.data == rgb);
}

TEST_CASE("16-bit png is stripped to 8 significant bits") {
    TempDir dir("img-png16");
    // Big-endian 16-bit samples 0x1234 and 0xFF00.
    write_png_file(dir.path / "w.png", 2, 1, 1, 16, {0x12, 0x34, 0xFF, 0x00});
    const Raster r = decode_image(dir.path / "w.png");
    CHECK(r.data == std::vector<std::uint8_t>{0x12, 0xFF});
}

TEST_CASE("palette png expands to rgb") {
    TempDir dir("img-png-pal");
    write_palette_png(dir.path / "p.png", 2, 1, {0, 1}, {{250, 10, 20}, {1, 2, 3}});
    const Raster r = decode_image(dir.path / "p.png");
    CHECK(r.channels == 3);
    CHECK(r.data == std::vector<std::uint8_t>{250, 10, 20, 1, 2, 3});
}

TEST_CASE("corrupt png names the file") {
    TempDir dir("img-png-bad");
    write_png_file(dir.path / "ok.png", 4, 4, 1, 8, std::vector<std::uint8_t>(16, 7));
    std::string bytes = testutil::slurp(dir.path / "ok.png");
    bytes.resize(bytes.size() / 2);
    testutil::spew(dir.path / "cut.png", bytes);
    CHECK_THROWS_WITH_AS(decode_image(dir.path / "cut.png"), doctest::Contains("cut.png"),
                         DecodeError);
}

TEST_CASE("jpeg grey decodes near the source values") {
    TempDir dir("img-jpg");
    write_jpeg_file(dir.path / "g.jpg", 8, 8, 1, std::vector<std::uint8_t>(64, 128));
    const Raster r = decode_image(dir.path / "g.jpg");
    CHECK(r.width == 8);
    CHECK(r.channels == 1);
    for (std::uint8_t v : r.data) {
        CHECK(v >= 126);
        CHECK(v <= 130);
    }
}

TEST_CASE("jpeg rgb decodes with three channels") {
    TempDir dir("img-jpg-rgb");
    write_jpeg_file(dir.path / "c.jpg", 8, 8, 3, std::vector<std::uint8_t>(192, 100));
    const Raster r = decode_image(dir.path / "c.jpg");
    CHECK(r.channels == 3);
    CHECK(r.data.size() == 192);
}

TEST_CASE("truncated jpeg raises a corrupt stream error") {
    TempDir dir("img-jpg-cut");
    write_jpeg_file(dir.path / "full.jpg", 32, 32, 1, std::vector<std::uint8_t>(1024, 77));
    std::string bytes = testutil::slurp(dir.path / "full.jpg");
    bytes.resize(bytes.size() / 2);
    testutil::spew(dir.path / "cut.jpg", bytes);
    CHECK_THROWS_WITH_AS(decode_image(dir.path / "cut.jpg"), doctest::Contains("corrupt stream"),
                         DecodeError);
}

TEST_CASE("unknown magic bytes are an unsupported format") {
    TempDir dir("img-unknown");
    testutil::spew(dir.path / "not.png", "just some text, no image here");
    CHECK_THROWS_WITH_AS(decode_image(dir.path / "not.png"),
                         doctest::Contains("unsupported format"), DecodeError);
}

TEST_CASE("missing file is an unreadable file error") {
    CHECK_THROWS_WITH_AS(decode_image("/nonexistent/nowhere.png"),
                         doctest::Contains("unreadable file"), DecodeError);
}

TEST_CASE("greyscale conversion uses rounded luma weights") {
    Raster r;
    r.width = 5;
    r.height = 1;
    r.channels = 3;
    r.data = {255, 0, 0,  0, 255, 0,  0, 0, 255,  250, 0, 0,  10, 20, 30};
    const GreyImage g = to_greyscale(r);
    REQUIRE(g.intensities.size() == 5);
    CHECK(g.intensities[0] == 76);   // 0.299 * 255 = 76.245
    CHECK(g.intensities[1] == 150);  // 0.587 * 255 = 149.685, rounds up
    CHECK(g.intensities[2] == 29);   // 0.114 * 255 = 29.07
    CHECK(g.intensities[3] == 75);   // 74.75 rounds up
    CHECK(g.intensities[4] == 18);   // 18.15 rounds down
}

TEST_CASE("single-channel input passes through conversion untouched") {
    Raster r;
    r.width = 2;
    r.height = 2;
    r.channels = 1;
    r.data = {9, 8, 7, 6};
    const GreyImage g = to_greyscale(r);
    CHECK(g.intensities == r.data);
}

TEST_CASE("intensity histogram counts every pixel") {
    GreyImage g;
    g.width = 2;
    g.height = 2;
    g.intensities = {0, 0, 255, 17};
    const IntensityHistogram h = intensity_histogram(g);
    CHECK(h.total == 4);
    CHECK(h.counts[0] == 2);
    CHECK(h.counts[255] == 1);
    CHECK(h.counts[17] == 1);
    CHECK(h.counts[1] == 0);
}

TEST_CASE("intensity histogram rejects inconsistent shapes") {
    GreyImage g;
    g.width = 2;
    g.height = 2;
    g.intensities = {1, 2, 3};
    CHECK_THROWS_AS(intensity_histogram(g), ShapeError);
}
