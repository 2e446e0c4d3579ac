// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

namespace nofade {

/// Decoded raster straight out of a codec: 1 channel (grey) or 3 (RGB),
/// 8 bits per sample, row-major, interleaved. Alpha is already dropped
/// and higher bit depths already right-shifted to 8 bits by the decoder.
struct Raster {
    int width = 0;
    int height = 0;
    int channels = 0;  // 1 or 3
    std::vector<std::uint8_t> data;  // width * height * channels

    std::size_t pixel_count() const
    {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }
};

/// Single-channel 8-bit image, the substrate of all entropy work.
/// Invariants: width >= 1, height >= 1, intensities.size() == width*height.
struct GreyImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> intensities;  // row-major

    std::size_t pixel_count() const
    {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }
};

/// 256-bin pixel-intensity counts. total == sum of counts == pixel count
/// of the source image.
struct IntensityHistogram {
    std::array<std::uint64_t, 256> counts{};
    std::uint64_t total = 0;
};

/// Decode a raster file (PNG, JPEG, PGM binary P5, BMP), dispatching on
/// the file's magic bytes. Alpha channels are dropped, palettes expanded,
/// 16-bit samples right-shifted to 8 bits. Throws DecodeError naming the
/// path for unreadable files, unsupported formats, and corrupt streams.
Raster decode_image(const std::filesystem::path& path);

/// BT.601 luma: round(0.299 R + 0.587 G + 0.114 B), clamped to [0, 255].
/// Single-channel rasters pass through unchanged.
GreyImage to_greyscale(const Raster& raster);

/// counts[k] = number of pixels with intensity k; total = width * height.
IntensityHistogram intensity_histogram(const GreyImage& image);

}  // namespace nofade
