// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

// Writes the small synthetic datasets bundled under data/datasets:
//
//   synthcls   3 classes x 8 images, 24x24, built so the classes land in
//              disjoint entropy bins (constant images near 0 bits,
//              two-tone images below 1 bit, noise near 8 bits)
//   synthseg   12 flat images, 32x32, covering entropies 0 through ~7.6
//   synthdet   6 flat images, 32x32, boxes on backgrounds plus noise
//
// Generation is seeded and clock-free, so rerunning the tool reproduces
// the files byte for byte.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct Pgm {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    Pgm(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

void write_pgm(const std::filesystem::path& path, const Pgm& img) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "P5\n" << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.pixels.data()),
              static_cast<std::streamsize>(img.pixels.size()));
}

class Lcg {
  public:
    explicit Lcg(std::uint64_t seed) : state_(seed * 0x9e3779b97f4a7c15ULL + 1) {}

    std::uint8_t next_byte() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<std::uint8_t>(state_ >> 33);
    }

  private:
    std::uint64_t state_;
};

Pgm constant(int side, std::uint8_t value) {
    Pgm img(side, side);
    for (auto& p : img.pixels) p = value;
    return img;
}

/// Two-tone image: the first `count` pixels in row order get `fg`, the
/// rest `bg`.
Pgm two_tone(int side, int count, std::uint8_t fg, std::uint8_t bg) {
    Pgm img(side, side);
    for (int i = 0; i < side * side; ++i) {
        img.pixels[static_cast<std::size_t>(i)] = i < count ? fg : bg;
    }
    return img;
}

Pgm noise(int side, std::uint64_t seed) {
    Pgm img(side, side);
    Lcg rng(seed);
    for (auto& p : img.pixels) p = rng.next_byte();
    return img;
}

Pgm checkerboard(int side) {
    Pgm img(side, side);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            img.at(x, y) = ((x + y) & 1) ? 200 : 40;
        }
    }
    return img;
}

/// 8x8 blocks in `tones` evenly used levels, giving log2(tones) bits.
Pgm block_tones(int side, int tones) {
    Pgm img(side, side);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            const int block = (x >> 3) + (side >> 3) * (y >> 3);
            img.at(x, y) = static_cast<std::uint8_t>((block % tones) * (256 / tones) + 8);
        }
    }
    return img;
}

Pgm row_gradient(int side) {
    Pgm img(side, side);
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            img.at(x, y) = static_cast<std::uint8_t>(y * (256 / side));
        }
    }
    return img;
}

Pgm box_scene(int side, std::uint64_t seed) {
    Pgm img(side, side);
    Lcg rng(seed);
    for (auto& p : img.pixels) p = 20;
    const int boxes = 1 + static_cast<int>(rng.next_byte() % 3);
    for (int b = 0; b < boxes; ++b) {
        const int size = 4 + (rng.next_byte() % 8);
        const int x0 = rng.next_byte() % (side - size);
        const int y0 = rng.next_byte() % (side - size);
        const std::uint8_t value = static_cast<std::uint8_t>(120 + (rng.next_byte() % 120));
        for (int y = y0; y < y0 + size; ++y) {
            for (int x = x0; x < x0 + size; ++x) {
                img.at(x, y) = value;
            }
        }
    }
    return img;
}

std::string image_name(int index) {
    return "img0" + std::to_string(index / 10) + std::to_string(index % 10) + ".pgm";
}

}  // namespace

int main(int argc, char** argv) {
    const std::filesystem::path root = argc > 1 ? argv[1] : "data/datasets";
    try {
        // synthcls: three classes whose entropy distributions do not
        // overlap, so every pairwise class distance is exactly 1.
        for (int i = 0; i < 8; ++i) {
            write_pgm(root / "synthcls" / "flat" / image_name(i),
                      constant(24, static_cast<std::uint8_t>(32 * i)));
        }
        for (int i = 0; i < 8; ++i) {
            // 24x24 = 576 pixels; 144 + 48 i foreground pixels keeps the
            // two-tone entropy between 0.65 and 1 bit.
            write_pgm(root / "synthcls" / "bars" / image_name(i),
                      two_tone(24, 144 + 48 * i, 230, 25));
        }
        for (int i = 0; i < 8; ++i) {
            write_pgm(root / "synthcls" / "noise" / image_name(i),
                      noise(24, 100 + static_cast<std::uint64_t>(i)));
        }

        // synthseg: flat images spanning the entropy axis.
        write_pgm(root / "synthseg" / image_name(0), constant(32, 10));
        write_pgm(root / "synthseg" / image_name(1), constant(32, 200));
        write_pgm(root / "synthseg" / image_name(2), checkerboard(32));
        write_pgm(root / "synthseg" / image_name(3), checkerboard(32));
        write_pgm(root / "synthseg" / image_name(4), block_tones(32, 4));
        write_pgm(root / "synthseg" / image_name(5), block_tones(32, 4));
        write_pgm(root / "synthseg" / image_name(6), block_tones(32, 16));
        write_pgm(root / "synthseg" / image_name(7), block_tones(32, 16));
        write_pgm(root / "synthseg" / image_name(8), row_gradient(32));
        write_pgm(root / "synthseg" / image_name(9), row_gradient(32));
        write_pgm(root / "synthseg" / image_name(10), noise(32, 200));
        write_pgm(root / "synthseg" / image_name(11), noise(32, 201));

        // synthdet: box scenes plus noise.
        for (int i = 0; i < 4; ++i) {
            write_pgm(root / "synthdet" / image_name(i),
                      box_scene(32, 300 + static_cast<std::uint64_t>(i)));
        }
        write_pgm(root / "synthdet" / image_name(4), noise(32, 304));
        write_pgm(root / "synthdet" / image_name(5), noise(32, 305));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << "wrote datasets under " << root.string() << "\n";
    return 0;
}
