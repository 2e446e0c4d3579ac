// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "doctest.h"
#include "nofade/dataset.hpp"
#include "test_util.hpp"

using namespace nofade;
using testutil::TempDir;

namespace {

std::vector<GreyImage> random_images(int count, int side, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> level(0, 255);
    std::vector<GreyImage> images(static_cast<std::size_t>(count));
    for (GreyImage& img : images) {
        img.width = side;
        img.height = side;
        img.intensities.resize(static_cast<std::size_t>(side) * side);
        for (auto& p : img.intensities) p = static_cast<std::uint8_t>(level(rng));
    }
    return images;
}

}  // namespace

TEST_CASE("parallel batch entropy is bit-identical to serial") {
    const std::vector<GreyImage> images = random_images(500, 16, 61);
    const std::vector<double> serial = batch_entropy(images, ScanMode::serial);
    const std::vector<double> parallel = batch_entropy(images, ScanMode::parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i] == parallel[i]);
    }
}

TEST_CASE("parallel directory scan matches serial, failures included") {
    TempDir dir("par-scan");
    std::mt19937 rng(67);
    std::uniform_int_distribution<int> level(0, 255);
    for (int i = 0; i < 60; ++i) {
        std::vector<std::uint8_t> px(64);
        for (auto& p : px) p = static_cast<std::uint8_t>(level(rng));
        testutil::write_pgm(dir.path / ("img" + std::to_string(i) + ".pgm"), 8, 8, px);
    }
    testutil::spew(dir.path / "bad1.pgm", "P5\n8 8\n255\nshort");
    testutil::spew(dir.path / "bad2.pgm", "P5\n8 8\n255\nalso short");

    const std::vector<ImageEntry> entries = scan_dataset(dir.path, DatasetLayout::flat);
    const EntropyScan serial = scan_entropy(entries, ScanMode::serial);
    const EntropyScan parallel = scan_entropy(entries, ScanMode::parallel);

    REQUIRE(serial.samples.size() == parallel.samples.size());
    for (std::size_t i = 0; i < serial.samples.size(); ++i) {
        CHECK(serial.samples[i].image_id == parallel.samples[i].image_id);
        CHECK(serial.samples[i].entropy_bits == parallel.samples[i].entropy_bits);
    }
    REQUIRE(serial.failures.size() == 2);
    REQUIRE(parallel.failures.size() == 2);
    for (std::size_t i = 0; i < serial.failures.size(); ++i) {
        CHECK(serial.failures[i].image_id == parallel.failures[i].image_id);
    }
}

TEST_CASE("parallel pairwise distance sum is bit-identical to serial") {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> value(0.0, 8.0);
    std::vector<ClassDistribution> classes;
    for (int c = 0; c < 12; ++c) {
        EntropyDistribution d;
        for (int i = 0; i < 30; ++i) d.add(value(rng));
        classes.push_back({"c" + std::to_string(c), d});
    }
    CHECK(pairwise_jsd_sum(classes) == pairwise_jsd_sum_serial(classes));
}

TEST_CASE("repeated parallel runs agree with themselves") {
    const std::vector<GreyImage> images = random_images(200, 12, 73);
    const std::vector<double> first = batch_entropy(images, ScanMode::parallel);
    const std::vector<double> second = batch_entropy(images, ScanMode::parallel);
    CHECK(first == second);
}
