// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>

#include "nofade/errors.hpp"

namespace nofade {

namespace {

bool has_supported_extension(const std::filesystem::path& p) {
    std::string ext = p.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return ext == ".png" || ext == ".jpg" || ext == ".jpeg" || ext == ".pgm" || ext == ".bmp";
}

void collect_files(const std::filesystem::path& root, const std::filesystem::path& dir,
                   const std::string& label, std::vector<ImageEntry>& out) {
    for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
        if (!e.is_regular_file() || !has_supported_extension(e.path())) continue;
        ImageEntry entry;
        entry.path = e.path();
        entry.image_id = e.path().lexically_relative(root).generic_string();
        entry.class_label = label;
        out.push_back(std::move(entry));
    }
}

}  // namespace

std::vector<ImageEntry> scan_dataset(const std::filesystem::path& root, DatasetLayout layout) {
    if (!std::filesystem::is_directory(root)) {
        throw IoError("dataset root is not a directory: " + root.string());
    }
    std::vector<ImageEntry> entries;
    if (layout == DatasetLayout::flat) {
        collect_files(root, root, "", entries);
    } else {
        for (const auto& e : std::filesystem::directory_iterator(root)) {
            if (!e.is_directory()) continue;
            collect_files(root, e.path(), e.path().filename().string(), entries);
        }
    }
    // Directory iteration order is unspecified; emitted files must not
    // depend on it.
    std::sort(entries.begin(), entries.end(),
              [](const ImageEntry& a, const ImageEntry& b) { return a.image_id < b.image_id; });
    return entries;
}

double image_entropy(const std::filesystem::path& path) {
    const Raster raster = decode_image(path);
    const GreyImage grey = to_greyscale(raster);
    return shannon_entropy(intensity_histogram(grey));
}

EntropyScan scan_entropy(std::span<const ImageEntry> entries, ScanMode mode) {
    const std::int64_t n = static_cast<std::int64_t>(entries.size());
    std::vector<std::optional<double>> values(entries.size());
    std::vector<std::string> reasons(entries.size());
    if (mode == ScanMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                values[static_cast<std::size_t>(i)] =
                    image_entropy(entries[static_cast<std::size_t>(i)].path);
            } catch (const std::exception& e) {
                reasons[static_cast<std::size_t>(i)] = e.what();
            }
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            try {
                values[static_cast<std::size_t>(i)] =
                    image_entropy(entries[static_cast<std::size_t>(i)].path);
            } catch (const std::exception& e) {
                reasons[static_cast<std::size_t>(i)] = e.what();
            }
        }
    }
    EntropyScan scan;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (values[i]) {
            scan.samples.push_back({entries[i].image_id, *values[i]});
        } else {
            scan.failures.push_back({entries[i].image_id, reasons[i]});
        }
    }
    return scan;
}

std::vector<double> batch_entropy(std::span<const GreyImage> images, ScanMode mode) {
    std::vector<double> out(images.size(), 0.0);
    const std::int64_t n = static_cast<std::int64_t>(images.size());
    if (mode == ScanMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] =
                shannon_entropy(intensity_histogram(images[static_cast<std::size_t>(i)]));
        }
    } else {
        for (std::int64_t i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] =
                shannon_entropy(intensity_histogram(images[static_cast<std::size_t>(i)]));
        }
    }
    return out;
}

std::string class_label_of(std::string_view image_id) {
    const std::size_t slash = image_id.find('/');
    if (slash == std::string_view::npos || slash == 0) {
        throw ValidationError("image id has no class prefix: " + std::string(image_id));
    }
    return std::string(image_id.substr(0, slash));
}

std::vector<ClassDistribution> group_into_classes(std::span<const EntropySample> samples,
                                                  EntropyBinning binning) {
    std::map<std::string, EntropyDistribution> groups;
    for (const EntropySample& s : samples) {
        auto [it, inserted] = groups.try_emplace(class_label_of(s.image_id), binning);
        it->second.add(s.entropy_bits);
    }
    std::vector<ClassDistribution> classes;
    classes.reserve(groups.size());
    for (auto& [label, dist] : groups) {
        classes.push_back({label, std::move(dist)});
    }
    return classes;
}

}  // namespace nofade
