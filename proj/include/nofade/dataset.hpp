// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nofade/divergence.hpp"
#include "nofade/entropy.hpp"
#include "nofade/image.hpp"

namespace nofade {

/// One image file found in a dataset scan. The id is the path relative
/// to the dataset root with '/' separators on every platform, which keeps
/// emitted CSV identical across machines.
struct ImageEntry {
    std::string image_id;
    std::filesystem::path path;
    std::string class_label;  // empty in flat layout
};

/// How the dataset directory is organized: a flat tree of images, or one
/// immediate subdirectory per class.
enum class DatasetLayout { flat, classes };

/// Lists supported image files (.png, .jpg, .jpeg, .pgm, .bmp, any case)
/// under the root, sorted by image id. In the classes layout only files
/// under an immediate subdirectory are taken and the subdirectory name
/// becomes the class label. Throws IoError when root is not a directory.
std::vector<ImageEntry> scan_dataset(const std::filesystem::path& root, DatasetLayout layout);

/// Decode the image at path and return its intensity entropy in bits.
double image_entropy(const std::filesystem::path& path);

/// An image that could not be decoded, with the reason it was skipped.
struct DecodeFailure {
    std::string image_id;
    std::string reason;
};

enum class ScanMode { serial, parallel };

struct EntropyScan {
    std::vector<EntropySample> samples;    // in entry order
    std::vector<DecodeFailure> failures;   // in entry order
};

/// Per-image entropy over a list of entries. The parallel mode decodes
/// and measures images concurrently but writes each result into its
/// entry's slot, then collects the slots serially, so sample order and
/// values match the serial mode exactly. Images that fail to decode are
/// reported in failures instead of aborting the scan.
EntropyScan scan_entropy(std::span<const ImageEntry> entries, ScanMode mode);

/// Entropy of already-decoded images, one value per image in input
/// order. Same serial/parallel equivalence as scan_entropy.
std::vector<double> batch_entropy(std::span<const GreyImage> images, ScanMode mode);

/// Class label encoded in an image id, the text before the first '/'.
/// Throws ValidationError if the id has no directory prefix.
std::string class_label_of(std::string_view image_id);

/// Groups samples by their class label prefix and bins each group into
/// an entropy distribution. Labels come out sorted.
std::vector<ClassDistribution> group_into_classes(std::span<const EntropySample> samples,
                                                  EntropyBinning binning = {});

}  // namespace nofade
