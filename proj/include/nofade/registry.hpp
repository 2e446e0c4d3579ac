// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nofade/csv.hpp"

namespace nofade {

enum class Task { classification, segmentation, detection };

/// Parses "classification", "segmentation" or "detection" (exact,
/// lowercase). Throws ValidationError otherwise.
Task parse_task(std::string_view text);

const char* to_string(Task task);

/// One published model result: what it scored, what it cost to train.
struct ModelRecord {
    std::string model;
    Task task = Task::classification;
    std::string dataset;
    double metric_percent = 0.0;  // accuracy, mIoU or mAP, in percent
    double flops = 0.0;           // forward-pass FLOPs of the model
    double gpu_hours = 0.0;
    std::string gpu_type;
    std::string source;           // free-text citation for the row
};

/// Columns a registry table must carry, in canonical emission order.
/// Input tables may order them differently but the set must match.
inline constexpr const char* kRegistryColumns[] = {
    "model", "task", "dataset", "metric_percent", "flops",
    "gpu_hours", "gpu_type", "source",
};

/// Validates and converts a parsed CSV table into records. Collects
/// every row problem (bad numbers, unknown task, empty names, duplicate
/// model and dataset pairs, wrong field count) and throws a single
/// RegistryError listing all of them, with 1-based row numbers counting
/// the header as row 1.
std::vector<ModelRecord> parse_registry(const CsvTable& table);

std::vector<ModelRecord> load_registry(const std::filesystem::path& path);

/// Renders records back to CSV in canonical column order.
std::string emit_registry(std::span<const ModelRecord> records);

}  // namespace nofade
