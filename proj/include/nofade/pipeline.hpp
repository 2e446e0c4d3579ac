// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nofade/carbon.hpp"
#include "nofade/dataset.hpp"
#include "nofade/results.hpp"

namespace nofade {

/// Settings shared by every pipeline command, resolved by the command
/// line tool from its flags and an optional config file.
struct PipelineConfig {
    std::filesystem::path out_dir = "out";
    std::filesystem::path hardware_db = "data/hardware.db";
    CarbonConfig carbon;
    EntropyBinning binning;
    ScanMode mode = ScanMode::parallel;
    int threads = 0;  // 0 keeps the runtime default
};

/// Applies "key = value" lines from a config file onto the config.
/// Blank lines and '#' comments are skipped. Keys mirror the long
/// command line flags: out-dir, hardware-db, intensity,
/// cpu-watt-per-flop, bins, threads, mode. Unknown keys or bad values
/// raise ConfigError with the file and line.
void apply_config_file(PipelineConfig& config, const std::filesystem::path& path);

/// Caps the parallel scan width. No effect when threads <= 0 or the
/// build has no OpenMP.
void apply_thread_limit(int threads);

struct EntropyOutcome {
    std::size_t image_count = 0;
    std::vector<DecodeFailure> failures;
    std::vector<std::filesystem::path> files;
};

/// Scans a dataset, writes entropy_samples.csv, entropy_hist.csv and
/// entropy_hist.svg into out_dir, plus entropy_samples_<label>.csv per
/// class in the classes layout. mask_dir, when given, is scanned flat
/// and its images join the sample stream under a "masks/" id prefix.
EntropyOutcome run_entropy(const PipelineConfig& config, const std::filesystem::path& dataset_dir,
                           DatasetLayout layout, const std::string& dataset_name,
                           const std::optional<std::filesystem::path>& mask_dir);

struct ComplexityOutcome {
    DatasetScore score;
    std::size_t image_count = 0;
    std::vector<DecodeFailure> failures;
    std::filesystem::path scores_file;
};

/// Measures dataset complexity for the task: pairwise class distances
/// for classification (classes layout), mean entropy otherwise (flat
/// layout plus optional masks). Upserts the result into
/// out_dir/complexity_scores.csv.
ComplexityOutcome run_complexity(const PipelineConfig& config,
                                 const std::filesystem::path& dataset_dir, Task task,
                                 const std::string& dataset_name,
                                 const std::optional<std::filesystem::path>& mask_dir);

struct CarbonOutcome {
    std::filesystem::path carbon_csv;
    double total_power_wh = 0.0;
    double total_co2_tonnes = 0.0;
    std::size_t row_count = 0;
};

/// Estimates energy and emissions for every registry row and writes
/// out_dir/carbon.csv.
CarbonOutcome run_carbon(const PipelineConfig& config, const std::filesystem::path& registry_path);

struct NofadeOutcome {
    std::filesystem::path nofade_csv;
    std::filesystem::path snapshot;
    std::size_t row_count = 0;
};

/// Scores every registry row against the stored complexity of its
/// dataset, writes out_dir/nofade.csv and persists a snapshot of the
/// full result table under out_dir/snapshots. Rows whose dataset has no
/// stored score raise LookupError.
NofadeOutcome run_nofade(const PipelineConfig& config, const std::filesystem::path& registry_path);

struct ReportOutcome {
    std::vector<std::filesystem::path> files;
};

/// Writes the figures: co2_scatter.{csv,svg} over the whole registry,
/// and nofade_scatter.{csv,svg} over task_filter's rows. Because the
/// task metric changes meaning across tasks, the score scatter refuses a
/// mixed-task registry unless task_filter narrows it to one.
ReportOutcome run_report(const PipelineConfig& config, const std::filesystem::path& registry_path,
                         std::optional<Task> task_filter);

}  // namespace nofade
