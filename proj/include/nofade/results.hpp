// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nofade/carbon.hpp"
#include "nofade/divergence.hpp"
#include "nofade/registry.hpp"

namespace nofade {

/// A dataset's complexity as kept in the score store.
struct DatasetScore {
    std::string dataset;
    ComplexityScore score;
};

/// Reads a score store CSV (dataset,kind,value,warning). A missing file
/// is an empty store; a malformed one is a ValidationError.
std::vector<DatasetScore> load_scores(const std::filesystem::path& path);

/// Inserts or replaces the entry for score.dataset, keeping the store
/// sorted by dataset name.
void upsert_score(std::vector<DatasetScore>& scores, DatasetScore score);

std::string emit_scores_csv(std::span<const DatasetScore> scores);

/// Everything known about one model once scored: the registry row, its
/// energy estimate, its dataset's complexity and the resulting score.
struct ScoredModel {
    ModelRecord record;
    CarbonEstimate estimate;
    ComplexityScore complexity;
    double nofade = 0.0;
};

std::string emit_snapshot_csv(std::span<const ScoredModel> rows, const CarbonConfig& config);

/// Writes csv_text into the store directory as
/// snapshot-<hash16>-<utc stamp>.csv, where hash16 is the 64-bit FNV-1a
/// of the content. If a snapshot with the same hash already exists it is
/// reused instead of writing a duplicate. The store is guarded with an
/// advisory lock so concurrent writers do not race. Returns the
/// snapshot's path.
std::filesystem::path persist_snapshot(const std::filesystem::path& store_dir,
                                       const std::string& csv_text);

}  // namespace nofade
