// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

#include "nofade/carbon.hpp"
#include "nofade/entropy.hpp"
#include "nofade/results.hpp"

namespace nofade {

/// Builders for the CSV tables and SVG figures the command line tool
/// writes. Every numeric cell goes through format_double, which prints
/// the shortest digits that parse back to the same double, so a reader
/// can recompute derived columns from the echoed inputs exactly and the
/// files come out byte-identical run over run.

std::string emit_samples_csv(std::span<const EntropySample> samples);

struct EntropyReport {
    std::string samples_csv;
    std::string histogram_csv;
    std::string histogram_svg;
};

EntropyReport build_entropy_report(std::span<const EntropySample> samples,
                                   const std::string& dataset_name, EntropyBinning binning = {});

/// A registry row with its energy estimate.
struct CarbonRow {
    ModelRecord record;
    CarbonEstimate estimate;
};

/// Per-model energy table, ending in a totals row whose model column is
/// "total" and whose text columns are blank.
std::string emit_carbon_csv(std::span<const CarbonRow> rows, const CarbonConfig& config);

std::string emit_co2_scatter_csv(std::span<const CarbonRow> rows);
std::string render_co2_scatter_svg(std::span<const CarbonRow> rows);

std::string emit_nofade_csv(std::span<const ScoredModel> rows);
std::string emit_nofade_scatter_csv(std::span<const ScoredModel> rows);
std::string render_nofade_scatter_svg(std::span<const ScoredModel> rows);

}  // namespace nofade
