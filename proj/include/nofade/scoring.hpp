// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace nofade {

/// Performance-per-difficulty score of a model on a dataset:
///
///   score = metric_percent * complexity / log10(flops)
///
/// A model earns a higher score for doing better on a harder dataset
/// with less compute. metric_percent must lie in [0, 100]
/// (ValidationError) and flops must exceed 10 so the denominator stays
/// positive (DomainError). The score is:
///   - increasing in the metric,
///   - increasing in complexity (for a positive metric),
///   - decreasing in FLOPs (for positive metric and complexity).
double nofade_score(double metric_percent, double complexity_value, double flops);

}  // namespace nofade
