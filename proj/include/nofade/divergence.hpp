// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nofade/entropy.hpp"

namespace nofade {

/// Kullback-Leibler divergence D(P || Q) in bits. P and Q must be equal
/// length and each sum to 1 within 1e-9. Throws SupportError when P puts
/// mass where Q has none (the divergence would be infinite).
double kl_divergence(std::span<const double> p, std::span<const double> q);

/// Jensen-Shannon distance: the square root of the Jensen-Shannon
/// divergence computed against the mixture M = (P + Q) / 2,
///
///   JSD(P, Q) = sqrt(D(P || M) / 2 + D(Q || M) / 2)
///
/// With base-2 logarithms it lies in [0, 1]. It is symmetric, zero only
/// for identical distributions, and satisfies the triangle inequality.
double jensen_shannon_distance(std::span<const double> p, std::span<const double> q);

/// Distance between two binned entropy distributions on the same support.
/// Throws ShapeError if the binnings differ, DegenerateInputError if
/// either side is empty.
double jensen_shannon_distance(const EntropyDistribution& a, const EntropyDistribution& b);

/// A class label paired with its entropy distribution.
struct ClassDistribution {
    std::string label;
    EntropyDistribution distribution;
};

/// Sum of Jensen-Shannon distances over all unordered pairs of classes,
/// n * (n - 1) / 2 terms in total. Pair distances are computed in
/// parallel into a pre-sized array and summed serially in pair order, so
/// the result is identical to pairwise_jsd_sum_serial bit for bit.
double pairwise_jsd_sum(std::span<const ClassDistribution> classes);

/// Plain double loop over the same pairs, kept as the reference the
/// parallel version is tested against.
double pairwise_jsd_sum_serial(std::span<const ClassDistribution> classes);

/// Dataset complexity, either the mean per-image entropy or the log of
/// the summed pairwise class distances.
struct ComplexityScore {
    enum class Kind { mean_entropy, log_sum_jsd };

    Kind kind = Kind::mean_entropy;
    double value = 0.0;
    std::optional<std::string> warning;
};

const char* to_string(ComplexityScore::Kind kind);

/// Inverse of to_string. Throws ValidationError on unknown text.
ComplexityScore::Kind parse_complexity_kind(std::string_view text);

/// Classification complexity: ln of the pairwise distance sum. Needs at
/// least two classes. A sum of zero (all classes indistinguishable) is a
/// DegenerateInputError; a sum below one yields a negative value and a
/// warning on the score rather than an error.
ComplexityScore classification_complexity(std::span<const ClassDistribution> classes);

/// Segmentation and detection complexity: mean per-image entropy.
ComplexityScore segmentation_detection_complexity(std::span<const EntropySample> samples);

}  // namespace nofade
