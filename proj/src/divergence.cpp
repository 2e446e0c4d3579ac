// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/divergence.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#include "nofade/errors.hpp"

namespace nofade {

namespace {

constexpr double kSumTolerance = 1e-9;

void check_probability_vector(std::span<const double> p, const char* name) {
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0 || !std::isfinite(v)) {
            throw ValidationError(std::string(name) + " has a negative or non-finite entry");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw ValidationError(std::string(name) + " does not sum to 1");
    }
}

}  // namespace

double kl_divergence(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw ShapeError("divergence needs equal-length distributions");
    }
    check_probability_vector(p, "first distribution");
    check_probability_vector(q, "second distribution");
    double d = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) continue;
        if (q[i] == 0.0) {
            throw SupportError("divergence is infinite: first distribution has mass where the second has none");
        }
        d += p[i] * std::log2(p[i] / q[i]);
    }
    return d < 0.0 ? 0.0 : d;
}

double jensen_shannon_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw ShapeError("divergence needs equal-length distributions");
    }
    check_probability_vector(p, "first distribution");
    check_probability_vector(q, "second distribution");
    double div = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = 0.5 * (p[i] + q[i]);
        // Both halves of the bin are combined before touching the
        // accumulator: addition commutes, so swapping p and q yields the
        // same increment sequence and the distance is symmetric to the
        // bit.
        const double from_p = p[i] > 0.0 ? 0.5 * p[i] * std::log2(p[i] / m) : 0.0;
        const double from_q = q[i] > 0.0 ? 0.5 * q[i] * std::log2(q[i] / m) : 0.0;
        div += from_p + from_q;
    }
    // The divergence lies in [0, 1] with base-2 logs; rounding can leave
    // the accumulated value a few ulps outside, which sqrt must not see.
    if (div < 0.0) div = 0.0;
    if (div > 1.0) div = 1.0;
    return std::sqrt(div);
}

double jensen_shannon_distance(const EntropyDistribution& a, const EntropyDistribution& b) {
    if (!(a.binning == b.binning)) {
        throw ShapeError("cannot compare entropy distributions with different binnings");
    }
    const std::vector<double> p = a.normalized();
    const std::vector<double> q = b.normalized();
    return jensen_shannon_distance(p, q);
}

double pairwise_jsd_sum(std::span<const ClassDistribution> classes) {
    const std::size_t n = classes.size();
    std::vector<std::vector<double>> normalized(n);
    for (std::size_t i = 0; i < n; ++i) {
        normalized[i] = classes[i].distribution.normalized();
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<double> distances(pairs.size(), 0.0);
#pragma omp parallel for
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(pairs.size()); ++k) {
        const auto [i, j] = pairs[static_cast<std::size_t>(k)];
        distances[static_cast<std::size_t>(k)] =
            jensen_shannon_distance(normalized[i], normalized[j]);
    }
    // Summing in pair order makes the result independent of how the loop
    // above was scheduled, and equal to the serial reference.
    double sum = 0.0;
    for (double d : distances) {
        sum += d;
    }
    return sum;
}

double pairwise_jsd_sum_serial(std::span<const ClassDistribution> classes) {
    const std::size_t n = classes.size();
    std::vector<std::vector<double>> normalized(n);
    for (std::size_t i = 0; i < n; ++i) {
        normalized[i] = classes[i].distribution.normalized();
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += jensen_shannon_distance(normalized[i], normalized[j]);
        }
    }
    return sum;
}

const char* to_string(ComplexityScore::Kind kind) {
    switch (kind) {
        case ComplexityScore::Kind::mean_entropy: return "mean-entropy";
        case ComplexityScore::Kind::log_sum_jsd: return "log-sum-jsd";
    }
    return "unknown";
}

ComplexityScore::Kind parse_complexity_kind(std::string_view text) {
    if (text == "mean-entropy") return ComplexityScore::Kind::mean_entropy;
    if (text == "log-sum-jsd") return ComplexityScore::Kind::log_sum_jsd;
    throw ValidationError("unknown complexity kind: " + std::string(text));
}

ComplexityScore classification_complexity(std::span<const ClassDistribution> classes) {
    if (classes.size() < 2) {
        throw DegenerateInputError("classification complexity needs at least two classes");
    }
    const double sum = pairwise_jsd_sum(classes);
    if (sum <= 0.0) {
        throw DegenerateInputError("pairwise class distances sum to zero: classes are indistinguishable");
    }
    ComplexityScore score;
    score.kind = ComplexityScore::Kind::log_sum_jsd;
    score.value = std::log(sum);
    if (sum < 1.0) {
        score.warning = "pairwise distance sum is below one, so its log is negative";
    }
    return score;
}

ComplexityScore segmentation_detection_complexity(std::span<const EntropySample> samples) {
    ComplexityScore score;
    score.kind = ComplexityScore::Kind::mean_entropy;
    score.value = mean_entropy(samples);
    return score;
}

}  // namespace nofade
