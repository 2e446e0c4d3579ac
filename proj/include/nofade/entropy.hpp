// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nofade/image.hpp"

namespace nofade {

/// Shannon entropy of the intensity histogram, in bits:
///   H = -sum over nonzero bins of (count/total) * log2(count/total)
/// Zero-count bins contribute nothing. Bounded by log2(number of nonzero
/// bins), so at most 8 bits for 8-bit images. Throws DegenerateInputError
/// on an empty histogram.
double shannon_entropy(const IntensityHistogram& hist);

/// One image's entropy, tagged with its identifier.
struct EntropySample {
    std::string image_id;
    double entropy_bits = 0.0;
};

/// Uniform binning of the entropy axis. The default (64 bins over
/// [0, 8] bits, edge k at k * 0.125) is shared by every distribution in
/// a run so they all live on the same support.
struct EntropyBinning {
    int bins = 64;
    double lo = 0.0;
    double hi = 8.0;

    bool operator==(const EntropyBinning&) const = default;

    double width() const { return (hi - lo) / bins; }
    double edge(int k) const { return lo + k * width(); }

    /// Bin index for a value, clamped into [0, bins-1] so the upper
    /// boundary (exactly 8 bits) lands in the top bin.
    int bin_of(double value) const;
};

/// Binned distribution of per-image entropies for a dataset or class.
struct EntropyDistribution {
    EntropyBinning binning;
    std::vector<std::uint64_t> counts;  // size == binning.bins
    std::uint64_t total = 0;

    explicit EntropyDistribution(EntropyBinning b = {})
        : binning(b), counts(static_cast<std::size_t>(b.bins), 0) {}

    void add(double entropy_bits);

    /// Associative, commutative merge of partial distributions.
    /// Throws ShapeError if the binnings differ.
    void merge(const EntropyDistribution& other);

    /// counts/total; sums to 1 within 1e-12. Throws DegenerateInputError
    /// when empty.
    std::vector<double> normalized() const;
};

EntropyDistribution bin_samples(std::span<const EntropySample> samples,
                                EntropyBinning binning = {});

/// Arithmetic mean of the sample entropies. Throws DegenerateInputError
/// on an empty list.
double mean_entropy(std::span<const EntropySample> samples);

}  // namespace nofade
