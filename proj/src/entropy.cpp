// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/entropy.hpp"

#include <cmath>

#include "nofade/errors.hpp"

namespace nofade {

double shannon_entropy(const IntensityHistogram& hist) {
    if (hist.total == 0) {
        throw DegenerateInputError("entropy of an empty histogram is undefined");
    }
    const double total = static_cast<double>(hist.total);
    double h = 0.0;
    for (std::uint64_t count : hist.counts) {
        if (count == 0) continue;
        const double p = static_cast<double>(count) / total;
        h -= p * std::log2(p);
    }
    // Rounding can push the sum a hair below zero when one bin holds
    // nearly everything; entropy itself is never negative.
    return h < 0.0 ? 0.0 : h;
}

int EntropyBinning::bin_of(double value) const {
    const int k = static_cast<int>(std::floor((value - lo) / width()));
    if (k < 0) return 0;
    if (k >= bins) return bins - 1;
    return k;
}

void EntropyDistribution::add(double entropy_bits) {
    counts[static_cast<std::size_t>(binning.bin_of(entropy_bits))] += 1;
    total += 1;
}

void EntropyDistribution::merge(const EntropyDistribution& other) {
    if (!(binning == other.binning)) {
        throw ShapeError("cannot merge entropy distributions with different binnings");
    }
    for (std::size_t k = 0; k < counts.size(); ++k) {
        counts[k] += other.counts[k];
    }
    total += other.total;
}

std::vector<double> EntropyDistribution::normalized() const {
    if (total == 0) {
        throw DegenerateInputError("cannot normalize an empty entropy distribution");
    }
    std::vector<double> p(counts.size());
    const double t = static_cast<double>(total);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        p[k] = static_cast<double>(counts[k]) / t;
    }
    return p;
}

EntropyDistribution bin_samples(std::span<const EntropySample> samples,
                                EntropyBinning binning) {
    EntropyDistribution dist(binning);
    for (const EntropySample& s : samples) {
        dist.add(s.entropy_bits);
    }
    return dist;
}

double mean_entropy(std::span<const EntropySample> samples) {
    if (samples.empty()) {
        throw DegenerateInputError("mean entropy of an empty sample list is undefined");
    }
    double sum = 0.0;
    for (const EntropySample& s : samples) {
        sum += s.entropy_bits;
    }
    return sum / static_cast<double>(samples.size());
}

}  // namespace nofade
