// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/scoring.hpp"

#include <cmath>

#include "nofade/errors.hpp"

namespace nofade {

double nofade_score(double metric_percent, double complexity_value, double flops) {
    if (!(metric_percent >= 0.0 && metric_percent <= 100.0)) {
        throw ValidationError("metric_percent must lie in [0, 100]");
    }
    if (!std::isfinite(complexity_value)) {
        throw ValidationError("complexity must be finite");
    }
    if (!(flops > 10.0) || !std::isfinite(flops)) {
        throw DomainError("flops must exceed 10 for a positive log10 denominator");
    }
    return metric_percent * complexity_value / std::log10(flops);
}

}  // namespace nofade
