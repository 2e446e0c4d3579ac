// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nofade/registry.hpp"

namespace nofade {

/// Published figures for one GPU model.
struct GpuSpec {
    std::string name;
    double tdp_watts = 0.0;
    double peak_flops = 0.0;  // peak throughput, FLOPs per second
    std::string source;
};

/// Watts drawn per FLOP of throughput at full load, TDP / peak.
double watt_per_flop(const GpuSpec& spec);

/// Lookup table of GPU specs loaded from a text file, one record per
/// line as "name | tdp_watts | peak_flops | source". Blank lines and
/// lines starting with '#' are skipped.
class HardwareDb {
  public:
    static HardwareDb load(const std::filesystem::path& path);

    /// Exact-name lookup. Throws LookupError naming the GPU and listing
    /// what the database does know.
    const GpuSpec& find(std::string_view name) const;

    const std::vector<GpuSpec>& specs() const { return specs_; }

  private:
    std::vector<GpuSpec> specs_;  // sorted by name
};

/// Knobs of the energy model that are site policy rather than physics:
/// grid carbon intensity and the per-FLOP draw attributed to the host
/// CPU alongside the GPU.
struct CarbonConfig {
    double intensity_t_per_kwh = 0.707e-3;  // metric tonnes CO2 per kWh
    double cpu_watt_per_flop = 1.0e-11;     // 120 W host per 1.2e13 FLOP/s
};

/// Energy drawn training a model, in watt-hours:
///
///   P = flops * (gpu_watt_per_flop + cpu_watt_per_flop) * gpu_hours
///
/// Model FLOPs stand in for how hard each second of training works the
/// hardware, so the estimate needs only the registry row and a GPU spec.
double power_draw(double flops, double gpu_watt_per_flop, double cpu_watt_per_flop,
                  double gpu_hours);

/// Emissions for the given energy, (power_wh / 1000) * intensity,
/// in metric tonnes of CO2.
double co2_emissions(double power_wh, double intensity_t_per_kwh);

struct CarbonEstimate {
    double gpu_watt_per_flop = 0.0;
    double cpu_watt_per_flop = 0.0;
    double power_wh = 0.0;
    double co2_tonnes = 0.0;
};

/// Full energy and emissions estimate for one registry row.
CarbonEstimate estimate_carbon(const ModelRecord& record, const HardwareDb& db,
                               const CarbonConfig& config = {});

}  // namespace nofade
