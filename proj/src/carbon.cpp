// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/carbon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nofade/csv.hpp"
#include "nofade/errors.hpp"

namespace nofade {

double watt_per_flop(const GpuSpec& spec) {
    if (spec.tdp_watts <= 0.0 || spec.peak_flops <= 0.0) {
        throw ValidationError("GPU spec for " + spec.name + " needs positive TDP and peak FLOPs");
    }
    return spec.tdp_watts / spec.peak_flops;
}

namespace {

std::string trim(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
    while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t' || text[e - 1] == '\r')) --e;
    return std::string(text.substr(b, e - b));
}

}  // namespace

HardwareDb HardwareDb::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open hardware database: " + path.string());
    }
    HardwareDb db;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t bar = stripped.find('|', start);
            fields.push_back(trim(std::string_view(stripped).substr(
                start, bar == std::string::npos ? std::string::npos : bar - start)));
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        auto fail = [&](const std::string& what) {
            throw ConfigError(path.string() + ":" + std::to_string(line_number) + ": " + what);
        };
        if (fields.size() != 4) {
            fail("expected 'name | tdp_watts | peak_flops | source', got " +
                 std::to_string(fields.size()) + " field(s)");
        }
        GpuSpec spec;
        spec.name = fields[0];
        if (spec.name.empty()) fail("GPU name is empty");
        if (auto v = parse_double(fields[1]); v && *v > 0.0 && std::isfinite(*v)) {
            spec.tdp_watts = *v;
        } else {
            fail("tdp_watts must be a positive number, got '" + fields[1] + "'");
        }
        if (auto v = parse_double(fields[2]); v && *v > 0.0 && std::isfinite(*v)) {
            spec.peak_flops = *v;
        } else {
            fail("peak_flops must be a positive number, got '" + fields[2] + "'");
        }
        spec.source = fields[3];
        for (const GpuSpec& existing : db.specs_) {
            if (existing.name == spec.name) fail("duplicate GPU name: " + spec.name);
        }
        db.specs_.push_back(std::move(spec));
    }
    std::sort(db.specs_.begin(), db.specs_.end(),
              [](const GpuSpec& a, const GpuSpec& b) { return a.name < b.name; });
    return db;
}

const GpuSpec& HardwareDb::find(std::string_view name) const {
    for (const GpuSpec& spec : specs_) {
        if (spec.name == name) return spec;
    }
    std::string known;
    for (const GpuSpec& spec : specs_) {
        known += known.empty() ? "" : ", ";
        known += spec.name;
    }
    throw LookupError("unknown GPU '" + std::string(name) + "'; database has: " + known);
}

double power_draw(double flops, double gpu_watt_per_flop, double cpu_watt_per_flop,
                  double gpu_hours) {
    if (!(flops > 0.0) || !std::isfinite(flops)) {
        throw ValidationError("power draw needs positive model FLOPs");
    }
    if (gpu_watt_per_flop < 0.0 || cpu_watt_per_flop < 0.0) {
        throw ValidationError("watt-per-FLOP rates cannot be negative");
    }
    if (gpu_hours < 0.0 || !std::isfinite(gpu_hours)) {
        throw ValidationError("GPU hours cannot be negative");
    }
    return flops * (gpu_watt_per_flop + cpu_watt_per_flop) * gpu_hours;
}

double co2_emissions(double power_wh, double intensity_t_per_kwh) {
    if (power_wh < 0.0) {
        throw ValidationError("energy cannot be negative");
    }
    if (intensity_t_per_kwh < 0.0) {
        throw ValidationError("carbon intensity cannot be negative");
    }
    return power_wh / 1000.0 * intensity_t_per_kwh;
}

CarbonEstimate estimate_carbon(const ModelRecord& record, const HardwareDb& db,
                               const CarbonConfig& config) {
    CarbonEstimate est;
    est.gpu_watt_per_flop = watt_per_flop(db.find(record.gpu_type));
    est.cpu_watt_per_flop = config.cpu_watt_per_flop;
    est.power_wh =
        power_draw(record.flops, est.gpu_watt_per_flop, est.cpu_watt_per_flop, record.gpu_hours);
    est.co2_tonnes = co2_emissions(est.power_wh, config.intensity_t_per_kwh);
    return est;
}

}  // namespace nofade
