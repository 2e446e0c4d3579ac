// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/report.hpp"

#include <algorithm>
#include <map>

#include "nofade/csv.hpp"
#include "nofade/svg.hpp"

namespace nofade {

std::string emit_samples_csv(std::span<const EntropySample> samples) {
    std::string out = "image_id,entropy_bits\n";
    for (const EntropySample& s : samples) {
        out += csv_join({s.image_id, format_double(s.entropy_bits)});
        out += '\n';
    }
    return out;
}

EntropyReport build_entropy_report(std::span<const EntropySample> samples,
                                   const std::string& dataset_name, EntropyBinning binning) {
    const EntropyDistribution dist = bin_samples(samples, binning);

    EntropyReport report;
    report.samples_csv = emit_samples_csv(samples);

    report.histogram_csv = "bin_lo_bits,bin_hi_bits,count\n";
    for (int k = 0; k < binning.bins; ++k) {
        report.histogram_csv +=
            csv_join({format_double(binning.edge(k)), format_double(binning.edge(k + 1)),
                      std::to_string(dist.counts[static_cast<std::size_t>(k)])});
        report.histogram_csv += '\n';
    }

    HistogramSpec spec;
    spec.kind = "entropy-histogram";
    spec.title = "Entropy distribution: " + dataset_name;
    spec.x_label = "entropy (bits)";
    spec.y_label = "images";
    spec.edges.reserve(static_cast<std::size_t>(binning.bins) + 1);
    for (int k = 0; k <= binning.bins; ++k) {
        spec.edges.push_back(binning.edge(k));
    }
    spec.counts = dist.counts;
    report.histogram_svg = render_histogram_svg(spec);
    return report;
}

std::string emit_carbon_csv(std::span<const CarbonRow> rows, const CarbonConfig& config) {
    std::string out =
        "model,dataset,task,gpu_type,flops,gpu_hours,power_wh,co2_tonnes,intensity_t_per_kwh\n";
    double total_wh = 0.0;
    double total_co2 = 0.0;
    for (const CarbonRow& r : rows) {
        out += csv_join({r.record.model, r.record.dataset, to_string(r.record.task),
                         r.record.gpu_type, format_double(r.record.flops),
                         format_double(r.record.gpu_hours), format_double(r.estimate.power_wh),
                         format_double(r.estimate.co2_tonnes),
                         format_double(config.intensity_t_per_kwh)});
        out += '\n';
        total_wh += r.estimate.power_wh;
        total_co2 += r.estimate.co2_tonnes;
    }
    out += csv_join({"total", "", "", "", "", "", format_double(total_wh),
                     format_double(total_co2), format_double(config.intensity_t_per_kwh)});
    out += '\n';
    return out;
}

std::string emit_co2_scatter_csv(std::span<const CarbonRow> rows) {
    std::string out = "model,dataset,task,co2_tonnes,metric_percent,power_wh,flops,gpu_hours\n";
    for (const CarbonRow& r : rows) {
        out += csv_join({r.record.model, r.record.dataset, to_string(r.record.task),
                         format_double(r.estimate.co2_tonnes),
                         format_double(r.record.metric_percent),
                         format_double(r.estimate.power_wh), format_double(r.record.flops),
                         format_double(r.record.gpu_hours)});
        out += '\n';
    }
    return out;
}

namespace {

/// Groups points into named series sorted by series name, keeping row
/// order within each series.
std::vector<Series> into_series(std::span<const std::pair<std::string, SeriesPoint>> tagged) {
    std::map<std::string, Series> by_name;
    for (const auto& [name, point] : tagged) {
        auto [it, inserted] = by_name.try_emplace(name);
        if (inserted) it->second.name = name;
        it->second.points.push_back(point);
    }
    std::vector<Series> series;
    series.reserve(by_name.size());
    for (auto& [name, s] : by_name) {
        series.push_back(std::move(s));
    }
    return series;
}

}  // namespace

std::string render_co2_scatter_svg(std::span<const CarbonRow> rows) {
    std::vector<std::pair<std::string, SeriesPoint>> tagged;
    tagged.reserve(rows.size());
    for (const CarbonRow& r : rows) {
        tagged.emplace_back(to_string(r.record.task),
                            SeriesPoint{r.estimate.co2_tonnes, r.record.metric_percent,
                                        r.record.model});
    }
    ScatterSpec spec;
    spec.kind = "co2-scatter";
    spec.title = "Task metric vs training CO2";
    spec.x_label = "training CO2 (tonnes)";
    spec.y_label = "task metric (%)";
    spec.x_scale = AxisScale::log10;
    spec.series = into_series(tagged);
    return render_scatter_svg(spec);
}

std::string emit_nofade_csv(std::span<const ScoredModel> rows) {
    std::string out =
        "model,dataset,task,metric_percent,complexity_kind,complexity_value,flops,nofade\n";
    for (const ScoredModel& m : rows) {
        out += csv_join({m.record.model, m.record.dataset, to_string(m.record.task),
                         format_double(m.record.metric_percent), to_string(m.complexity.kind),
                         format_double(m.complexity.value), format_double(m.record.flops),
                         format_double(m.nofade)});
        out += '\n';
    }
    return out;
}

std::string emit_nofade_scatter_csv(std::span<const ScoredModel> rows) {
    std::string out =
        "model,dataset,task,co2_tonnes,nofade,metric_percent,complexity_value,flops\n";
    for (const ScoredModel& m : rows) {
        out += csv_join({m.record.model, m.record.dataset, to_string(m.record.task),
                         format_double(m.estimate.co2_tonnes), format_double(m.nofade),
                         format_double(m.record.metric_percent),
                         format_double(m.complexity.value), format_double(m.record.flops)});
        out += '\n';
    }
    return out;
}

std::string render_nofade_scatter_svg(std::span<const ScoredModel> rows) {
    std::vector<std::pair<std::string, SeriesPoint>> tagged;
    tagged.reserve(rows.size());
    for (const ScoredModel& m : rows) {
        tagged.emplace_back(m.record.dataset,
                            SeriesPoint{m.estimate.co2_tonnes, m.nofade, m.record.model});
    }
    ScatterSpec spec;
    spec.kind = "nofade-scatter";
    spec.title = "NoFADE vs training CO2";
    spec.x_label = "training CO2 (tonnes)";
    spec.y_label = "NoFADE score";
    spec.x_scale = AxisScale::log10;
    spec.series = into_series(tagged);
    return render_scatter_svg(spec);
}

}  // namespace nofade
