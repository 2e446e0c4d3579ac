// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "nofade/csv.hpp"
#include "nofade/errors.hpp"
#include "nofade/report.hpp"
#include "nofade/scoring.hpp"

namespace nofade {

namespace {

std::string trim(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && (text[b] == ' ' || text[b] == '\t')) ++b;
    while (e > b && (text[e - 1] == ' ' || text[e - 1] == '\t' || text[e - 1] == '\r')) --e;
    return std::string(text.substr(b, e - b));
}

}  // namespace

void apply_config_file(PipelineConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file: " + path.string());
    }
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        auto fail = [&](const std::string& what) {
            throw ConfigError(path.string() + ":" + std::to_string(line_number) + ": " + what);
        };
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos) {
            fail("expected 'key = value'");
        }
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        const std::string value = trim(std::string_view(stripped).substr(eq + 1));
        if (value.empty()) fail("empty value for key '" + key + "'");

        if (key == "out-dir") {
            config.out_dir = value;
        } else if (key == "hardware-db") {
            config.hardware_db = value;
        } else if (key == "intensity") {
            const auto v = parse_double(value);
            if (!v || *v < 0.0) fail("intensity must be a non-negative number");
            config.carbon.intensity_t_per_kwh = *v;
        } else if (key == "cpu-watt-per-flop") {
            const auto v = parse_double(value);
            if (!v || *v < 0.0) fail("cpu-watt-per-flop must be a non-negative number");
            config.carbon.cpu_watt_per_flop = *v;
        } else if (key == "bins") {
            const auto v = parse_double(value);
            if (!v || *v < 1.0 || *v != static_cast<int>(*v)) {
                fail("bins must be a positive integer");
            }
            config.binning.bins = static_cast<int>(*v);
        } else if (key == "threads") {
            const auto v = parse_double(value);
            if (!v || *v < 0.0 || *v != static_cast<int>(*v)) {
                fail("threads must be a non-negative integer");
            }
            config.threads = static_cast<int>(*v);
        } else if (key == "mode") {
            if (value == "serial") {
                config.mode = ScanMode::serial;
            } else if (value == "parallel") {
                config.mode = ScanMode::parallel;
            } else {
                fail("mode must be 'serial' or 'parallel'");
            }
        } else {
            fail("unknown key '" + key + "'");
        }
    }
}

void apply_thread_limit(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

namespace {

/// Scans the dataset (and optional mask directory) and measures every
/// decodable image. Throws when nothing at all could be measured.
EntropyScan collect_samples(const PipelineConfig& config,
                            const std::filesystem::path& dataset_dir, DatasetLayout layout,
                            const std::optional<std::filesystem::path>& mask_dir) {
    const std::vector<ImageEntry> entries = scan_dataset(dataset_dir, layout);
    if (entries.empty()) {
        throw DegenerateInputError("no supported images under " + dataset_dir.string());
    }
    EntropyScan scan = scan_entropy(entries, config.mode);

    if (mask_dir) {
        std::vector<ImageEntry> masks = scan_dataset(*mask_dir, DatasetLayout::flat);
        for (ImageEntry& m : masks) {
            m.image_id = "masks/" + m.image_id;
        }
        EntropyScan mask_scan = scan_entropy(masks, config.mode);
        scan.samples.insert(scan.samples.end(), mask_scan.samples.begin(),
                            mask_scan.samples.end());
        scan.failures.insert(scan.failures.end(), mask_scan.failures.begin(),
                             mask_scan.failures.end());
    }
    if (scan.samples.empty()) {
        throw DecodeError("all " + std::to_string(scan.failures.size()) +
                          " images under " + dataset_dir.string() + " failed to decode");
    }
    return scan;
}

void write_out(const std::filesystem::path& path, const std::string& text,
               std::vector<std::filesystem::path>& files) {
    atomic_write_file(path, text);
    files.push_back(path);
}

}  // namespace

EntropyOutcome run_entropy(const PipelineConfig& config, const std::filesystem::path& dataset_dir,
                           DatasetLayout layout, const std::string& dataset_name,
                           const std::optional<std::filesystem::path>& mask_dir) {
    const EntropyScan scan = collect_samples(config, dataset_dir, layout, mask_dir);
    const EntropyReport report = build_entropy_report(scan.samples, dataset_name, config.binning);

    std::filesystem::create_directories(config.out_dir);
    EntropyOutcome outcome;
    outcome.image_count = scan.samples.size();
    outcome.failures = scan.failures;
    write_out(config.out_dir / "entropy_samples.csv", report.samples_csv, outcome.files);
    write_out(config.out_dir / "entropy_hist.csv", report.histogram_csv, outcome.files);
    write_out(config.out_dir / "entropy_hist.svg", report.histogram_svg, outcome.files);

    if (layout == DatasetLayout::classes) {
        std::map<std::string, std::vector<EntropySample>> per_class;
        for (const EntropySample& s : scan.samples) {
            per_class[class_label_of(s.image_id)].push_back(s);
        }
        for (const auto& [label, samples] : per_class) {
            write_out(config.out_dir / ("entropy_samples_" + label + ".csv"),
                      emit_samples_csv(samples), outcome.files);
        }
    }
    return outcome;
}

ComplexityOutcome run_complexity(const PipelineConfig& config,
                                 const std::filesystem::path& dataset_dir, Task task,
                                 const std::string& dataset_name,
                                 const std::optional<std::filesystem::path>& mask_dir) {
    ComplexityOutcome outcome;
    outcome.score.dataset = dataset_name;

    if (task == Task::classification) {
        const std::vector<ImageEntry> entries = scan_dataset(dataset_dir, DatasetLayout::classes);
        if (entries.empty()) {
            throw DegenerateInputError("no supported images under " + dataset_dir.string());
        }
        const EntropyScan scan = scan_entropy(entries, config.mode);
        outcome.image_count = scan.samples.size();
        outcome.failures = scan.failures;

        std::set<std::string> decoded_labels;
        for (const EntropySample& s : scan.samples) {
            decoded_labels.insert(class_label_of(s.image_id));
        }
        for (const ImageEntry& e : entries) {
            if (!decoded_labels.contains(e.class_label)) {
                throw DecodeError("class '" + e.class_label + "' has no decodable images");
            }
        }
        const std::vector<ClassDistribution> classes =
            group_into_classes(scan.samples, config.binning);
        outcome.score.score = classification_complexity(classes);
    } else {
        const EntropyScan scan = collect_samples(config, dataset_dir, DatasetLayout::flat, mask_dir);
        outcome.image_count = scan.samples.size();
        outcome.failures = scan.failures;
        outcome.score.score = segmentation_detection_complexity(scan.samples);
    }

    std::filesystem::create_directories(config.out_dir);
    outcome.scores_file = config.out_dir / "complexity_scores.csv";
    std::vector<DatasetScore> scores = load_scores(outcome.scores_file);
    upsert_score(scores, outcome.score);
    atomic_write_file(outcome.scores_file, emit_scores_csv(scores));
    return outcome;
}

namespace {

std::vector<CarbonRow> estimate_all(const std::vector<ModelRecord>& records,
                                    const HardwareDb& db, const CarbonConfig& config) {
    std::vector<CarbonRow> rows;
    rows.reserve(records.size());
    for (const ModelRecord& rec : records) {
        rows.push_back({rec, estimate_carbon(rec, db, config)});
    }
    return rows;
}

}  // namespace

CarbonOutcome run_carbon(const PipelineConfig& config,
                         const std::filesystem::path& registry_path) {
    const std::vector<ModelRecord> records = load_registry(registry_path);
    const HardwareDb db = HardwareDb::load(config.hardware_db);
    const std::vector<CarbonRow> rows = estimate_all(records, db, config.carbon);

    CarbonOutcome outcome;
    outcome.row_count = rows.size();
    for (const CarbonRow& r : rows) {
        outcome.total_power_wh += r.estimate.power_wh;
        outcome.total_co2_tonnes += r.estimate.co2_tonnes;
    }
    std::filesystem::create_directories(config.out_dir);
    outcome.carbon_csv = config.out_dir / "carbon.csv";
    atomic_write_file(outcome.carbon_csv, emit_carbon_csv(rows, config.carbon));
    return outcome;
}

namespace {

std::vector<ScoredModel> score_records(const std::vector<ModelRecord>& records,
                                       const HardwareDb& db, const PipelineConfig& config) {
    const std::vector<DatasetScore> scores = load_scores(config.out_dir / "complexity_scores.csv");
    std::vector<ScoredModel> scored;
    scored.reserve(records.size());
    for (const ModelRecord& rec : records) {
        const DatasetScore* found = nullptr;
        for (const DatasetScore& s : scores) {
            if (s.dataset == rec.dataset) {
                found = &s;
                break;
            }
        }
        if (!found) {
            throw LookupError("no complexity score for dataset '" + rec.dataset +
                              "'; run the complexity command on it first");
        }
        ScoredModel m;
        m.record = rec;
        m.estimate = estimate_carbon(rec, db, config.carbon);
        m.complexity = found->score;
        m.nofade = nofade_score(rec.metric_percent, m.complexity.value, rec.flops);
        scored.push_back(std::move(m));
    }
    return scored;
}

}  // namespace

NofadeOutcome run_nofade(const PipelineConfig& config,
                         const std::filesystem::path& registry_path) {
    const std::vector<ModelRecord> records = load_registry(registry_path);
    const HardwareDb db = HardwareDb::load(config.hardware_db);
    const std::vector<ScoredModel> scored = score_records(records, db, config);

    std::filesystem::create_directories(config.out_dir);
    NofadeOutcome outcome;
    outcome.row_count = scored.size();
    outcome.nofade_csv = config.out_dir / "nofade.csv";
    atomic_write_file(outcome.nofade_csv, emit_nofade_csv(scored));
    outcome.snapshot =
        persist_snapshot(config.out_dir / "snapshots", emit_snapshot_csv(scored, config.carbon));
    return outcome;
}

ReportOutcome run_report(const PipelineConfig& config, const std::filesystem::path& registry_path,
                         std::optional<Task> task_filter) {
    const std::vector<ModelRecord> records = load_registry(registry_path);
    const HardwareDb db = HardwareDb::load(config.hardware_db);

    std::vector<ModelRecord> picked;
    std::set<std::string> tasks;
    for (const ModelRecord& rec : records) {
        if (task_filter && rec.task != *task_filter) continue;
        picked.push_back(rec);
        tasks.insert(to_string(rec.task));
    }
    if (picked.empty()) {
        throw DegenerateInputError("no registry rows left for the score scatter");
    }
    if (tasks.size() > 1) {
        std::string listed;
        for (const std::string& t : tasks) {
            listed += listed.empty() ? "" : ", ";
            listed += t;
        }
        throw ValidationError("registry mixes tasks (" + listed +
                              ") whose metrics are not comparable; pass a task filter");
    }

    std::filesystem::create_directories(config.out_dir);
    ReportOutcome outcome;

    // The cost overview covers the whole registry; only the score
    // scatter is per-task.
    const std::vector<CarbonRow> all_rows = estimate_all(records, db, config.carbon);
    write_out(config.out_dir / "co2_scatter.csv", emit_co2_scatter_csv(all_rows), outcome.files);
    write_out(config.out_dir / "co2_scatter.svg", render_co2_scatter_svg(all_rows), outcome.files);

    const std::vector<ScoredModel> scored = score_records(picked, db, config);
    write_out(config.out_dir / "nofade_scatter.csv", emit_nofade_scatter_csv(scored),
              outcome.files);
    write_out(config.out_dir / "nofade_scatter.svg", render_nofade_scatter_svg(scored),
              outcome.files);
    return outcome;
}

}  // namespace nofade
