// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nofade/csv.hpp"
#include "nofade/errors.hpp"
#include "nofade/pipeline.hpp"

namespace {

std::string default_name(const std::string& dataset_dir) {
    const std::filesystem::path p = std::filesystem::path(dataset_dir).lexically_normal();
    const std::string name = p.filename().string();
    return name.empty() ? p.parent_path().filename().string() : name;
}

void print_failures(const std::vector<nofade::DecodeFailure>& failures) {
    for (const nofade::DecodeFailure& f : failures) {
        std::cerr << "warning: skipped " << f.image_id << ": " << f.reason << "\n";
    }
}

void print_files(const std::vector<std::filesystem::path>& files) {
    for (const std::filesystem::path& f : files) {
        std::cout << "wrote: " << f.string() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    nofade::PipelineConfig config;

    // Config files load first so explicit flags can override them:
    // NOFADE_CONFIG from the environment, then any --config argument.
    try {
        if (const char* env = std::getenv("NOFADE_CONFIG")) {
            nofade::apply_config_file(config, env);
        }
        for (int i = 1; i < argc; ++i) {
            const std::string_view arg = argv[i];
            if (arg == "--config" && i + 1 < argc) {
                nofade::apply_config_file(config, argv[i + 1]);
            } else if (arg.starts_with("--config=")) {
                nofade::apply_config_file(config, std::string(arg.substr(9)));
            }
        }
    } catch (const nofade::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App app{"dataset difficulty, training energy and performance-per-difficulty scores"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path,
                   "config file with 'key = value' lines (NOFADE_CONFIG is read first)");

    std::string out_dir = config.out_dir.string();
    std::string hardware_db = config.hardware_db.string();
    double intensity = config.carbon.intensity_t_per_kwh;
    double cpu_watt_per_flop = config.carbon.cpu_watt_per_flop;
    int bins = config.binning.bins;
    int threads = config.threads;
    std::string mode = config.mode == nofade::ScanMode::serial ? "serial" : "parallel";

    app.add_option("--out-dir", out_dir, "directory for emitted files")->capture_default_str();
    app.add_option("--hardware-db", hardware_db, "GPU spec table")->capture_default_str();
    app.add_option("--intensity", intensity, "grid carbon intensity, tonnes CO2 per kWh")
        ->capture_default_str();
    app.add_option("--cpu-watt-per-flop", cpu_watt_per_flop,
                   "host CPU draw attributed per FLOP of GPU throughput")
        ->capture_default_str();
    app.add_option("--bins", bins, "entropy histogram bins over [0, 8]")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--threads", threads, "parallel scan width, 0 for the runtime default")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--mode", mode, "image scan mode")
        ->check(CLI::IsMember({"serial", "parallel"}))
        ->capture_default_str();

    std::string dataset_dir;
    std::string dataset_name;
    std::string layout = "flat";
    std::string mask_dir;
    std::string registry;
    std::string task;

    CLI::App* entropy_cmd =
        app.add_subcommand("entropy", "per-image entropy of a dataset, with histogram");
    entropy_cmd->add_option("--dataset", dataset_dir, "dataset directory")
        ->required()
        ->check(CLI::ExistingDirectory);
    entropy_cmd->add_option("--layout", layout, "flat tree or one subdirectory per class")
        ->check(CLI::IsMember({"flat", "classes"}))
        ->capture_default_str();
    entropy_cmd->add_option("--name", dataset_name, "dataset name (default: directory name)");
    entropy_cmd->add_option("--mask-dir", mask_dir, "annotation masks to include in the scan")
        ->check(CLI::ExistingDirectory);

    CLI::App* complexity_cmd =
        app.add_subcommand("complexity", "dataset complexity score for a task");
    complexity_cmd->add_option("--dataset", dataset_dir, "dataset directory")
        ->required()
        ->check(CLI::ExistingDirectory);
    complexity_cmd->add_option("--task", task, "classification, segmentation or detection")
        ->required()
        ->check(CLI::IsMember({"classification", "segmentation", "detection"}));
    complexity_cmd->add_option("--name", dataset_name, "dataset name (default: directory name)");
    complexity_cmd->add_option("--mask-dir", mask_dir, "annotation masks to include in the scan")
        ->check(CLI::ExistingDirectory);

    CLI::App* carbon_cmd =
        app.add_subcommand("carbon", "training energy and emissions per registry row");
    carbon_cmd->add_option("--registry", registry, "model registry CSV")
        ->required()
        ->check(CLI::ExistingFile);

    CLI::App* nofade_cmd =
        app.add_subcommand("nofade", "score registry rows against stored dataset complexity");
    nofade_cmd->add_option("--registry", registry, "model registry CSV")
        ->required()
        ->check(CLI::ExistingFile);

    CLI::App* report_cmd = app.add_subcommand("report", "scatter figures for a registry");
    report_cmd->add_option("--registry", registry, "model registry CSV")
        ->required()
        ->check(CLI::ExistingFile);
    report_cmd->add_option("--task", task, "restrict the score scatter to one task")
        ->check(CLI::IsMember({"classification", "segmentation", "detection"}));

    CLI11_PARSE(app, argc, argv);

    config.out_dir = out_dir;
    config.hardware_db = hardware_db;
    config.carbon.intensity_t_per_kwh = intensity;
    config.carbon.cpu_watt_per_flop = cpu_watt_per_flop;
    config.binning.bins = bins;
    config.threads = threads;
    config.mode = mode == "serial" ? nofade::ScanMode::serial : nofade::ScanMode::parallel;
    nofade::apply_thread_limit(config.threads);

    const std::optional<std::filesystem::path> masks =
        mask_dir.empty() ? std::nullopt
                         : std::optional<std::filesystem::path>(mask_dir);

    try {
        if (*entropy_cmd) {
            const auto outcome = nofade::run_entropy(
                config, dataset_dir,
                layout == "classes" ? nofade::DatasetLayout::classes : nofade::DatasetLayout::flat,
                dataset_name.empty() ? default_name(dataset_dir) : dataset_name, masks);
            print_failures(outcome.failures);
            std::cout << "measured " << outcome.image_count << " image(s), skipped "
                      << outcome.failures.size() << "\n";
            print_files(outcome.files);
        } else if (*complexity_cmd) {
            const auto outcome = nofade::run_complexity(
                config, dataset_dir, nofade::parse_task(task),
                dataset_name.empty() ? default_name(dataset_dir) : dataset_name, masks);
            print_failures(outcome.failures);
            if (outcome.score.score.warning) {
                std::cerr << "warning: " << *outcome.score.score.warning << "\n";
            }
            std::cout << outcome.score.dataset << " " << to_string(outcome.score.score.kind)
                      << " = " << nofade::format_double(outcome.score.score.value) << " over "
                      << outcome.image_count << " image(s)\n";
            std::cout << "wrote: " << outcome.scores_file.string() << "\n";
        } else if (*carbon_cmd) {
            const auto outcome = nofade::run_carbon(config, registry);
            std::cout << "estimated " << outcome.row_count << " model(s): "
                      << nofade::format_double(outcome.total_power_wh) << " Wh, "
                      << nofade::format_double(outcome.total_co2_tonnes) << " t CO2\n";
            std::cout << "wrote: " << outcome.carbon_csv.string() << "\n";
        } else if (*nofade_cmd) {
            const auto outcome = nofade::run_nofade(config, registry);
            std::cout << "scored " << outcome.row_count << " model(s)\n";
            std::cout << "wrote: " << outcome.nofade_csv.string() << "\n";
            std::cout << "snapshot: " << outcome.snapshot.string() << "\n";
        } else if (*report_cmd) {
            const auto outcome = nofade::run_report(
                config, registry,
                task.empty() ? std::nullopt : std::optional(nofade::parse_task(task)));
            print_files(outcome.files);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
