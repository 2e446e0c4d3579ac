// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/registry.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "nofade/errors.hpp"

namespace nofade {

Task parse_task(std::string_view text) {
    if (text == "classification") return Task::classification;
    if (text == "segmentation") return Task::segmentation;
    if (text == "detection") return Task::detection;
    throw ValidationError("unknown task: " + std::string(text));
}

const char* to_string(Task task) {
    switch (task) {
        case Task::classification: return "classification";
        case Task::segmentation: return "segmentation";
        case Task::detection: return "detection";
    }
    return "unknown";
}

namespace {

constexpr std::size_t kColumnCount = std::size(kRegistryColumns);

/// Maps each canonical column to its position in the table header.
/// Throws RegistryError when the header is not exactly the expected set.
std::map<std::string, std::size_t> column_index(const std::vector<std::string>& header) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (!index.emplace(header[i], i).second) {
            throw RegistryError("registry header repeats column: " + header[i]);
        }
    }
    std::string missing;
    for (const char* col : kRegistryColumns) {
        if (!index.contains(col)) {
            missing += missing.empty() ? "" : ", ";
            missing += col;
        }
    }
    if (!missing.empty()) {
        throw RegistryError("registry header is missing columns: " + missing);
    }
    if (index.size() != kColumnCount) {
        std::string extra;
        for (const auto& [name, pos] : index) {
            bool known = false;
            for (const char* col : kRegistryColumns) {
                if (name == col) known = true;
            }
            if (!known) {
                extra += extra.empty() ? "" : ", ";
                extra += name;
            }
        }
        throw RegistryError("registry header has unknown columns: " + extra);
    }
    return index;
}

}  // namespace

std::vector<ModelRecord> parse_registry(const CsvTable& table) {
    const auto index = column_index(table.header);
    std::vector<ModelRecord> records;
    std::vector<std::string> problems;
    std::set<std::pair<std::string, std::string>> seen;

    auto complain = [&problems](std::size_t row, const std::string& what) {
        problems.push_back("row " + std::to_string(row) + ": " + what);
    };

    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const std::vector<std::string>& row = table.rows[r];
        const std::size_t row_number = r + 2;  // header is row 1
        if (row.size() != kColumnCount) {
            complain(row_number, "expected " + std::to_string(kColumnCount) + " fields, got " +
                                     std::to_string(row.size()));
            continue;
        }
        auto field = [&](const char* name) -> const std::string& {
            return row[index.at(name)];
        };
        ModelRecord rec;
        bool ok = true;

        rec.model = field("model");
        if (rec.model.empty()) {
            complain(row_number, "model name is empty");
            ok = false;
        }
        rec.dataset = field("dataset");
        if (rec.dataset.empty()) {
            complain(row_number, "dataset name is empty");
            ok = false;
        }
        try {
            rec.task = parse_task(field("task"));
        } catch (const ValidationError& e) {
            complain(row_number, e.what());
            ok = false;
        }
        if (auto v = parse_double(field("metric_percent")); v && *v >= 0.0 && *v <= 100.0) {
            rec.metric_percent = *v;
        } else {
            complain(row_number, "metric_percent must be a number in [0, 100], got '" +
                                     field("metric_percent") + "'");
            ok = false;
        }
        if (auto v = parse_double(field("flops")); v && *v > 0.0 && std::isfinite(*v)) {
            rec.flops = *v;
        } else {
            complain(row_number, "flops must be a positive number, got '" + field("flops") + "'");
            ok = false;
        }
        if (auto v = parse_double(field("gpu_hours")); v && *v >= 0.0 && std::isfinite(*v)) {
            rec.gpu_hours = *v;
        } else {
            complain(row_number,
                     "gpu_hours must be a non-negative number, got '" + field("gpu_hours") + "'");
            ok = false;
        }
        rec.gpu_type = field("gpu_type");
        if (rec.gpu_type.empty()) {
            complain(row_number, "gpu_type is empty");
            ok = false;
        }
        rec.source = field("source");

        if (ok && !seen.emplace(rec.model, rec.dataset).second) {
            complain(row_number, "duplicate model and dataset pair: " + rec.model + ", " + rec.dataset);
            ok = false;
        }
        if (ok) records.push_back(std::move(rec));
    }

    if (!problems.empty()) {
        std::string message = "registry has " + std::to_string(problems.size()) + " invalid row(s):";
        for (const std::string& p : problems) {
            message += "\n  " + p;
        }
        throw RegistryError(message);
    }
    return records;
}

std::vector<ModelRecord> load_registry(const std::filesystem::path& path) {
    return parse_registry(read_csv_file(path));
}

std::string emit_registry(std::span<const ModelRecord> records) {
    std::string out;
    std::vector<std::string> header(kRegistryColumns, kRegistryColumns + kColumnCount);
    out += csv_join(header);
    out += '\n';
    for (const ModelRecord& rec : records) {
        out += csv_join({rec.model, to_string(rec.task), rec.dataset,
                         format_double(rec.metric_percent), format_double(rec.flops),
                         format_double(rec.gpu_hours), rec.gpu_type, rec.source});
        out += '\n';
    }
    return out;
}

}  // namespace nofade
