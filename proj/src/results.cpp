// Copyright (c) 2026 The nofade authors
// SPDX-License-Identifier: Apache-2.0

#include "nofade/results.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <ctime>

#include "nofade/csv.hpp"
#include "nofade/errors.hpp"

namespace nofade {

namespace {

const std::vector<std::string> kScoreHeader = {"dataset", "kind", "value", "warning"};

}  // namespace

std::vector<DatasetScore> load_scores(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return {};
    const CsvTable table = read_csv_file(path);
    if (table.header != kScoreHeader) {
        throw ValidationError("score store " + path.string() +
                              " has an unexpected header; expected dataset,kind,value,warning");
    }
    std::vector<DatasetScore> scores;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        if (row.size() != kScoreHeader.size()) {
            throw ValidationError("score store " + path.string() + " row " +
                                  std::to_string(r + 2) + " has the wrong field count");
        }
        DatasetScore s;
        s.dataset = row[0];
        s.score.kind = parse_complexity_kind(row[1]);
        const auto value = parse_double(row[2]);
        if (!value) {
            throw ValidationError("score store " + path.string() + " row " +
                                  std::to_string(r + 2) + " has a non-numeric value");
        }
        s.score.value = *value;
        if (!row[3].empty()) s.score.warning = row[3];
        scores.push_back(std::move(s));
    }
    return scores;
}

void upsert_score(std::vector<DatasetScore>& scores, DatasetScore score) {
    for (DatasetScore& existing : scores) {
        if (existing.dataset == score.dataset) {
            existing = std::move(score);
            std::sort(scores.begin(), scores.end(),
                      [](const DatasetScore& a, const DatasetScore& b) {
                          return a.dataset < b.dataset;
                      });
            return;
        }
    }
    scores.push_back(std::move(score));
    std::sort(scores.begin(), scores.end(),
              [](const DatasetScore& a, const DatasetScore& b) { return a.dataset < b.dataset; });
}

std::string emit_scores_csv(std::span<const DatasetScore> scores) {
    std::string out = csv_join(kScoreHeader) + "\n";
    for (const DatasetScore& s : scores) {
        out += csv_join({s.dataset, to_string(s.score.kind), format_double(s.score.value),
                         s.score.warning.value_or("")});
        out += '\n';
    }
    return out;
}

std::string emit_snapshot_csv(std::span<const ScoredModel> rows, const CarbonConfig& config) {
    std::string out =
        "model,task,dataset,metric_percent,flops,gpu_hours,gpu_type,power_wh,"
        "co2_tonnes,intensity_t_per_kwh,complexity_kind,complexity_value,nofade\n";
    for (const ScoredModel& m : rows) {
        out += csv_join({m.record.model, to_string(m.record.task), m.record.dataset,
                         format_double(m.record.metric_percent), format_double(m.record.flops),
                         format_double(m.record.gpu_hours), m.record.gpu_type,
                         format_double(m.estimate.power_wh), format_double(m.estimate.co2_tonnes),
                         format_double(config.intensity_t_per_kwh), to_string(m.complexity.kind),
                         format_double(m.complexity.value), format_double(m.nofade)});
        out += '\n';
    }
    return out;
}

namespace {

/// Exclusive advisory lock on <dir>/.lock, released on destruction.
class StoreLock {
  public:
    explicit StoreLock(const std::filesystem::path& dir) {
        const std::filesystem::path lock_path = dir / ".lock";
        fd_ = ::open(lock_path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
        if (fd_ < 0) {
            throw IoError("cannot open lock file: " + lock_path.string());
        }
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw IoError("cannot lock snapshot store: " + dir.string());
        }
    }
    ~StoreLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    StoreLock(const StoreLock&) = delete;
    StoreLock& operator=(const StoreLock&) = delete;

  private:
    int fd_;
};

std::string utc_stamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

}  // namespace

std::filesystem::path persist_snapshot(const std::filesystem::path& store_dir,
                                       const std::string& csv_text) {
    std::filesystem::create_directories(store_dir);
    StoreLock lock(store_dir);

    const std::string prefix = "snapshot-" + content_hash(csv_text) + "-";
    for (const auto& e : std::filesystem::directory_iterator(store_dir)) {
        const std::string name = e.path().filename().string();
        if (name.starts_with(prefix) && name.ends_with(".csv")) {
            return e.path();
        }
    }
    const std::filesystem::path path = store_dir / (prefix + utc_stamp() + ".csv");
    atomic_write_file(path, csv_text);
    return path;
}

}  // namespace nofade
