// SPDX-License-Identifier: Apache-2.0
#include "podsum/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "podsum/errors.hpp"
#include "podsum/fsio.hpp"
#include "podsum/parallel.hpp"
#include "podsum/rouge.hpp"

namespace podsum {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::array<const char*, 9> kColumnNames = {
    "r1_r", "r1_p", "r1_f", "r2_r", "r2_p", "r2_f", "rl_r", "rl_p", "rl_f"};

// round(0.6*N) and round(0.2*N) in exact integer arithmetic; N/5 never has a
// fractional part of exactly .5, so the rounding mode cannot matter.
std::size_t train_size(std::size_t n) { return (3 * n + 2) / 5; }
std::size_t validation_size(std::size_t n) { return (n + 2) / 5; }

double round2_half_up(double v) {
    return std::floor(v * 100.0 + 0.5) / 100.0;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", round2_half_up(v));
    return buf;
}

std::array<double, 9> to_components(const RougeTriple& t) {
    return {t.r1.recall, t.r1.precision, t.r1.f1,
            t.r2.recall, t.r2.precision, t.r2.f1,
            t.rl.recall, t.rl.precision, t.rl.f1};
}

} // namespace

std::string to_string(Subset s) {
    switch (s) {
        case Subset::all: return "all";
        case Subset::train: return "train";
        case Subset::validation: return "validation";
        case Subset::test: return "test";
    }
    return "all";
}

Subset subset_from_string(const std::string& s) {
    if (s == "all") return Subset::all;
    if (s == "train") return Subset::train;
    if (s == "validation") return Subset::validation;
    if (s == "test") return Subset::test;
    throw config_error("unknown subset '" + s + "' (expected all|train|validation|test)");
}

SplitAssignment make_split(const Corpus& corpus, std::uint64_t seed) {
    const std::size_t n = corpus.episodes.size();
    if (n == 0) throw data_error("cannot split an empty corpus");

    std::vector<std::string> ids;
    ids.reserve(n);
    for (const auto& ep : corpus.episodes) ids.push_back(ep.episode_id);

    std::mt19937_64 gen(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::size_t j = static_cast<std::size_t>(gen() % (i + 1));
        std::swap(ids[i], ids[j]);
    }

    SplitAssignment split;
    split.seed = seed;
    const std::size_t ntrain = train_size(n);
    const std::size_t nval = validation_size(n);
    split.train.assign(ids.begin(), ids.begin() + ntrain);
    split.validation.assign(ids.begin() + ntrain, ids.begin() + ntrain + nval);
    split.test.assign(ids.begin() + ntrain + nval, ids.end());
    return split;
}

std::string split_to_json(const SplitAssignment& split) {
    ordered_json obj;
    obj["seed"] = split.seed;
    obj["train"] = split.train;
    obj["validation"] = split.validation;
    obj["test"] = split.test;
    return obj.dump(1) + "\n";
}

SplitAssignment split_from_json(const std::string& text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("malformed split file: ") + e.what());
    }
    SplitAssignment split;
    try {
        split.seed = obj.at("seed").get<std::uint64_t>();
        split.train = obj.at("train").get<std::vector<std::string>>();
        split.validation = obj.at("validation").get<std::vector<std::string>>();
        split.test = obj.at("test").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("malformed split file: ") + e.what());
    }
    return split;
}

void write_split(const SplitAssignment& split, const std::filesystem::path& path) {
    write_file_atomic(path, split_to_json(split));
}

SplitAssignment read_split(const std::filesystem::path& path) {
    return split_from_json(read_file(path));
}

ReportRow evaluate(const Corpus& corpus, const CandidateSummarySet& candidates,
                   const std::optional<std::vector<std::string>>& subset,
                   unsigned jobs) {
    std::unordered_map<std::string_view, const Episode*> by_id;
    by_id.reserve(corpus.episodes.size());
    for (const auto& ep : corpus.episodes) by_id.emplace(ep.episode_id, &ep);

    std::vector<std::string> selected;
    if (subset) {
        selected = *subset;
        std::unordered_set<std::string_view> unique;
        for (const auto& id : selected) {
            if (!by_id.count(id)) {
                throw data_error("subset id '" + id + "' not present in corpus");
            }
            if (!unique.insert(id).second) {
                throw data_error("subset lists episode id '" + id + "' twice");
            }
        }
    } else {
        selected.reserve(corpus.episodes.size());
        for (const auto& ep : corpus.episodes) selected.push_back(ep.episode_id);
    }
    if (selected.empty()) {
        throw data_error("no episodes selected for evaluation");
    }

    // Missing candidates are a hard error; silent skipping would corrupt
    // cross-system comparisons.
    std::vector<std::string> missing;
    for (const auto& id : selected) {
        if (!candidates.entries.count(id)) missing.push_back(id);
    }
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "system '" << candidates.system_name << "' is missing candidates for "
            << missing.size() << " episode(s):";
        for (std::size_t i = 0; i < missing.size() && i < 10; ++i) {
            msg << ' ' << missing[i];
        }
        if (missing.size() > 10) msg << " ...";
        throw data_error(msg.str());
    }

    // Fixed id-sorted order for the reduction, so the mean is bit-stable for
    // any evaluation order and worker count.
    std::sort(selected.begin(), selected.end());

    std::vector<std::array<double, 9>> per_episode(selected.size());
    parallel_for(selected.size(), jobs, [&](std::size_t i) {
        const Episode& ep = *by_id.at(selected[i]);
        const std::string& cand = candidates.entries.at(selected[i]);
        per_episode[i] = to_components(score_all(cand, ep.episode_description));
    });

    std::array<double, 9> sum{};
    for (const auto& comps : per_episode) {
        for (std::size_t k = 0; k < 9; ++k) sum[k] += comps[k];
    }

    ReportRow row;
    row.system = candidates.system_name;
    for (std::size_t k = 0; k < 9; ++k) {
        row.values[k] = sum[k] / static_cast<double>(selected.size()) * 100.0;
    }
    return row;
}

EvaluationReport evaluate_many(const Corpus& corpus,
                               const std::vector<CandidateSummarySet>& sets,
                               const std::optional<std::vector<std::string>>& subset,
                               Subset split_used, unsigned jobs) {
    EvaluationReport report;
    report.split_used = split_used;
    report.episodes_scored = subset ? subset->size() : corpus.episodes.size();

    std::vector<std::string> errors;
    for (const auto& set : sets) {
        try {
            report.rows.push_back(evaluate(corpus, set, subset, jobs));
        } catch (const std::exception& e) {
            errors.push_back(set.system_name + ": " + e.what());
        }
    }
    if (!errors.empty()) {
        std::string joined;
        for (const auto& e : errors) {
            if (!joined.empty()) joined += "; ";
            joined += e;
        }
        throw data_error(joined);
    }
    return report;
}

ReportFormat report_format_from_string(const std::string& s) {
    if (s == "markdown") return ReportFormat::markdown;
    if (s == "csv") return ReportFormat::csv;
    if (s == "json") return ReportFormat::json;
    throw config_error("unknown report format '" + s + "' (expected markdown|csv|json)");
}

namespace {

std::array<double, 9> column_maxima(const EvaluationReport& report) {
    std::array<double, 9> maxima{};
    maxima.fill(-1.0);
    for (const auto& row : report.rows) {
        for (std::size_t k = 0; k < 9; ++k) {
            maxima[k] = std::max(maxima[k], row.values[k]);
        }
    }
    return maxima;
}

std::string render_markdown(const EvaluationReport& report) {
    static constexpr std::array<const char*, 9> headers = {
        "R1-R", "R1-P", "R1-F", "R2-R", "R2-P", "R2-F", "RL-R", "RL-P", "RL-F"};
    auto maxima = column_maxima(report);

    std::ostringstream out;
    out << "| System |";
    for (const char* h : headers) out << ' ' << h << " |";
    out << "\n|:--|";
    for (std::size_t k = 0; k < 9; ++k) out << "--:|";
    out << '\n';
    for (const auto& row : report.rows) {
        out << "| " << row.system << " |";
        for (std::size_t k = 0; k < 9; ++k) {
            std::string cell = fmt2(row.values[k]);
            if (row.values[k] == maxima[k]) cell = "**" + cell + "**";
            out << ' ' << cell << " |";
        }
        out << '\n';
    }
    out << "\nepisodes scored: " << report.episodes_scored
        << ", subset: " << to_string(report.split_used) << '\n';
    return out.str();
}

std::string render_csv(const EvaluationReport& report) {
    std::ostringstream out;
    out << "system";
    for (const char* c : kColumnNames) out << ',' << c;
    out << '\n';
    for (const auto& row : report.rows) {
        out << row.system;
        for (std::size_t k = 0; k < 9; ++k) out << ',' << fmt2(row.values[k]);
        out << '\n';
    }
    return out.str();
}

std::string render_json(const EvaluationReport& report) {
    ordered_json obj;
    obj["subset"] = to_string(report.split_used);
    obj["episodes_scored"] = report.episodes_scored;
    ordered_json rows = ordered_json::array();
    for (const auto& row : report.rows) {
        ordered_json r;
        r["system"] = row.system;
        for (std::size_t k = 0; k < 9; ++k) r[kColumnNames[k]] = row.values[k];
        rows.push_back(std::move(r));
    }
    obj["rows"] = std::move(rows);
    return obj.dump(1) + "\n";
}

} // namespace

std::string render_report(const EvaluationReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::markdown: return render_markdown(report);
        case ReportFormat::csv: return render_csv(report);
        case ReportFormat::json: return render_json(report);
    }
    return {};
}

EvaluationReport report_from_json(const std::string& text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("malformed report json: ") + e.what());
    }
    EvaluationReport report;
    try {
        report.split_used = subset_from_string(obj.at("subset").get<std::string>());
        report.episodes_scored = obj.at("episodes_scored").get<std::size_t>();
        for (const auto& r : obj.at("rows")) {
            ReportRow row;
            row.system = r.at("system").get<std::string>();
            for (std::size_t k = 0; k < 9; ++k) {
                row.values[k] = r.at(kColumnNames[k]).get<double>();
            }
            report.rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("malformed report json: ") + e.what());
    }
    return report;
}

} // namespace podsum
