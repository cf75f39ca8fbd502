// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "podsum/corpus.hpp"

namespace podsum {

// Deterministic 60/20/20 partition of episode ids. The permutation is a
// Fisher-Yates shuffle driven by std::mt19937_64(seed) with j = next() mod
// (i+1) for i = N-1..1 over ids in corpus order, so splits reproduce
// bit-for-bit across platforms.
struct SplitAssignment {
    std::uint64_t seed = 0;
    std::vector<std::string> train;
    std::vector<std::string> validation;
    std::vector<std::string> test;
};

enum class Subset { all, train, validation, test };

std::string to_string(Subset s);
Subset subset_from_string(const std::string& s);

// |train| = round(0.6 N), |validation| = round(0.2 N), test takes the rest.
// Throws data_error on an empty corpus.
SplitAssignment make_split(const Corpus& corpus, std::uint64_t seed);

std::string split_to_json(const SplitAssignment& split);
SplitAssignment split_from_json(const std::string& text);
void write_split(const SplitAssignment& split, const std::filesystem::path& path);
SplitAssignment read_split(const std::filesystem::path& path);

// One evaluated system: the nine macro-averaged components, scaled x100 and
// kept at full precision (rounding happens only at render time).
struct ReportRow {
    std::string system;
    // r1_r, r1_p, r1_f, r2_r, r2_p, r2_f, rl_r, rl_p, rl_f
    std::array<double, 9> values{};

    bool operator==(const ReportRow&) const = default;
};

struct EvaluationReport {
    Subset split_used = Subset::all;
    std::size_t episodes_scored = 0;
    std::vector<ReportRow> rows;

    bool operator==(const EvaluationReport&) const = default;
};

// Macro average of score_all over the selected episodes (all of the corpus
// when subset is absent). Per-episode scoring may run in parallel; the sum
// is reduced in id-sorted order, so any jobs value yields identical bytes.
// Throws data_error when a selected id has no candidate entry (lists up to
// ten missing ids) or when subset mentions an unknown id.
ReportRow evaluate(const Corpus& corpus, const CandidateSummarySet& candidates,
                   const std::optional<std::vector<std::string>>& subset = {},
                   unsigned jobs = 1);

EvaluationReport evaluate_many(const Corpus& corpus,
                               const std::vector<CandidateSummarySet>& sets,
                               const std::optional<std::vector<std::string>>& subset = {},
                               Subset split_used = Subset::all,
                               unsigned jobs = 1);

enum class ReportFormat { markdown, csv, json };

ReportFormat report_format_from_string(const std::string& s);

// markdown: aligned table, per-column maxima bolded. csv: fixed header
// system,r1_r,...,rl_f. json: full precision, round-trips via
// report_from_json. markdown/csv values are rounded half-up to 2 decimals.
std::string render_report(const EvaluationReport& report, ReportFormat format);

EvaluationReport report_from_json(const std::string& text);

} // namespace podsum
