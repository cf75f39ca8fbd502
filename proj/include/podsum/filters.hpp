// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "podsum/corpus.hpp"
#include "podsum/tokenize.hpp"

namespace podsum {

// Thresholds and word-list locations for the filtering cascade. Character
// counts are Unicode scalar values, not bytes.
struct FilterConfig {
    long max_desc_chars = 750;            // description longer than this -> removed
    long min_desc_chars = 20;             // description shorter than this -> removed
    double dup_jaccard_threshold = 0.9;   // in (0,1]
    double show_sim_jaccard_threshold = 0.7; // in (0,1]
    long min_chars_after_emoji = 20;
    double max_duration_minutes = 60.0;   // strictly longer -> removed
    std::filesystem::path profanity_list_path;
    double english_stopword_ratio_min = 0.20; // in [0,1]
    std::filesystem::path ad_marker_list_path;
    double ad_token_fraction_max = 0.5;   // in [0,1]
};

// Throws config_error when a threshold is out of range.
void validate(const FilterConfig& cfg);

// Per-rule removal record in pipeline order; mirrors the preprocessing
// table: remaining_i = remaining_{i-1} - removed_i.
struct LedgerStep {
    std::string rule;
    std::size_t removed = 0;
    std::size_t remaining = 0;
    std::vector<std::string> removed_ids; // corpus order
};

struct FilterLedger {
    std::size_t input_episodes = 0;
    std::vector<LedgerStep> steps;
};

struct FilterOutcome {
    Corpus corpus;                        // kept episodes, input order preserved
    std::vector<std::string> removed_ids; // corpus order
};

struct PipelineResult {
    Corpus corpus;
    FilterLedger ledger;
};

// Word/phrase list: one term per line, '#' comment lines ignored, terms
// tokenized with the shared tokenizer (multi-token terms match as phrases).
struct WordList {
    std::unordered_set<std::string> single_tokens;
    std::unordered_map<std::string, std::vector<std::vector<std::string>>>
        phrases_by_first; // first token -> remaining tokens of each phrase
    std::size_t term_count = 0;

    bool matches(const TokenSequence& tokens) const;
};

// Throws config_error when the file is unreadable or contains no terms.
WordList load_word_list(const std::filesystem::path& path);

// The eight rules, in pipeline order.
FilterOutcome filter_desc_length(const Corpus& c, const FilterConfig& cfg);
FilterOutcome filter_near_duplicates(const Corpus& c, const FilterConfig& cfg);
FilterOutcome filter_show_similar(const Corpus& c, const FilterConfig& cfg);
FilterOutcome filter_emoji_dominated(const Corpus& c, const FilterConfig& cfg);
FilterOutcome filter_duration(const Corpus& c, const FilterConfig& cfg);
FilterOutcome filter_profanity(const Corpus& c, const FilterConfig& cfg);
FilterOutcome filter_profanity(const Corpus& c, const WordList& terms);
FilterOutcome filter_non_english(const Corpus& c, const FilterConfig& cfg);
FilterOutcome filter_ad_dominated(const Corpus& c, const FilterConfig& cfg);
FilterOutcome filter_ad_dominated(const Corpus& c, const WordList& markers,
                                  double ad_token_fraction_max);

// Per-episode predicates (true = episode passes the rule). The
// near-duplicate rule is corpus-global and has no per-episode form.
bool desc_length_ok(const Episode& ep, const FilterConfig& cfg);
bool show_similar_ok(const Episode& ep, const FilterConfig& cfg);
bool emoji_ok(const Episode& ep, const FilterConfig& cfg);
bool duration_ok(const Episode& ep, const FilterConfig& cfg);
bool profanity_ok(const Episode& ep, const WordList& terms);
bool english_ok(const Episode& ep, const FilterConfig& cfg);
bool ad_ok(const Episode& ep, const WordList& markers, double fraction_max);

// Jaccard similarity of word-3-gram shingle sets of the two texts.
// Byte-identical texts compare as 1; texts shorter than three tokens fall
// back to a single whole-sequence shingle.
double description_similarity(std::string_view a, std::string_view b);

// Runs all eight rules in fixed order and builds the ledger. jobs > 1
// parallelizes the per-episode rules; results are identical for any jobs.
PipelineResult run_pipeline(const Corpus& c, const FilterConfig& cfg,
                            unsigned jobs = 1);

// Ledger renderings: an aligned text table (rule labels parameterized by
// the config), and JSON (array of step objects).
std::string render_ledger_table(const FilterLedger& ledger, const FilterConfig& cfg);
std::string ledger_to_json(const FilterLedger& ledger, bool include_ids = true);

// The embedded English stopword list used by the language heuristic.
const std::unordered_set<std::string>& english_stopwords();

} // namespace podsum
