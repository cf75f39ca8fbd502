// SPDX-License-Identifier: Apache-2.0
#include "podsum/filters.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "podsum/errors.hpp"
#include "podsum/parallel.hpp"
#include "podsum/unicode.hpp"

namespace podsum {

namespace {

constexpr const char* kRuleDescLength = "desc-length";
constexpr const char* kRuleNearDuplicate = "near-duplicate";
constexpr const char* kRuleShowSimilar = "show-similar";
constexpr const char* kRuleEmoji = "emoji-dominated";
constexpr const char* kRuleDuration = "duration";
constexpr const char* kRuleProfanity = "profanity";
constexpr const char* kRuleNonEnglish = "non-english";
constexpr const char* kRuleAd = "ad-dominated";

// Word-3-gram shingles with a whole-sequence fallback for short texts, so
// identical two-token descriptions still register as similar.
std::vector<std::string> shingle_set(const TokenSequence& tokens) {
    std::vector<std::string> shingles;
    if (tokens.size() >= 3) {
        shingles.reserve(tokens.size() - 2);
        for (std::size_t i = 0; i + 3 <= tokens.size(); ++i) {
            shingles.push_back(NgramCounts::key({tokens.data() + i, 3}));
        }
    } else if (!tokens.empty()) {
        shingles.push_back(NgramCounts::key({tokens.data(), tokens.size()}));
    }
    std::sort(shingles.begin(), shingles.end());
    shingles.erase(std::unique(shingles.begin(), shingles.end()), shingles.end());
    return shingles;
}

template <class T>
double jaccard(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.empty() || b.empty()) return 0.0;
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++inter;
            ++i;
            ++j;
        }
    }
    return static_cast<double>(inter) /
           static_cast<double>(a.size() + b.size() - inter);
}

// Keeps episodes whose predicate holds; per-episode work may run in
// parallel, outcome assembly is sequential in corpus order.
template <class Pred>
FilterOutcome apply_predicate(const Corpus& c, Pred&& pred, unsigned jobs = 1) {
    std::vector<char> keep(c.episodes.size(), 1);
    parallel_for(c.episodes.size(), jobs,
                 [&](std::size_t i) { keep[i] = pred(c.episodes[i]) ? 1 : 0; });

    FilterOutcome out;
    out.corpus.episodes.reserve(c.episodes.size());
    for (std::size_t i = 0; i < c.episodes.size(); ++i) {
        if (keep[i]) {
            out.corpus.episodes.push_back(c.episodes[i]);
        } else {
            out.removed_ids.push_back(c.episodes[i].episode_id);
        }
    }
    return out;
}

// Ad-line URL detection on the raw (lowercased) line.
const char* const kUrlTlds[] = {"com", "net", "org", "io",  "fm", "co",
                                "gg",  "ly",  "me",  "tv",  "app"};

bool looks_like_url(const std::string& lower_line) {
    if (lower_line.find("http://") != std::string::npos) return true;
    if (lower_line.find("https://") != std::string::npos) return true;
    if (lower_line.find("www.") != std::string::npos) return true;
    // host.tld with an alphanumeric char before the dot and a word boundary
    // after the suffix
    for (std::size_t dot = lower_line.find('.'); dot != std::string::npos;
         dot = lower_line.find('.', dot + 1)) {
        if (dot == 0 || !std::isalnum(static_cast<unsigned char>(lower_line[dot - 1]))) {
            continue;
        }
        for (const char* tld : kUrlTlds) {
            std::size_t len = std::strlen(tld);
            if (lower_line.compare(dot + 1, len, tld) != 0) continue;
            std::size_t after = dot + 1 + len;
            if (after == lower_line.size() ||
                !std::isalnum(static_cast<unsigned char>(lower_line[after]))) {
                return true;
            }
        }
    }
    return false;
}

std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& ch : out) {
        ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t nl = text.find('\n', start);
        std::string_view line = nl == std::string_view::npos
                                    ? text.substr(start)
                                    : text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return lines;
}

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        // Lower index wins so each group's representative is its first
        // member in corpus order.
        if (a < b) {
            parent[b] = a;
        } else {
            parent[a] = b;
        }
    }
};

} // namespace

void validate(const FilterConfig& cfg) {
    auto fail = [](const std::string& msg) { throw config_error(msg); };
    if (cfg.min_desc_chars >= cfg.max_desc_chars) {
        fail("min_desc_chars must be < max_desc_chars");
    }
    if (!(cfg.dup_jaccard_threshold > 0.0 && cfg.dup_jaccard_threshold <= 1.0)) {
        fail("dup_jaccard_threshold must be in (0,1]");
    }
    if (!(cfg.show_sim_jaccard_threshold > 0.0 && cfg.show_sim_jaccard_threshold <= 1.0)) {
        fail("show_sim_jaccard_threshold must be in (0,1]");
    }
    if (cfg.min_chars_after_emoji < 0) fail("min_chars_after_emoji must be >= 0");
    if (cfg.max_duration_minutes < 0) fail("max_duration_minutes must be >= 0");
    if (!(cfg.english_stopword_ratio_min >= 0.0 && cfg.english_stopword_ratio_min <= 1.0)) {
        fail("english_stopword_ratio_min must be in [0,1]");
    }
    if (!(cfg.ad_token_fraction_max >= 0.0 && cfg.ad_token_fraction_max <= 1.0)) {
        fail("ad_token_fraction_max must be in [0,1]");
    }
}

bool WordList::matches(const TokenSequence& tokens) const {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (single_tokens.count(tokens[i])) return true;
        auto it = phrases_by_first.find(tokens[i]);
        if (it == phrases_by_first.end()) continue;
        for (const auto& rest : it->second) {
            if (i + 1 + rest.size() > tokens.size()) continue;
            bool all = true;
            for (std::size_t k = 0; k < rest.size(); ++k) {
                if (tokens[i + 1 + k] != rest[k]) {
                    all = false;
                    break;
                }
            }
            if (all) return true;
        }
    }
    return false;
}

WordList load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open word list: " + path.string());

    WordList list;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        TokenSequence term = tokenize(line);
        if (term.empty()) continue;
        ++list.term_count;
        if (term.size() == 1) {
            list.single_tokens.insert(std::move(term[0]));
        } else {
            std::vector<std::string> rest(term.begin() + 1, term.end());
            list.phrases_by_first[term[0]].push_back(std::move(rest));
        }
    }
    if (list.term_count == 0) {
        throw config_error("word list is empty: " + path.string());
    }
    return list;
}

double description_similarity(std::string_view a, std::string_view b) {
    if (a == b) return 1.0;
    return jaccard(shingle_set(tokenize(a)), shingle_set(tokenize(b)));
}

bool desc_length_ok(const Episode& ep, const FilterConfig& cfg) {
    auto len = static_cast<long>(uni::scalar_count(ep.episode_description));
    return len <= cfg.max_desc_chars && len >= cfg.min_desc_chars;
}

bool show_similar_ok(const Episode& ep, const FilterConfig& cfg) {
    return description_similarity(ep.episode_description, ep.show_description) <
           cfg.show_sim_jaccard_threshold;
}

bool emoji_ok(const Episode& ep, const FilterConfig& cfg) {
    std::string residue = uni::trim(uni::strip_emoji(ep.episode_description));
    return static_cast<long>(uni::scalar_count(residue)) >= cfg.min_chars_after_emoji;
}

bool duration_ok(const Episode& ep, const FilterConfig& cfg) {
    return ep.duration_minutes <= cfg.max_duration_minutes;
}

bool profanity_ok(const Episode& ep, const WordList& terms) {
    return !terms.matches(tokenize(ep.episode_description)) &&
           !terms.matches(tokenize(ep.show_description));
}

bool english_ok(const Episode& ep, const FilterConfig& cfg) {
    TokenSequence tokens = tokenize(ep.episode_description);
    const auto& stop = english_stopwords();
    std::size_t hits = 0;
    for (const auto& t : tokens) {
        if (stop.count(t)) ++hits;
    }
    if (tokens.size() < 5 && hits == 0) return false;
    double ratio = static_cast<double>(hits) / static_cast<double>(tokens.size());
    return ratio >= cfg.english_stopword_ratio_min;
}

bool ad_ok(const Episode& ep, const WordList& markers, double fraction_max) {
    std::size_t ad_tokens = 0, total_tokens = 0;
    for (const auto& line : split_lines(ep.episode_description)) {
        TokenSequence tokens = tokenize(line);
        total_tokens += tokens.size();
        if (tokens.empty()) continue;
        if (markers.matches(tokens) || looks_like_url(ascii_lower(line))) {
            ad_tokens += tokens.size();
        }
    }
    if (total_tokens == 0) return true;
    return static_cast<double>(ad_tokens) <=
           fraction_max * static_cast<double>(total_tokens);
}

FilterOutcome filter_desc_length(const Corpus& c, const FilterConfig& cfg) {
    return apply_predicate(c, [&](const Episode& ep) { return desc_length_ok(ep, cfg); });
}

FilterOutcome filter_near_duplicates(const Corpus& c, const FilterConfig& cfg) {
    const std::size_t n = c.episodes.size();
    Dsu dsu(n);

    // Byte-identical descriptions are duplicates outright; only the first
    // occurrence of each text enters the shingle phase.
    std::unordered_map<std::string_view, std::size_t> first_by_text;
    std::vector<std::size_t> uniques;
    uniques.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] =
            first_by_text.try_emplace(c.episodes[i].episode_description, i);
        if (inserted) {
            uniques.push_back(i);
        } else {
            dsu.unite(it->second, i);
        }
    }

    // Shingle ids per unique description, inverted index, pairwise Jaccard
    // only for pairs sharing at least one shingle.
    std::unordered_map<std::string, int> shingle_ids;
    std::vector<std::vector<int>> shingles_of(n);
    for (std::size_t i : uniques) {
        auto raw = shingle_set(tokenize(c.episodes[i].episode_description));
        auto& ids = shingles_of[i];
        ids.reserve(raw.size());
        for (auto& s : raw) {
            ids.push_back(
                shingle_ids.try_emplace(std::move(s), static_cast<int>(shingle_ids.size()))
                    .first->second);
        }
        std::sort(ids.begin(), ids.end());
    }

    std::unordered_map<int, std::vector<std::size_t>> bucket;
    std::vector<std::size_t> stamp(n, static_cast<std::size_t>(-1));
    for (std::size_t i : uniques) {
        const auto& mine = shingles_of[i];
        for (int sid : mine) {
            for (std::size_t j : bucket[sid]) {
                if (stamp[j] == i) continue; // already compared for this i
                stamp[j] = i;
                if (dsu.find(i) == dsu.find(j)) continue;
                const auto& theirs = shingles_of[j];
                // Jaccard can't reach t unless the sizes are within ratio t.
                double lo = static_cast<double>(std::min(mine.size(), theirs.size()));
                double hi = static_cast<double>(std::max(mine.size(), theirs.size()));
                if (lo / hi < cfg.dup_jaccard_threshold) continue;
                if (jaccard(mine, theirs) >= cfg.dup_jaccard_threshold) {
                    dsu.unite(i, j);
                }
            }
        }
        for (int sid : mine) bucket[sid].push_back(i);
    }

    // Keep only each group's first member (its DSU representative).
    FilterOutcome out;
    out.corpus.episodes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (dsu.find(i) == i) {
            out.corpus.episodes.push_back(c.episodes[i]);
        } else {
            out.removed_ids.push_back(c.episodes[i].episode_id);
        }
    }
    return out;
}

FilterOutcome filter_show_similar(const Corpus& c, const FilterConfig& cfg) {
    return apply_predicate(c, [&](const Episode& ep) { return show_similar_ok(ep, cfg); });
}

FilterOutcome filter_emoji_dominated(const Corpus& c, const FilterConfig& cfg) {
    return apply_predicate(c, [&](const Episode& ep) { return emoji_ok(ep, cfg); });
}

FilterOutcome filter_duration(const Corpus& c, const FilterConfig& cfg) {
    return apply_predicate(c, [&](const Episode& ep) { return duration_ok(ep, cfg); });
}

FilterOutcome filter_profanity(const Corpus& c, const WordList& terms) {
    return apply_predicate(c, [&](const Episode& ep) { return profanity_ok(ep, terms); });
}

FilterOutcome filter_profanity(const Corpus& c, const FilterConfig& cfg) {
    return filter_profanity(c, load_word_list(cfg.profanity_list_path));
}

FilterOutcome filter_non_english(const Corpus& c, const FilterConfig& cfg) {
    return apply_predicate(c, [&](const Episode& ep) { return english_ok(ep, cfg); });
}

FilterOutcome filter_ad_dominated(const Corpus& c, const WordList& markers,
                                  double ad_token_fraction_max) {
    return apply_predicate(c, [&](const Episode& ep) {
        return ad_ok(ep, markers, ad_token_fraction_max);
    });
}

FilterOutcome filter_ad_dominated(const Corpus& c, const FilterConfig& cfg) {
    return filter_ad_dominated(c, load_word_list(cfg.ad_marker_list_path),
                               cfg.ad_token_fraction_max);
}

PipelineResult run_pipeline(const Corpus& c, const FilterConfig& cfg, unsigned jobs) {
    validate(cfg);
    // Load word lists up front so configuration errors surface before any
    // filtering work.
    WordList profanity = load_word_list(cfg.profanity_list_path);
    WordList ad_markers = load_word_list(cfg.ad_marker_list_path);

    PipelineResult result;
    result.ledger.input_episodes = c.episodes.size();

    Corpus current = c;
    auto step = [&](const char* rule, FilterOutcome outcome) {
        LedgerStep s;
        s.rule = rule;
        s.removed = outcome.removed_ids.size();
        s.remaining = outcome.corpus.episodes.size();
        s.removed_ids = std::move(outcome.removed_ids);
        result.ledger.steps.push_back(std::move(s));
        current = std::move(outcome.corpus);
    };

    step(kRuleDescLength, apply_predicate(
        current, [&](const Episode& ep) { return desc_length_ok(ep, cfg); }, jobs));
    step(kRuleNearDuplicate, filter_near_duplicates(current, cfg));
    step(kRuleShowSimilar, apply_predicate(
        current, [&](const Episode& ep) { return show_similar_ok(ep, cfg); }, jobs));
    step(kRuleEmoji, apply_predicate(
        current, [&](const Episode& ep) { return emoji_ok(ep, cfg); }, jobs));
    step(kRuleDuration, apply_predicate(
        current, [&](const Episode& ep) { return duration_ok(ep, cfg); }, jobs));
    step(kRuleProfanity, apply_predicate(
        current, [&](const Episode& ep) { return profanity_ok(ep, profanity); }, jobs));
    step(kRuleNonEnglish, apply_predicate(
        current, [&](const Episode& ep) { return english_ok(ep, cfg); }, jobs));
    step(kRuleAd, apply_predicate(
        current, [&](const Episode& ep) { return ad_ok(ep, ad_markers, cfg.ad_token_fraction_max); }, jobs));

    result.corpus = std::move(current);
    return result;
}

namespace {

std::string rule_label(const std::string& rule, const FilterConfig& cfg) {
    char buf[160];
    if (rule == kRuleDescLength) {
        std::snprintf(buf, sizeof(buf),
                      "After removing episodes with too long (> %ld chars) or "
                      "too short (< %ld chars) descriptions",
                      cfg.max_desc_chars, cfg.min_desc_chars);
        return buf;
    }
    if (rule == kRuleNearDuplicate) {
        return "After removing duplicate episodes with similar descriptions";
    }
    if (rule == kRuleShowSimilar) {
        return "After removing episodes with descriptions similar to the show description";
    }
    if (rule == kRuleEmoji) {
        return "After removing episodes with emoji-dominated descriptions";
    }
    if (rule == kRuleDuration) {
        std::snprintf(buf, sizeof(buf),
                      "After removing episodes longer than %g minutes",
                      cfg.max_duration_minutes);
        return buf;
    }
    if (rule == kRuleProfanity) {
        return "After removing episodes with profanity language";
    }
    if (rule == kRuleNonEnglish) {
        return "After removing episodes with non-English descriptions";
    }
    if (rule == kRuleAd) {
        return "After removing episodes with sponsorship/advertisement-dominated descriptions";
    }
    return rule;
}

} // namespace

std::string render_ledger_table(const FilterLedger& ledger, const FilterConfig& cfg) {
    std::vector<std::pair<std::string, std::size_t>> rows;
    rows.emplace_back("Input corpus", ledger.input_episodes);
    for (const auto& s : ledger.steps) {
        rows.emplace_back(rule_label(s.rule, cfg), s.remaining);
    }

    std::size_t label_width = std::string("Dataset Preprocessing").size();
    for (const auto& [label, _] : rows) label_width = std::max(label_width, label.size());

    std::ostringstream out;
    out << "Dataset Preprocessing";
    out << std::string(label_width - std::string("Dataset Preprocessing").size(), ' ');
    out << "  # of Episodes\n";
    out << std::string(label_width + 15, '-') << '\n';
    for (const auto& [label, count] : rows) {
        std::string num = std::to_string(count);
        out << label << std::string(label_width - label.size(), ' ');
        out << "  " << std::string(13 - std::min<std::size_t>(13, num.size()), ' ') << num
            << '\n';
    }
    return out.str();
}

std::string ledger_to_json(const FilterLedger& ledger, bool include_ids) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const auto& s : ledger.steps) {
        nlohmann::ordered_json obj;
        obj["rule"] = s.rule;
        obj["removed"] = s.removed;
        obj["remaining"] = s.remaining;
        if (include_ids) obj["removed_ids"] = s.removed_ids;
        steps.push_back(std::move(obj));
    }
    return steps.dump(2) + "\n";
}

const std::unordered_set<std::string>& english_stopwords() {
    static const std::unordered_set<std::string> words = {
        "a", "about", "above", "after", "again", "against", "all", "am", "an",
        "and", "any", "are", "aren't", "as", "at", "be", "because", "been",
        "before", "being", "below", "between", "both", "but", "by", "can",
        "can't", "cannot", "could", "couldn't", "did", "didn't", "do", "does",
        "doesn't", "doing", "don't", "down", "during", "each", "few", "for",
        "from", "further", "had", "hadn't", "has", "hasn't", "have", "haven't",
        "having", "he", "her", "here", "hers", "herself", "him", "himself",
        "his", "how", "i", "i'd", "i'll", "i'm", "i've", "if", "in", "into",
        "is", "isn't", "it", "it's", "its", "itself", "just", "let's", "me",
        "more", "most", "mustn't", "my", "myself", "no", "nor", "not", "now",
        "of", "off", "on", "once", "only", "or", "other", "our", "ours",
        "ourselves", "out", "over", "own", "same", "shan't", "she", "she'd",
        "she'll", "she's", "should", "shouldn't", "so", "some", "such", "than",
        "that", "that's", "the", "their", "theirs", "them", "themselves",
        "then", "there", "there's", "these", "they", "they'd", "they'll",
        "they're", "they've", "this", "those", "through", "to", "too", "under",
        "until", "up", "very", "was", "wasn't", "we", "we'd", "we'll", "we're",
        "we've", "were", "weren't", "what", "what's", "when", "when's",
        "where", "where's", "which", "while", "who", "who's", "whom", "why",
        "will", "with", "won't", "would", "wouldn't", "you", "you'd", "you'll",
        "you're", "you've", "your", "yours", "yourself", "yourselves",
    };
    return words;
}

} // namespace podsum
