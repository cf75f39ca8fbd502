// SPDX-License-Identifier: Apache-2.0
#pragma once

// Independent reference implementations used to cross-check the library.
// These deliberately use different algorithms than the production code:
// exponential recursion for LCS, maximum bipartite matching for clipped
// n-gram overlap, and a straight code-point walk for the tokenizer rule.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "podsum/tokenize.hpp"

namespace oracles {

// LCS by exhaustive recursion (no memoization).
inline std::size_t lcs_naive(const podsum::TokenSequence& a,
                             const podsum::TokenSequence& b,
                             std::size_t i, std::size_t j) {
    if (i == 0 || j == 0) return 0;
    if (a[i - 1] == b[j - 1]) return 1 + lcs_naive(a, b, i - 1, j - 1);
    return std::max(lcs_naive(a, b, i - 1, j), lcs_naive(a, b, i, j - 1));
}

inline std::size_t lcs_naive(const podsum::TokenSequence& a,
                             const podsum::TokenSequence& b) {
    return lcs_naive(a, b, a.size(), b.size());
}

// Clipped n-gram overlap as a maximum bipartite matching between candidate
// n-gram occurrences and reference occurrences of the same n-gram.
inline long long ngram_overlap_matching(const podsum::TokenSequence& cand,
                                        const podsum::TokenSequence& ref, int n) {
    auto grams = [n](const podsum::TokenSequence& seq) {
        std::vector<std::string> out;
        if (seq.size() < static_cast<std::size_t>(n)) return out;
        for (std::size_t i = 0; i + n <= seq.size(); ++i) {
            std::string g;
            for (int k = 0; k < n; ++k) {
                g += seq[i + k];
                g.push_back('\x1f');
            }
            out.push_back(std::move(g));
        }
        return out;
    };
    std::vector<std::string> gc = grams(cand), gr = grams(ref);

    std::vector<int> match_ref(gr.size(), -1);
    std::function<bool(std::size_t, std::vector<char>&)> augment =
        [&](std::size_t i, std::vector<char>& used) {
            for (std::size_t j = 0; j < gr.size(); ++j) {
                if (used[j] || gc[i] != gr[j]) continue;
                used[j] = 1;
                if (match_ref[j] < 0 ||
                    augment(static_cast<std::size_t>(match_ref[j]), used)) {
                    match_ref[j] = static_cast<int>(i);
                    return true;
                }
            }
            return false;
        };

    long long matched = 0;
    for (std::size_t i = 0; i < gc.size(); ++i) {
        std::vector<char> used(gr.size(), 0);
        if (augment(i, used)) ++matched;
    }
    return matched;
}

// Random token sequence over a small alphabet.
inline podsum::TokenSequence random_seq(std::mt19937_64& rng, std::size_t max_len,
                                        std::span<const char* const> alphabet) {
    std::size_t len = rng() % (max_len + 1);
    podsum::TokenSequence seq;
    seq.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        seq.emplace_back(alphabet[rng() % alphabet.size()]);
    }
    return seq;
}

// Character-by-character reference of the tokenizer rule for ASCII text:
// alphanumeric runs (plus apostrophes between two alphanumerics) become
// lowercase tokens.
inline podsum::TokenSequence tokenize_ascii_reference(const std::string& text) {
    auto alnum = [](char c) {
        return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
               (c >= 'A' && c <= 'Z');
    };
    podsum::TokenSequence out;
    std::string cur;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (alnum(c)) {
            cur.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : c);
        } else if (c == '\'' && !cur.empty() && i + 1 < text.size() &&
                   alnum(text[i + 1])) {
            cur.push_back('\'');
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

} // namespace oracles
