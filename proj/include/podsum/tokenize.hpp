// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace podsum {

// Lowercased word tokens in source order. No token is empty or contains
// whitespace.
using TokenSequence = std::vector<std::string>;

// Shared tokenizer: Unicode-lowercases the text and emits every maximal run
// of letters/digits (apostrophes are kept when they sit between two word
// characters; U+2019 is normalized to '). Everything else separates tokens.
TokenSequence tokenize(std::string_view text);

// Tokens joined by single spaces.
std::string join(std::span<const std::string> tokens);

// Sliding-window n-gram multiset of a token sequence.
struct NgramCounts {
    int n = 1;
    long long total = 0; // max(0, len - n + 1)
    std::unordered_map<std::string, long long> counts;

    long long count(std::span<const std::string> gram) const;
    static std::string key(std::span<const std::string> gram);
};

// Throws std::invalid_argument when n < 1.
NgramCounts ngrams(const TokenSequence& seq, int n);

// Longest common subsequence length, O(|a|*|b|) time, O(min(|a|,|b|)) space.
std::size_t lcs_length(const TokenSequence& a, const TokenSequence& b);

} // namespace podsum
