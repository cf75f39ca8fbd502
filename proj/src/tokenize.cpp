// SPDX-License-Identifier: Apache-2.0
#include "podsum/tokenize.hpp"

#include <algorithm>
#include <stdexcept>

#include "podsum/unicode.hpp"

namespace podsum {

TokenSequence tokenize(std::string_view text) {
    TokenSequence out;
    std::string cur;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char32_t cp = uni::decode(text, i);
        if (uni::is_word_char(cp)) {
            uni::encode(uni::to_lower(cp), cur);
            continue;
        }
        if (uni::is_apostrophe(cp) && !cur.empty()) {
            std::size_t peek = i;
            if (peek < n && uni::is_word_char(uni::decode(text, peek))) {
                cur.push_back('\'');
                continue;
            }
        }
        if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::string join(std::span<const std::string> tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) out.push_back(' ');
        out += tokens[i];
    }
    return out;
}

std::string NgramCounts::key(std::span<const std::string> gram) {
    std::string k;
    for (std::size_t i = 0; i < gram.size(); ++i) {
        if (i > 0) k.push_back('\x1f'); // unit separator, never inside a token
        k += gram[i];
    }
    return k;
}

long long NgramCounts::count(std::span<const std::string> gram) const {
    auto it = counts.find(key(gram));
    return it == counts.end() ? 0 : it->second;
}

NgramCounts ngrams(const TokenSequence& seq, int n) {
    if (n < 1) throw std::invalid_argument("ngrams: n must be >= 1");
    NgramCounts out;
    out.n = n;
    const auto len = seq.size();
    if (len < static_cast<std::size_t>(n)) return out;
    out.total = static_cast<long long>(len - n + 1);
    out.counts.reserve(static_cast<std::size_t>(out.total));
    for (std::size_t i = 0; i + n <= len; ++i) {
        ++out.counts[NgramCounts::key({seq.data() + i, static_cast<std::size_t>(n)})];
    }
    return out;
}

std::size_t lcs_length(const TokenSequence& a, const TokenSequence& b) {
    if (a.empty() || b.empty()) return 0;

    // Intern tokens so the DP compares ints, not strings.
    std::unordered_map<std::string_view, int> ids;
    auto intern = [&ids](const std::string& s) {
        return ids.try_emplace(s, static_cast<int>(ids.size())).first->second;
    };
    std::vector<int> xs, ys;
    xs.reserve(a.size());
    ys.reserve(b.size());
    for (const auto& t : a) xs.push_back(intern(t));
    for (const auto& t : b) ys.push_back(intern(t));
    if (ys.size() > xs.size()) std::swap(xs, ys); // rows over the shorter side

    std::vector<std::size_t> prev(ys.size() + 1, 0), curr(ys.size() + 1, 0);
    for (std::size_t i = 1; i <= xs.size(); ++i) {
        for (std::size_t j = 1; j <= ys.size(); ++j) {
            if (xs[i - 1] == ys[j - 1]) {
                curr[j] = prev[j - 1] + 1;
            } else {
                curr[j] = std::max(prev[j], curr[j - 1]);
            }
        }
        std::swap(prev, curr);
    }
    return prev[ys.size()];
}

} // namespace podsum
