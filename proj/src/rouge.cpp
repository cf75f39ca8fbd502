// SPDX-License-Identifier: Apache-2.0
#include "podsum/rouge.hpp"

#include <algorithm>

namespace podsum {

namespace {

double ratio(long long num, long long den) {
    return den > 0 ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
}

double f_measure(double precision, double recall) {
    double s = precision + recall;
    return s > 0 ? 2.0 * precision * recall / s : 0.0;
}

long long clipped_overlap(const NgramCounts& cand, const NgramCounts& ref) {
    // Iterate the smaller map.
    const auto& a = cand.counts.size() <= ref.counts.size() ? cand : ref;
    const auto& b = &a == &cand ? ref : cand;
    long long overlap = 0;
    for (const auto& [key, n] : a.counts) {
        auto it = b.counts.find(key);
        if (it != b.counts.end()) overlap += std::min(n, it->second);
    }
    return overlap;
}

RougeScore make_score(RougeVariant variant, long long overlap,
                      long long cand_total, long long ref_total) {
    RougeScore s;
    s.variant = variant;
    s.recall = ratio(overlap, ref_total);
    s.precision = ratio(overlap, cand_total);
    s.f1 = f_measure(s.precision, s.recall);
    return s;
}

} // namespace

RougeScore rouge_n_tokens(const TokenSequence& candidate,
                          const TokenSequence& reference, int n) {
    auto gc = ngrams(candidate, n);
    auto gr = ngrams(reference, n);
    return make_score(n == 1 ? RougeVariant::R1 : RougeVariant::R2,
                      clipped_overlap(gc, gr), gc.total, gr.total);
}

RougeScore rouge_l_tokens(const TokenSequence& candidate,
                          const TokenSequence& reference) {
    auto lcs = static_cast<long long>(lcs_length(candidate, reference));
    return make_score(RougeVariant::RL, lcs,
                      static_cast<long long>(candidate.size()),
                      static_cast<long long>(reference.size()));
}

RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n) {
    return rouge_n_tokens(tokenize(candidate), tokenize(reference), n);
}

RougeScore rouge_l(std::string_view candidate, std::string_view reference) {
    return rouge_l_tokens(tokenize(candidate), tokenize(reference));
}

RougeTriple score_all_tokens(const TokenSequence& candidate,
                             const TokenSequence& reference) {
    RougeTriple t;
    t.r1 = rouge_n_tokens(candidate, reference, 1);
    t.r2 = rouge_n_tokens(candidate, reference, 2);
    t.rl = rouge_l_tokens(candidate, reference);
    return t;
}

RougeTriple score_all(std::string_view candidate, std::string_view reference) {
    return score_all_tokens(tokenize(candidate), tokenize(reference));
}

} // namespace podsum
