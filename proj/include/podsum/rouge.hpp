// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "podsum/tokenize.hpp"

namespace podsum {

enum class RougeVariant { R1, R2, RL };

// Recall/precision/F1 for one variant on one (candidate, reference) pair.
// All three lie in [0,1]; zero denominators yield 0 rather than NaN.
struct RougeScore {
    RougeVariant variant = RougeVariant::R1;
    double recall = 0.0;
    double precision = 0.0;
    double f1 = 0.0;
};

struct RougeTriple {
    RougeScore r1;
    RougeScore r2;
    RougeScore rl;
};

// ROUGE-N over clipped n-gram counts (n in {1,2}): per n-gram type the
// overlap is min(candidate count, reference count).
RougeScore rouge_n(std::string_view candidate, std::string_view reference, int n);
RougeScore rouge_n_tokens(const TokenSequence& candidate,
                          const TokenSequence& reference, int n);

// ROUGE-L over the whole token streams (summary-level LCS, no sentence
// splitting: ASR transcripts carry no reliable sentence boundaries).
RougeScore rouge_l(std::string_view candidate, std::string_view reference);
RougeScore rouge_l_tokens(const TokenSequence& candidate,
                          const TokenSequence& reference);

// All three variants with a single tokenization pass per text.
RougeTriple score_all(std::string_view candidate, std::string_view reference);
RougeTriple score_all_tokens(const TokenSequence& candidate,
                             const TokenSequence& reference);

} // namespace podsum
