// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "podsum/corpus.hpp"

namespace podsum {

enum class BaselineKind { FirstK, LastK };

struct BaselineSpec {
    BaselineKind kind = BaselineKind::FirstK;
    int k = 100; // >= 1
};

// Token-length statistics of a text field across a corpus.
struct SummaryStats {
    std::size_t count = 0;
    double mean_len = 0.0;
    std::size_t max_len = 0;
    std::size_t min_len = 0;
};

enum class TextField { description, transcript };

// The first (or last) min(k, len) transcript tokens, joined by single
// spaces. Empty transcript yields an empty summary.
std::string extract(std::string_view transcript, const BaselineSpec& spec);

// Applies extract to every episode; system_name encodes kind and k,
// e.g. "baseline1-k100" (first) / "baseline2-k100" (last).
CandidateSummarySet generate_baseline(const Corpus& corpus, const BaselineSpec& spec);

std::string baseline_system_name(const BaselineSpec& spec);

SummaryStats summary_stats(const Corpus& corpus,
                           TextField field = TextField::description);

} // namespace podsum
