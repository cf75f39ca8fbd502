// SPDX-License-Identifier: Apache-2.0
#include "podsum/baselines.hpp"

#include <algorithm>
#include <stdexcept>

#include "podsum/tokenize.hpp"

namespace podsum {

std::string extract(std::string_view transcript, const BaselineSpec& spec) {
    if (spec.k < 1) throw std::invalid_argument("baseline k must be >= 1");
    TokenSequence tokens = tokenize(transcript);
    auto take = std::min<std::size_t>(static_cast<std::size_t>(spec.k), tokens.size());
    if (spec.kind == BaselineKind::FirstK) {
        return join({tokens.data(), take});
    }
    return join({tokens.data() + (tokens.size() - take), take});
}

std::string baseline_system_name(const BaselineSpec& spec) {
    const char* family = spec.kind == BaselineKind::FirstK ? "baseline1" : "baseline2";
    return std::string(family) + "-k" + std::to_string(spec.k);
}

CandidateSummarySet generate_baseline(const Corpus& corpus, const BaselineSpec& spec) {
    CandidateSummarySet set;
    set.system_name = baseline_system_name(spec);
    for (const auto& ep : corpus.episodes) {
        set.entries.emplace(ep.episode_id, extract(ep.transcript, spec));
    }
    return set;
}

SummaryStats summary_stats(const Corpus& corpus, TextField field) {
    SummaryStats stats;
    stats.count = corpus.episodes.size();
    if (stats.count == 0) return stats;

    stats.min_len = static_cast<std::size_t>(-1);
    double sum = 0.0;
    for (const auto& ep : corpus.episodes) {
        const std::string& text = field == TextField::description
                                      ? ep.episode_description
                                      : ep.transcript;
        std::size_t len = tokenize(text).size();
        sum += static_cast<double>(len);
        stats.max_len = std::max(stats.max_len, len);
        stats.min_len = std::min(stats.min_len, len);
    }
    stats.mean_len = sum / static_cast<double>(stats.count);
    return stats;
}

} // namespace podsum
