// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace podsum {

// One podcast episode. Text fields are stored verbatim; normalization is a
// scoring-time concern.
struct Episode {
    std::string episode_id;
    std::string show_id;
    std::string episode_description; // the creator summary, i.e. the reference
    std::string show_description;
    std::string transcript;
    double duration_minutes = 0.0;

    bool operator==(const Episode&) const = default;
};

// Episodes in input-file order, unique episode_id. Immutable after
// construction and safe to share across threads read-only.
struct Corpus {
    std::vector<Episode> episodes;

    bool operator==(const Corpus&) const = default;
};

// Candidate summaries for one system, keyed by episode_id.
struct CandidateSummarySet {
    std::string system_name;
    std::map<std::string, std::string> entries;
};

// Reads a JSONL corpus (one episode object per line, blank lines skipped).
// Throws data_error naming the offending line/field/id, io_error when the
// file cannot be opened.
Corpus read_corpus(const std::filesystem::path& path);

// Writes one JSON object per line; read_corpus(write_corpus(c)) == c.
// The write is staged through a temp file, so a failed write leaves no
// partial output behind.
void write_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Reads a JSONL candidate file with fields episode_id and summary.
CandidateSummarySet read_candidates(const std::filesystem::path& path,
                                    const std::string& system_name);

// Writes a CandidateSummarySet in the same JSONL format, sorted by id.
void write_candidates(const CandidateSummarySet& set,
                      const std::filesystem::path& path);

} // namespace podsum
