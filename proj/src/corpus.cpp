// SPDX-License-Identifier: Apache-2.0
#include "podsum/corpus.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "podsum/errors.hpp"
#include "podsum/fsio.hpp"

namespace podsum {

namespace {

using ordered_json = nlohmann::ordered_json;

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string require_string(const nlohmann::json& obj, const char* field,
                           std::size_t line_no) {
    auto it = obj.find(field);
    if (it == obj.end()) {
        throw data_error("line " + std::to_string(line_no) +
                         ": missing required field '" + field + "'");
    }
    if (!it->is_string()) {
        throw data_error("line " + std::to_string(line_no) + ": field '" +
                         field + "' must be a string");
    }
    return it->get<std::string>();
}

double require_number(const nlohmann::json& obj, const char* field,
                      std::size_t line_no) {
    auto it = obj.find(field);
    if (it == obj.end()) {
        throw data_error("line " + std::to_string(line_no) +
                         ": missing required field '" + field + "'");
    }
    if (!it->is_number()) {
        throw data_error("line " + std::to_string(line_no) + ": field '" +
                         field + "' must be a number");
    }
    return it->get<double>();
}

nlohmann::json parse_line(const std::string& line, std::size_t line_no,
                          const std::filesystem::path& path) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(path.string() + ": line " + std::to_string(line_no) +
                         ": malformed JSON (" + e.what() + ")");
    }
    if (!obj.is_object()) {
        throw data_error(path.string() + ": line " + std::to_string(line_no) +
                         ": expected a JSON object");
    }
    return obj;
}

} // namespace

Corpus read_corpus(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open corpus file: " + path.string());

    Corpus corpus;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;

        auto obj = parse_line(line, line_no, path);
        Episode ep;
        ep.episode_id = require_string(obj, "episode_id", line_no);
        ep.show_id = require_string(obj, "show_id", line_no);
        ep.episode_description = require_string(obj, "episode_description", line_no);
        ep.show_description = require_string(obj, "show_description", line_no);
        ep.transcript = require_string(obj, "transcript", line_no);
        ep.duration_minutes = require_number(obj, "duration_minutes", line_no);

        if (ep.episode_id.empty()) {
            throw data_error("line " + std::to_string(line_no) +
                             ": episode_id must be non-empty");
        }
        if (ep.show_id.empty()) {
            throw data_error("line " + std::to_string(line_no) +
                             ": show_id must be non-empty");
        }
        if (ep.duration_minutes < 0) {
            throw data_error("line " + std::to_string(line_no) +
                             ": duration_minutes must be >= 0");
        }
        if (!seen.insert(ep.episode_id).second) {
            throw data_error("duplicate episode_id '" + ep.episode_id +
                             "' (line " + std::to_string(line_no) + ")");
        }
        corpus.episodes.push_back(std::move(ep));
    }
    return corpus;
}

void write_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::string content;
    for (const auto& ep : corpus.episodes) {
        ordered_json obj;
        obj["episode_id"] = ep.episode_id;
        obj["show_id"] = ep.show_id;
        obj["episode_description"] = ep.episode_description;
        obj["show_description"] = ep.show_description;
        obj["transcript"] = ep.transcript;
        obj["duration_minutes"] = ep.duration_minutes;
        content += obj.dump();
        content.push_back('\n');
    }
    write_file_atomic(path, content);
}

CandidateSummarySet read_candidates(const std::filesystem::path& path,
                                    const std::string& system_name) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open candidate file: " + path.string());

    CandidateSummarySet set;
    set.system_name = system_name;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;

        auto obj = parse_line(line, line_no, path);
        std::string id = require_string(obj, "episode_id", line_no);
        std::string summary = require_string(obj, "summary", line_no);
        if (id.empty()) {
            throw data_error("line " + std::to_string(line_no) +
                             ": episode_id must be non-empty");
        }
        if (!set.entries.emplace(std::move(id), std::move(summary)).second) {
            throw data_error("duplicate episode_id '" +
                             obj["episode_id"].get<std::string>() + "' in " +
                             path.string());
        }
    }
    return set;
}

void write_candidates(const CandidateSummarySet& set,
                      const std::filesystem::path& path) {
    std::string content;
    for (const auto& [id, summary] : set.entries) {
        ordered_json obj;
        obj["episode_id"] = id;
        obj["summary"] = summary;
        content += obj.dump();
        content.push_back('\n');
    }
    write_file_atomic(path, content);
}

} // namespace podsum
