// SPDX-License-Identifier: Apache-2.0
#include "podsum/config.hpp"

#include <fstream>
#include <string>

#include "podsum/errors.hpp"

namespace podsum {

namespace {

std::string strip(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    std::size_t last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "': expected an integer, got '" +
                           value + "'");
    }
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "': expected a number, got '" +
                           value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key +
                           "': expected a non-negative integer, got '" + value + "'");
    }
}

} // namespace

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw config_error("cannot open config file: " + path.string());

    // Relative word-list paths resolve against the config file's directory,
    // so configs stay relocatable.
    auto resolve = [dir = path.parent_path()](const std::string& value) {
        std::filesystem::path p = value;
        return p.is_absolute() || dir.empty() ? p : dir / p;
    };

    RunConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = strip(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;

        std::size_t eq = trimmed.find('=');
        if (eq == std::string::npos) {
            throw config_error(path.string() + ": line " + std::to_string(line_no) +
                               ": expected `key = value`");
        }
        std::string key = strip(trimmed.substr(0, eq));
        std::string value = strip(trimmed.substr(eq + 1));
        if (key.empty()) {
            throw config_error(path.string() + ": line " + std::to_string(line_no) +
                               ": empty key");
        }

        FilterConfig& f = cfg.filters;
        if (key == "max_desc_chars") {
            f.max_desc_chars = parse_long(key, value);
        } else if (key == "min_desc_chars") {
            f.min_desc_chars = parse_long(key, value);
        } else if (key == "dup_jaccard_threshold") {
            f.dup_jaccard_threshold = parse_double(key, value);
        } else if (key == "show_sim_jaccard_threshold") {
            f.show_sim_jaccard_threshold = parse_double(key, value);
        } else if (key == "min_chars_after_emoji") {
            f.min_chars_after_emoji = parse_long(key, value);
        } else if (key == "max_duration_minutes") {
            f.max_duration_minutes = parse_double(key, value);
        } else if (key == "profanity_list_path") {
            f.profanity_list_path = resolve(value);
        } else if (key == "english_stopword_ratio_min") {
            f.english_stopword_ratio_min = parse_double(key, value);
        } else if (key == "ad_marker_list_path") {
            f.ad_marker_list_path = resolve(value);
        } else if (key == "ad_token_fraction_max") {
            f.ad_token_fraction_max = parse_double(key, value);
        } else if (key == "seed") {
            cfg.seed = parse_u64(key, value);
            cfg.seed_set = true;
        } else {
            throw config_error("unknown config key '" + key + "' (" + path.string() +
                               ": line " + std::to_string(line_no) + ")");
        }
    }
    validate(cfg.filters);
    return cfg;
}

} // namespace podsum
