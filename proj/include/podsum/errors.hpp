// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace podsum {

// Bad configuration: missing/invalid settings, unusable word lists.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem trouble: unreadable input, unwritable output.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent data: bad JSONL, duplicate ids, missing entries.
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace podsum
