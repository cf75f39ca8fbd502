// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

namespace podsum {

// Stages content through <path>.tmp and renames on success, so readers never
// see a half-written file and failed commands leave nothing behind.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);

// Whole file as a string; throws io_error when unreadable.
std::string read_file(const std::filesystem::path& path);

} // namespace podsum
