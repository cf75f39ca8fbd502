// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>

#include "podsum/filters.hpp"

namespace podsum {

// Settings resolved for one run: flags > config file > built-in defaults.
// The config file is a flat `key = value` document mirroring FilterConfig
// plus `seed`; '#' comment lines are ignored, unknown keys are rejected.
struct RunConfig {
    FilterConfig filters;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

// Throws config_error naming an unknown key or an unparseable value.
RunConfig load_run_config(const std::filesystem::path& path);

} // namespace podsum
