// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

extern std::string g_podsum_cli;

namespace testsupport {

// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::atomic<int> counter{0};
        auto base = std::filesystem::temp_directory_path();
        path_ = base / ("podsum_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("test setup: cannot write " + p.string());
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("test setup: cannot read " + p.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the podsum binary with the given argument string inside dir.
inline CliResult run_cli(const std::string& args, const TempDir& dir) {
    static std::atomic<int> counter{0};
    int id = counter.fetch_add(1);
    auto out_path = dir.file("cli_out_" + std::to_string(id) + ".txt");
    auto err_path = dir.file("cli_err_" + std::to_string(id) + ".txt");
    std::string cmd = "'" + g_podsum_cli + "' " + args + " >'" + out_path.string() +
                      "' 2>'" + err_path.string() + "'";
    int status = std::system(cmd.c_str());

    CliResult result;
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

} // namespace testsupport
