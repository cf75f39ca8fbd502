// SPDX-License-Identifier: Apache-2.0
#include "podsum/fsio.hpp"

#include <fstream>
#include <sstream>

#include "podsum/errors.hpp"

namespace podsum {

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw io_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            out.close();
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw io_error("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw io_error("cannot rename " + tmp.string() + " to " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace podsum
