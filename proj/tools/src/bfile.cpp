#include "legstir_cli/bfile.hpp"

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "httplib.h"

namespace legstir::cli {

namespace fs = std::filesystem;

std::optional<legstir::Int> BFile::at(const legstir::Int& i) const {
    for (const auto& e : entries)
        if (e.index == i) return e.value;
    return std::nullopt;
}

namespace {

bool parse_int(const std::string& token, legstir::Int& out) {
    if (token.empty()) return false;
    std::size_t start = token[0] == '-' || token[0] == '+' ? 1 : 0;
    if (start == token.size()) return false;
    for (std::size_t i = start; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i]))) return false;
    return out.set_str(token[0] == '+' ? token.substr(1) : token, 10) == 0;
}

}  // namespace

BFile parse_bfile(std::istream& in, std::string id) {
    BFile file{std::move(id), {}};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        if (b.empty()) throw BFileError("expected \"index value\", got \"" + line + "\"", lineno);
        if (fields >> extra) throw BFileError("trailing text \"" + extra + "\"", lineno);
        BFileEntry e;
        if (!parse_int(a, e.index)) throw BFileError("bad index \"" + a + "\"", lineno);
        if (!parse_int(b, e.value)) throw BFileError("bad value \"" + b + "\"", lineno);
        if (!file.entries.empty() && e.index <= file.entries.back().index)
            throw BFileError("index " + e.index.get_str() + " is not increasing", lineno);
        file.entries.push_back(std::move(e));
    }
    return file;
}

BFile read_bfile(const std::string& path, std::string id) {
    std::ifstream in(path);
    if (!in) throw BFileError("cannot open " + path, 0);
    return parse_bfile(in, std::move(id));
}

std::string default_cache_dir() {
    if (const char* dir = std::getenv("LEGSTIR_CACHE_DIR"); dir && *dir) return dir;
    if (const char* home = std::getenv("HOME"); home && *home) return std::string(home) + "/.cache/legstir";
    return ".legstir-cache";
}

BFile fetch_bfile(const std::string& url, std::string id, const std::string& cache_dir) {
    const fs::path cached = fs::path(cache_dir) / (id + ".txt");
    if (fs::exists(cached)) return read_bfile(cached.string(), std::move(id));

    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw BFileError("not a URL: " + url, 0);
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_follow_location(true);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    auto res = client.Get(path);
    if (!res) throw BFileError("request to " + url + " failed: " + httplib::to_string(res.error()), 0);
    if (res->status != 200) throw BFileError("GET " + url + " returned HTTP " + std::to_string(res->status), 0);

    std::istringstream body(res->body);
    BFile parsed = parse_bfile(body, id);

    std::error_code ec;
    fs::create_directories(cached.parent_path(), ec);
    if (!ec) {
        std::ofstream out(cached);
        out << res->body;
    }
    return parsed;
}

}  // namespace legstir::cli
