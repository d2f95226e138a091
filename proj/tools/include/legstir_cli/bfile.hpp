#pragma once

// OEIS b-file reader: one "index value" pair per line, '#' comments and blank
// lines ignored, indices strictly increasing.

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legstir/algebra.hpp"

namespace legstir::cli {

struct BFileEntry {
    legstir::Int index;
    legstir::Int value;
};

struct BFile {
    std::string id;
    std::vector<BFileEntry> entries;

    /// Value stored at index i, if present.
    std::optional<legstir::Int> at(const legstir::Int& i) const;
};

class BFileError : public std::runtime_error {
public:
    BFileError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
    std::size_t line;  ///< 1-based; 0 when not tied to a line
};

BFile parse_bfile(std::istream& in, std::string id);
BFile read_bfile(const std::string& path, std::string id);

/// Retrieves a b-file from an http(s) URL, caching the body under cache_dir.
/// A cached copy is used without touching the network. Throws BFileError.
BFile fetch_bfile(const std::string& url, std::string id, const std::string& cache_dir);

/// LEGSTIR_CACHE_DIR, else $HOME/.cache/legstir, else ./.legstir-cache.
std::string default_cache_dir();

}  // namespace legstir::cli
