#pragma once

// CLS-sequences: words over {X, A(i,j), B(s), Bb(s)} whose symbol indices are
// bounded by the number of X's seen so far. They encode Legendre-Stirling
// partitions one value at a time; phi builds the partition and phi_inverse
// recovers the word by peeling off the largest value.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legstir/algebra.hpp"
#include "legstir/partitions.hpp"

namespace legstir {

struct CLSSymbol {
    enum class Kind {
        /// open a new box {m,m'}
        x,
        /// m into box i, m' into box j
        a,
        /// m into box s, m' into the zero box
        b,
        /// m' into box s, m into the zero box
        b_bar,
    };

    Kind kind = Kind::x;
    int i = 0;  ///< first index (A) or box index s (B, Bb)
    int j = 0;  ///< second index, A only

    static CLSSymbol X() { return {Kind::x, 0, 0}; }
    static CLSSymbol A(int i, int j) { return {Kind::a, i, j}; }
    static CLSSymbol B(int s) { return {Kind::b, s, 0}; }
    static CLSSymbol Bbar(int s) { return {Kind::b_bar, s, 0}; }

    friend bool operator==(const CLSSymbol&, const CLSSymbol&) = default;
    friend auto operator<=>(const CLSSymbol&, const CLSSymbol&) = default;
};

using CLSSequence = std::vector<CLSSymbol>;

/// Number of X symbols in the sequence.
std::size_t count_x(const CLSSequence& seq);

/// First position (0-based) that breaks prefix validity, with the reason.
struct CodeViolation {
    std::size_t position;
    std::string reason;
};
std::optional<CodeViolation> find_code_violation(const CLSSequence& seq);

inline bool validate_code(const CLSSequence& seq) { return !find_code_violation(seq).has_value(); }

/// Comma-separated tokens: X, A(i,j), B(s), Bb(s).
std::string to_string(const CLSSequence& seq);
/// Throws std::invalid_argument on malformed tokens (does not validate).
CLSSequence parse_code(std::string_view text);

/// Throws std::invalid_argument if seq is not a valid code.
LSPartition phi(const CLSSequence& seq);

/// Throws std::invalid_argument if p is not a valid partition.
CLSSequence phi_inverse(const LSPartition& p);

/// Number of legal non-X symbols after t X's: t(t-1) A's plus 2t B/Bb's.
Int non_x_choices(std::size_t t);

/// Visits every valid code of length n (1 <= n <= 7).
void for_each_code(int n, const std::function<void(const CLSSequence&)>& visit);

/// #{codes of length n with k X's}, by exhaustive enumeration (n <= 7).
Int count_codes_exhaustive(int n, std::size_t k);

/// Same count without enumeration: sums the product of per-step choice
/// counts over all placements of the X's.
Int count_codes(std::size_t n, std::size_t k);

}  // namespace legstir
