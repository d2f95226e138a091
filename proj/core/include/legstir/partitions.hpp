#pragma once

// Legendre-Stirling set partitions of the multiset {1,1',...,n,n'}: one
// possibly-empty zero box that never holds both copies of a value, and
// nonzero boxes that each hold both copies of their minimum and of no other
// value. Partitions are always kept in standard form (nonzero boxes ordered
// by minimum, zero box last).

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legstir/algebra.hpp"

namespace legstir {

struct Element {
    int value = 0;
    bool barred = false;

    /// Storage order: by value, unbarred copy first. For the partition order
    /// both copies of a value are equal; compare .value for that.
    friend auto operator<=>(const Element&, const Element&) = default;
};

using Box = std::vector<Element>;

struct LSPartition {
    int n = 0;
    std::vector<Box> boxes;
    Box zero_box;

    std::size_t block_count() const { return boxes.size(); }

    /// Number of barred entries in the zero box.
    std::size_t barred_in_zero_box() const;

    /// Sorts every box and orders the nonzero boxes by minimum.
    void normalize();

    friend bool operator==(const LSPartition&, const LSPartition&) = default;
    friend auto operator<=>(const LSPartition&, const LSPartition&) = default;
};

/// The first violated rule, or nullopt if p is a valid partition in
/// standard form.
std::optional<std::string> find_violation(const LSPartition& p);

inline bool validate(const LSPartition& p) { return !find_violation(p).has_value(); }

/// Canonical text, e.g. "{1,1',3}{2,2'}<3'>".
std::string to_string(const LSPartition& p);

/// Parses the canonical text. n is the largest value present. Throws
/// std::invalid_argument on malformed input; does not validate the rules.
LSPartition parse_partition(std::string_view text);

/// Largest n accepted by the exhaustive routines below.
inline constexpr int max_enumeration_n = 7;

/// Visits every partition of M_n exactly once. Partitions are grown by
/// inserting the pair {m+1, (m+1)'} into each partition of M_m: as a new
/// box, split across two nonzero boxes, or split between a nonzero box and
/// the zero box. Throws std::out_of_range unless 1 <= n <= 7.
void for_each_partition(int n, const std::function<void(const LSPartition&)>& visit);

std::vector<LSPartition> enumerate_partitions(int n);

/// Histogram of the number of nonzero boxes over all partitions of M_n.
std::map<std::size_t, Int> count_by_blocks(int n);

/// sum over partitions with k nonzero boxes of z^(barred entries in zero box).
ZPoly js_brute(int n, std::size_t k);

}  // namespace legstir
