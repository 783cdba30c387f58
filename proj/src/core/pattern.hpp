#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "error.hpp"

namespace ordpat {

// The three tuple representations of the ordinal pattern of a window of
// d pairwise distinct values. All entries are one-based and follow the
// increasing-order convention: rank 1 is the minimum, and the permutation
// lists the indices of the values sorted from least to largest.

/// Rank tuple: ranks[j] is the rank of the j-th window entry,
/// a permutation of {1, ..., d}.
struct RankPattern {
    std::vector<int> ranks;

    int size() const { return static_cast<int>(ranks.size()); }
    bool operator==(const RankPattern&) const = default;
};

/// Sorting permutation: indices[0] is the position of the minimum, ...,
/// indices[d-1] the position of the maximum.
struct PermutationPattern {
    std::vector<int> indices;

    int size() const { return static_cast<int>(indices.size()); }
    bool operator==(const PermutationPattern&) const = default;
};

/// Right inversion counts: counts[j] = #{k > j : x_j > x_k}.
/// Invariants: 0 <= counts[j] <= d-1-j (zero-based j), so the last entry
/// is always 0. It is stored anyway so all tuple representations share
/// the same length.
struct InversionPattern {
    std::vector<int> counts;

    int size() const { return static_cast<int>(counts.size()); }
    bool operator==(const InversionPattern&) const = default;
};

/// Rejects windows with fewer than 2 values (errc::length) or non-finite
/// entries (errc::input).
void check_window(std::span<const double> window);

/// True iff `tuple` is a permutation of {1, ..., d}.
bool is_permutation_tuple(std::span<const int> tuple);

void check_permutation(std::span<const int> tuple);  // errc::invalid_pattern
void check_inversion(std::span<const int> counts);   // errc::invalid_pattern

/// Rank tuple of a tie-free window. Throws errc::tie on equal values.
RankPattern rank_pattern(std::span<const double> window);

/// Sorting permutation of a tie-free window. Throws errc::tie on equal values.
PermutationPattern permutation_pattern(std::span<const double> window);

/// Right inversion counts of a tie-free window, computed with exactly
/// (d^2-d)/2 pairwise value comparisons. Throws errc::tie on equal values.
InversionPattern inversion_pattern(std::span<const double> window);

struct CountedInversion {
    InversionPattern pattern;
    std::uint64_t comparisons = 0;
};

/// Same as inversion_pattern but reports the number of pairwise value
/// comparisons spent, always (d^2-d)/2.
CountedInversion inversion_pattern_counted(std::span<const double> window);

/// Rank <-> permutation conversion: each direction inverts the tuple as a
/// permutation, and applying it twice returns the input.
RankPattern to_rank(const PermutationPattern& p);
PermutationPattern to_permutation(const RankPattern& r);

/// Inversion counts derived from ranks: counts[j] = #{k > j : r_j > r_k}.
InversionPattern to_inversion(const RankPattern& r);

/// Rebuilds the sorting permutation from inversion counts by the insertion
/// procedure: starting from (d), the value d+1-l is inserted at step l to
/// the left of the current tuple when its count is zero, otherwise to the
/// right of position count.
PermutationPattern to_permutation(const InversionPattern& inv);

/// All d! rank tuples in lexicographic order, 2 <= d <= 9.
std::vector<RankPattern> enumerate_patterns(int d);

}  // namespace ordpat
