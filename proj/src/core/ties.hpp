#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pattern.hpp"

namespace ordpat {

/// How windows with tied values are turned into patterns.
///
///   skip         windows with ties produce no pattern
///   perturb      tied groups are put into a seeded random strict order
///   stable       earlier position wins among equals (stable ranks)
///   generalized  tied entries share a rank (generalized patterns)
struct TieStrategy {
    enum class Kind { skip, perturb, stable, generalized };

    Kind kind = Kind::stable;
    std::uint64_t seed = 0;  // meaningful for perturb only

    static TieStrategy skip() { return {Kind::skip, 0}; }
    static TieStrategy perturb(std::uint64_t seed) { return {Kind::perturb, seed}; }
    static TieStrategy stable() { return {Kind::stable, 0}; }
    static TieStrategy generalized() { return {Kind::generalized, 0}; }

    bool operator==(const TieStrategy&) const = default;
};

/// Rank tuple over the distinct values only: psi[j] = k iff x_j equals the
/// k-th smallest distinct value. m is the number of distinct values, every
/// value of {1, ..., m} occurs in psi. On tie-free windows psi equals the
/// plain rank tuple.
struct GeneralizedRankPattern {
    std::vector<int> psi;
    int m = 0;

    int size() const { return static_cast<int>(psi.size()); }
    bool operator==(const GeneralizedRankPattern&) const = default;
};

/// Equivalent set form: groups[l] holds the (ascending, one-based) window
/// positions sharing rank l+1. Groups are disjoint, non-empty, and cover
/// {1, ..., d}.
struct GeneralizedPermutationPattern {
    std::vector<std::vector<int>> groups;

    int size() const;
    bool operator==(const GeneralizedPermutationPattern&) const = default;
};

/// True iff some pair of entries is exactly equal. errc::input on NaN.
bool has_ties(std::span<const double> window);

/// Rank tuple under the stable order: r_j < r_k iff x_j < x_k, or
/// x_j = x_k and j < k. Coincides with rank_pattern on tie-free windows.
RankPattern stable_rank(std::span<const double> window);

/// Tie-free stand-in for `window`: the returned values are the positions in
/// a strict order that keeps every non-tied pair and puts each tied group
/// into a uniformly random order drawn from a generator seeded with `seed`.
/// Equal inputs give equal outputs.
std::vector<double> perturb_resolve(std::span<const double> window, std::uint64_t seed);

GeneralizedRankPattern generalized_rank(std::span<const double> window);
GeneralizedPermutationPattern generalized_permutation(std::span<const double> window);

GeneralizedPermutationPattern to_groups(const GeneralizedRankPattern& g);
GeneralizedRankPattern to_generalized_rank(const GeneralizedPermutationPattern& g);

/// Space inversion of a generalized pattern: psi'_j = m+1-psi_j.
GeneralizedRankPattern invert_space(const GeneralizedRankPattern& g);

/// Number of generalized patterns of length d (Fubini numbers), exact for
/// 0 <= d <= 15.
std::uint64_t fubini(int d);

/// All fubini(d) generalized patterns in ascending lexicographic order of
/// the psi tuple, 2 <= d <= 7.
std::vector<GeneralizedRankPattern> enumerate_generalized(int d);

/// Index of a generalized pattern in the lexicographic enumeration, and its
/// inverse. Backed by a cached per-d table with binary-search lookup.
std::uint64_t generalized_code(const GeneralizedRankPattern& g);
GeneralizedRankPattern generalized_pattern(std::uint64_t code, int d);

/// Largest d for which the generalized enumeration (and thus generalized
/// codes) is available.
inline constexpr int max_generalized_d = 7;

void check_generalized(const GeneralizedRankPattern& g);  // errc::invalid_pattern

namespace detail {

/// SplitMix64 scramble; used to derive per-window seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace detail

}  // namespace ordpat
