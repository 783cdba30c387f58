#include "pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ordpat {

void check_window(std::span<const double> window) {
    if (window.size() < 2) {
        raise(errc::length, "window must hold at least 2 values, got " +
                                std::to_string(window.size()));
    }
    for (double v : window) {
        if (!std::isfinite(v)) {
            raise(errc::input, "window contains a NaN or infinite value");
        }
    }
}

bool is_permutation_tuple(std::span<const int> tuple) {
    const int d = static_cast<int>(tuple.size());
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int v : tuple) {
        if (v < 1 || v > d || seen[static_cast<std::size_t>(v - 1)]) return false;
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return true;
}

void check_permutation(std::span<const int> tuple) {
    if (tuple.size() < 2) {
        raise(errc::invalid_pattern, "pattern must hold at least 2 entries");
    }
    if (!is_permutation_tuple(tuple)) {
        raise(errc::invalid_pattern, "tuple is not a permutation of {1, ..., d}");
    }
}

void check_inversion(std::span<const int> counts) {
    const int d = static_cast<int>(counts.size());
    if (d < 2) {
        raise(errc::invalid_pattern, "pattern must hold at least 2 entries");
    }
    for (int j = 0; j < d; ++j) {
        if (counts[static_cast<std::size_t>(j)] < 0 ||
            counts[static_cast<std::size_t>(j)] > d - 1 - j) {
            raise(errc::invalid_pattern,
                  "inversion count " + std::to_string(counts[static_cast<std::size_t>(j)]) +
                      " at position " + std::to_string(j + 1) + " exceeds " +
                      std::to_string(d - 1 - j));
        }
    }
}

namespace {

// Indices 0..d-1 ordered by value; reports whether two equal values exist.
std::vector<int> argsort(std::span<const double> window, bool& tied) {
    std::vector<int> idx(window.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return window[static_cast<std::size_t>(a)] <
                                         window[static_cast<std::size_t>(b)]; });
    tied = false;
    for (std::size_t p = 1; p < idx.size(); ++p) {
        if (window[static_cast<std::size_t>(idx[p - 1])] ==
            window[static_cast<std::size_t>(idx[p])]) {
            tied = true;
            break;
        }
    }
    return idx;
}

std::vector<int> argsort_strict(std::span<const double> window) {
    bool tied = false;
    auto idx = argsort(window, tied);
    if (tied) raise(errc::tie, "window contains tied values");
    return idx;
}

}  // namespace

RankPattern rank_pattern(std::span<const double> window) {
    check_window(window);
    auto idx = argsort_strict(window);
    std::vector<int> ranks(window.size());
    for (std::size_t p = 0; p < idx.size(); ++p) {
        ranks[static_cast<std::size_t>(idx[p])] = static_cast<int>(p) + 1;
    }
    return RankPattern{std::move(ranks)};
}

PermutationPattern permutation_pattern(std::span<const double> window) {
    check_window(window);
    auto idx = argsort_strict(window);
    std::vector<int> indices(idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p) indices[p] = idx[p] + 1;
    return PermutationPattern{std::move(indices)};
}

CountedInversion inversion_pattern_counted(std::span<const double> window) {
    check_window(window);
    const std::size_t d = window.size();
    std::vector<int> counts(d, 0);
    std::uint64_t comparisons = 0;
    bool tied = false;
    // One three-way order comparison per unordered index pair.
    for (std::size_t j = 0; j + 1 < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            ++comparisons;
            if (window[j] > window[k]) {
                ++counts[j];
            } else if (window[j] == window[k]) {
                tied = true;
            }
        }
    }
    if (tied) raise(errc::tie, "window contains tied values");
    return CountedInversion{InversionPattern{std::move(counts)}, comparisons};
}

InversionPattern inversion_pattern(std::span<const double> window) {
    return inversion_pattern_counted(window).pattern;
}

namespace {

std::vector<int> invert_tuple(std::span<const int> tuple) {
    check_permutation(tuple);
    std::vector<int> out(tuple.size());
    for (std::size_t j = 0; j < tuple.size(); ++j) {
        out[static_cast<std::size_t>(tuple[j] - 1)] = static_cast<int>(j) + 1;
    }
    return out;
}

}  // namespace

RankPattern to_rank(const PermutationPattern& p) {
    return RankPattern{invert_tuple(p.indices)};
}

PermutationPattern to_permutation(const RankPattern& r) {
    return PermutationPattern{invert_tuple(r.ranks)};
}

InversionPattern to_inversion(const RankPattern& r) {
    check_permutation(r.ranks);
    const std::size_t d = r.ranks.size();
    std::vector<int> counts(d, 0);
    for (std::size_t j = 0; j + 1 < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            if (r.ranks[j] > r.ranks[k]) ++counts[j];
        }
    }
    return InversionPattern{std::move(counts)};
}

PermutationPattern to_permutation(const InversionPattern& inv) {
    check_inversion(inv.counts);
    const int d = inv.size();
    std::vector<int> rho;
    rho.reserve(static_cast<std::size_t>(d));
    rho.push_back(d);
    for (int l = 2; l <= d; ++l) {
        const int value = d + 1 - l;
        const int count = inv.counts[static_cast<std::size_t>(value - 1)];
        // count == 0 prepends, otherwise the value lands right of rho[count].
        rho.insert(rho.begin() + count, value);
    }
    return PermutationPattern{std::move(rho)};
}

std::vector<RankPattern> enumerate_patterns(int d) {
    if (d < 2 || d > 9) {
        raise(errc::length, "enumerate_patterns supports 2 <= d <= 9, got " + std::to_string(d));
    }
    std::vector<int> ranks(static_cast<std::size_t>(d));
    std::iota(ranks.begin(), ranks.end(), 1);
    std::vector<RankPattern> out;
    do {
        out.push_back(RankPattern{ranks});
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return out;
}

}  // namespace ordpat
