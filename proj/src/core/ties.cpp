#include "ties.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>

namespace ordpat {

int GeneralizedPermutationPattern::size() const {
    std::size_t n = 0;
    for (const auto& g : groups) n += g.size();
    return static_cast<int>(n);
}

bool has_ties(std::span<const double> window) {
    check_window(window);
    std::vector<double> sorted(window.begin(), window.end());
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

namespace {

// Indices 0..d-1 ordered by (value, position); stable among equals.
std::vector<int> stable_argsort(std::span<const double> window) {
    std::vector<int> idx(window.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return window[static_cast<std::size_t>(a)] <
                                                window[static_cast<std::size_t>(b)]; });
    return idx;
}

}  // namespace

RankPattern stable_rank(std::span<const double> window) {
    check_window(window);
    auto idx = stable_argsort(window);
    std::vector<int> ranks(window.size());
    for (std::size_t p = 0; p < idx.size(); ++p) {
        ranks[static_cast<std::size_t>(idx[p])] = static_cast<int>(p) + 1;
    }
    return RankPattern{std::move(ranks)};
}

namespace detail {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace detail

namespace {

// Unbiased draw from {0, ..., n-1}.
std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = gen();
    } while (v >= limit);
    return v % n;
}

}  // namespace

std::vector<double> perturb_resolve(std::span<const double> window, std::uint64_t seed) {
    check_window(window);
    auto idx = stable_argsort(window);
    std::mt19937_64 gen(detail::mix64(seed));
    // Fisher-Yates within each maximal run of equal values.
    std::size_t run_start = 0;
    for (std::size_t p = 1; p <= idx.size(); ++p) {
        const bool run_ends = p == idx.size() ||
                              window[static_cast<std::size_t>(idx[p])] !=
                                  window[static_cast<std::size_t>(idx[run_start])];
        if (run_ends) {
            for (std::size_t len = p - run_start; len > 1; --len) {
                const std::size_t pick = run_start + draw_below(gen, len);
                std::swap(idx[run_start + len - 1], idx[pick]);
            }
            run_start = p;
        }
    }
    std::vector<double> resolved(window.size());
    for (std::size_t p = 0; p < idx.size(); ++p) {
        resolved[static_cast<std::size_t>(idx[p])] = static_cast<double>(p + 1);
    }
    return resolved;
}

GeneralizedRankPattern generalized_rank(std::span<const double> window) {
    check_window(window);
    std::vector<double> distinct(window.begin(), window.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> psi(window.size());
    for (std::size_t j = 0; j < window.size(); ++j) {
        const auto it = std::lower_bound(distinct.begin(), distinct.end(), window[j]);
        psi[j] = static_cast<int>(it - distinct.begin()) + 1;
    }
    return GeneralizedRankPattern{std::move(psi), static_cast<int>(distinct.size())};
}

void check_generalized(const GeneralizedRankPattern& g) {
    const int d = g.size();
    if (d < 2) raise(errc::invalid_pattern, "pattern must hold at least 2 entries");
    if (g.m < 1 || g.m > d) {
        raise(errc::invalid_pattern, "m must lie in [1, d], got " + std::to_string(g.m));
    }
    std::vector<bool> seen(static_cast<std::size_t>(g.m), false);
    for (int v : g.psi) {
        if (v < 1 || v > g.m) {
            raise(errc::invalid_pattern,
                  "psi entry " + std::to_string(v) + " outside {1, ..., m}");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        raise(errc::invalid_pattern, "psi does not attain every value of {1, ..., m}");
    }
}

GeneralizedPermutationPattern to_groups(const GeneralizedRankPattern& g) {
    check_generalized(g);
    std::vector<std::vector<int>> groups(static_cast<std::size_t>(g.m));
    for (std::size_t j = 0; j < g.psi.size(); ++j) {
        groups[static_cast<std::size_t>(g.psi[j] - 1)].push_back(static_cast<int>(j) + 1);
    }
    return GeneralizedPermutationPattern{std::move(groups)};
}

GeneralizedRankPattern to_generalized_rank(const GeneralizedPermutationPattern& g) {
    const int d = g.size();
    if (d < 2 || g.groups.empty()) {
        raise(errc::invalid_pattern, "groups must cover at least 2 positions");
    }
    std::vector<int> psi(static_cast<std::size_t>(d), 0);
    for (std::size_t l = 0; l < g.groups.size(); ++l) {
        if (g.groups[l].empty()) raise(errc::invalid_pattern, "empty group in pattern");
        for (int j : g.groups[l]) {
            if (j < 1 || j > d || psi[static_cast<std::size_t>(j - 1)] != 0) {
                raise(errc::invalid_pattern, "groups are not a partition of {1, ..., d}");
            }
            psi[static_cast<std::size_t>(j - 1)] = static_cast<int>(l) + 1;
        }
    }
    GeneralizedRankPattern out{std::move(psi), static_cast<int>(g.groups.size())};
    check_generalized(out);
    return out;
}

GeneralizedPermutationPattern generalized_permutation(std::span<const double> window) {
    return to_groups(generalized_rank(window));
}

GeneralizedRankPattern invert_space(const GeneralizedRankPattern& g) {
    check_generalized(g);
    std::vector<int> psi(g.psi.size());
    for (std::size_t j = 0; j < psi.size(); ++j) psi[j] = g.m + 1 - g.psi[j];
    return GeneralizedRankPattern{std::move(psi), g.m};
}

std::uint64_t fubini(int d) {
    if (d < 0 || d > 15) {
        raise(errc::range, "fubini numbers are provided for 0 <= d <= 15, got " +
                               std::to_string(d));
    }
    // a(n) = sum_{k=1..n} C(n,k) a(n-k), a(0) = 1.
    std::uint64_t binom[16][16] = {};
    for (int n = 0; n <= 15; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    std::uint64_t a[16] = {1};
    for (int n = 1; n <= d; ++n) {
        std::uint64_t sum = 0;
        for (int k = 1; k <= n; ++k) sum += binom[n][k] * a[n - k];
        a[n] = sum;
    }
    return a[d];
}

namespace {

// Lexicographically ordered psi tuples of all generalized patterns of one
// length, stored back to back.
struct GeneralizedTable {
    int d = 0;
    std::uint64_t count = 0;
    std::vector<int> flat;  // count * d entries

    std::span<const int> row(std::uint64_t i) const {
        return {flat.data() + i * static_cast<std::uint64_t>(d), static_cast<std::size_t>(d)};
    }
};

GeneralizedTable build_generalized_table(int d) {
    GeneralizedTable table;
    table.d = d;
    const auto n = static_cast<std::size_t>(d);
    std::vector<int> psi(n, 1);
    // Odometer over {1..d}^d emits tuples in lexicographic order; keep the
    // surjective-onto-{1..max} ones.
    while (true) {
        int maxv = 0;
        unsigned seen = 0;
        for (int v : psi) {
            maxv = std::max(maxv, v);
            seen |= 1u << (v - 1);
        }
        if (seen == (1u << maxv) - 1u) {
            table.flat.insert(table.flat.end(), psi.begin(), psi.end());
            ++table.count;
        }
        std::size_t pos = n;
        while (pos > 0 && psi[pos - 1] == d) {
            psi[pos - 1] = 1;
            --pos;
        }
        if (pos == 0) break;
        ++psi[pos - 1];
    }
    return table;
}

const GeneralizedTable& generalized_table(int d) {
    if (d < 2 || d > max_generalized_d) {
        raise(errc::length, "generalized pattern enumeration supports 2 <= d <= " +
                                std::to_string(max_generalized_d) + ", got " + std::to_string(d));
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GeneralizedTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[d];
    if (!slot) slot = std::make_unique<GeneralizedTable>(build_generalized_table(d));
    return *slot;
}

}  // namespace

std::vector<GeneralizedRankPattern> enumerate_generalized(int d) {
    const GeneralizedTable& table = generalized_table(d);
    std::vector<GeneralizedRankPattern> out;
    out.reserve(table.count);
    for (std::uint64_t i = 0; i < table.count; ++i) {
        const auto row = table.row(i);
        std::vector<int> psi(row.begin(), row.end());
        const int m = *std::max_element(psi.begin(), psi.end());
        out.push_back(GeneralizedRankPattern{std::move(psi), m});
    }
    return out;
}

std::uint64_t generalized_code(const GeneralizedRankPattern& g) {
    check_generalized(g);
    const GeneralizedTable& table = generalized_table(g.size());
    std::uint64_t lo = 0;
    std::uint64_t hi = table.count;
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        const auto row = table.row(mid);
        if (std::lexicographical_compare(row.begin(), row.end(), g.psi.begin(), g.psi.end())) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    // Every valid pattern is in the table.
    return lo;
}

GeneralizedRankPattern generalized_pattern(std::uint64_t code, int d) {
    const GeneralizedTable& table = generalized_table(d);
    if (code >= table.count) {
        raise(errc::range, "generalized code " + std::to_string(code) +
                               " is out of range for d = " + std::to_string(d));
    }
    const auto row = table.row(code);
    std::vector<int> psi(row.begin(), row.end());
    const int m = *std::max_element(psi.begin(), psi.end());
    return GeneralizedRankPattern{std::move(psi), m};
}

}  // namespace ordpat
