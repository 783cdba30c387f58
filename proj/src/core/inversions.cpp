#include "inversions.hpp"

#include <algorithm>

namespace ordpat {

RankPattern invert_space(const RankPattern& r) {
    check_permutation(r.ranks);
    const int d = r.size();
    std::vector<int> out(r.ranks.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = d + 1 - r.ranks[j];
    return RankPattern{std::move(out)};
}

PermutationPattern invert_space(const PermutationPattern& p) {
    check_permutation(p.indices);
    std::vector<int> out(p.indices.rbegin(), p.indices.rend());
    return PermutationPattern{std::move(out)};
}

InversionPattern invert_space(const InversionPattern& inv) {
    check_inversion(inv.counts);
    const int d = inv.size();
    std::vector<int> out(inv.counts.size());
    for (int j = 0; j < d; ++j) {
        out[static_cast<std::size_t>(j)] = d - 1 - j - inv.counts[static_cast<std::size_t>(j)];
    }
    return InversionPattern{std::move(out)};
}

RankPattern invert_time(const RankPattern& r) {
    check_permutation(r.ranks);
    std::vector<int> out(r.ranks.rbegin(), r.ranks.rend());
    return RankPattern{std::move(out)};
}

PermutationPattern invert_time(const PermutationPattern& p) {
    check_permutation(p.indices);
    const int d = p.size();
    std::vector<int> out(p.indices.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = d + 1 - p.indices[j];
    return PermutationPattern{std::move(out)};
}

InversionPattern invert_time(const InversionPattern& inv) {
    // The reversed window's counts are left non-inversion counts, which are
    // not a function of the right inversion counts, so this goes through the
    // rank representation.
    RankPattern rank = to_rank(to_permutation(inv));
    std::reverse(rank.ranks.begin(), rank.ranks.end());
    return to_inversion(rank);
}

PatternCode reflect_code(const PatternCode& code) {
    return encode(invert_space(decode(code)), code.scheme);
}

}  // namespace ordpat
