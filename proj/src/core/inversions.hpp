#pragma once

#include "encoding.hpp"
#include "pattern.hpp"

namespace ordpat {

// Space inversion is the pattern of the negated window (reflection on a
// horizontal line), time inversion the pattern of the reversed window.
// Both are involutions. Per representation:
//
//                space                time
//   rank         r'_j = d+1-r_j       reverse the tuple
//   permutation  reverse the tuple    pi'_j = d+1-pi_j
//   inversion    i'_j = d-j-i_j       no closed form; recomputed via ranks

RankPattern invert_space(const RankPattern& r);
PermutationPattern invert_space(const PermutationPattern& p);
InversionPattern invert_space(const InversionPattern& inv);

RankPattern invert_time(const RankPattern& r);
PermutationPattern invert_time(const PermutationPattern& p);
InversionPattern invert_time(const InversionPattern& inv);

/// Code of the space-inverted pattern under the same scheme. For the Lehmer
/// scheme the original and reflected codes always sum to d!-1.
PatternCode reflect_code(const PatternCode& code);

}  // namespace ordpat
