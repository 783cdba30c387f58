#pragma once

#include <cstdint>
#include <vector>

#include "pattern.hpp"

namespace ordpat {

/// Bijective integer encodings of ordinal patterns onto {0, ..., d!-1}.
///
/// Both schemes weight the right inversion counts, they differ only in the
/// weights:
///   kse:    sum_j i_j * d!/(d-j+1)!   (mixed radix, least significant first)
///   lehmer: sum_j i_j * (d-j)!        (factorial number system, most
///                                      significant first)
/// The Lehmer code orders patterns lexicographically by rank tuple; the KSE
/// code does not.
enum class Scheme { kse, lehmer };

struct PatternCode {
    int d = 0;
    Scheme scheme = Scheme::lehmer;
    std::uint64_t value = 0;

    bool operator==(const PatternCode&) const = default;
};

/// Largest d whose factorial fits in 64 bits; encodings are capped here.
inline constexpr int max_encodable_d = 20;

/// Exact d! for 0 <= d <= 20; errc::range for negative d, errc::overflow
/// beyond 20.
std::uint64_t factorial(int d);

PatternCode encode(const InversionPattern& inv, Scheme scheme);

/// Inverse of encode: mixed-radix digit extraction per scheme. Throws
/// errc::range when value >= d!.
InversionPattern decode(const PatternCode& code);
InversionPattern decode(std::uint64_t value, int d, Scheme scheme);

struct CodeTableRow {
    RankPattern rank;
    InversionPattern inversion;
    std::uint64_t kse = 0;
    std::uint64_t lehmer = 0;
};

/// One row per pattern, ordered lexicographically by rank tuple; 2 <= d <= 9.
std::vector<CodeTableRow> code_table(int d);

}  // namespace ordpat
