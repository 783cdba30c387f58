#include "encoding.hpp"

#include <array>

namespace ordpat {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorial = [] {
    std::array<std::uint64_t, 21> f{};
    f[0] = 1;
    for (int i = 1; i <= 20; ++i) f[i] = f[i - 1] * static_cast<std::uint64_t>(i);
    return f;
}();

void check_encodable(int d) {
    if (d < 2) raise(errc::length, "pattern codes require d >= 2, got " + std::to_string(d));
    if (d > max_encodable_d) {
        raise(errc::overflow,
              "d! does not fit in 64 bits for d = " + std::to_string(d) + " (cap is d <= 20)");
    }
}

// kse weight for one-based digit position j: d!/(d-j+1)!.
std::uint64_t kse_weight(int d, int j) {
    return kFactorial[static_cast<std::size_t>(d)] / kFactorial[static_cast<std::size_t>(d - j + 1)];
}

}  // namespace

std::uint64_t factorial(int d) {
    if (d < 0) raise(errc::range, "factorial of negative argument");
    if (d > 20) raise(errc::overflow, "d! does not fit in 64 bits for d = " + std::to_string(d));
    return kFactorial[static_cast<std::size_t>(d)];
}

PatternCode encode(const InversionPattern& inv, Scheme scheme) {
    check_inversion(inv.counts);
    const int d = inv.size();
    check_encodable(d);
    std::uint64_t value = 0;
    for (int j = 1; j <= d; ++j) {
        const auto digit = static_cast<std::uint64_t>(inv.counts[static_cast<std::size_t>(j - 1)]);
        const std::uint64_t weight = scheme == Scheme::kse
                                         ? kse_weight(d, j)
                                         : kFactorial[static_cast<std::size_t>(d - j)];
        value += digit * weight;
    }
    return PatternCode{d, scheme, value};
}

InversionPattern decode(std::uint64_t value, int d, Scheme scheme) {
    check_encodable(d);
    if (value >= kFactorial[static_cast<std::size_t>(d)]) {
        raise(errc::range, "code " + std::to_string(value) + " is out of range for d = " +
                               std::to_string(d));
    }
    std::vector<int> counts(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) {
        const std::uint64_t weight = scheme == Scheme::kse
                                         ? kse_weight(d, j)
                                         : kFactorial[static_cast<std::size_t>(d - j)];
        const auto radix = static_cast<std::uint64_t>(d - j + 1);
        counts[static_cast<std::size_t>(j - 1)] = static_cast<int>((value / weight) % radix);
    }
    return InversionPattern{std::move(counts)};
}

InversionPattern decode(const PatternCode& code) {
    return decode(code.value, code.d, code.scheme);
}

std::vector<CodeTableRow> code_table(int d) {
    std::vector<CodeTableRow> rows;
    for (RankPattern& rank : enumerate_patterns(d)) {
        InversionPattern inv = to_inversion(rank);
        const std::uint64_t kse = encode(inv, Scheme::kse).value;
        const std::uint64_t lehmer = encode(inv, Scheme::lehmer).value;
        rows.push_back(CodeTableRow{std::move(rank), std::move(inv), kse, lehmer});
    }
    return rows;
}

}  // namespace ordpat
