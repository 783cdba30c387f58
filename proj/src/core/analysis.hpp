#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "encoding.hpp"
#include "ties.hpp"

namespace ordpat {

struct ExtractionConfig {
    int d = 3;
    int lag = 1;  // spacing between consecutive window entries, in samples
    TieStrategy ties = TieStrategy::stable();
    Scheme scheme = Scheme::lehmer;

    bool operator==(const ExtractionConfig&) const = default;
};

/// One entry per window start t = 0, ..., n-1-(d-1)*lag over the series,
/// window (x_t, x_{t+lag}, ..., x_{t+(d-1)lag}). Absent entries are windows
/// dropped by the skip strategy. Codes live in [0, d!-1] (kse/lehmer) or
/// [0, fubini(d)-1] (generalized strategy). `comparisons` counts the
/// pairwise order comparisons spent on window values; on tie-free data this
/// is exactly (d^2-d)/2 per window.
struct ExtractionResult {
    ExtractionConfig config;
    std::vector<std::optional<std::uint64_t>> codes;
    std::uint64_t comparisons = 0;
};

/// Number of windows a series of length n yields; errc::length if none.
std::uint64_t window_count(std::uint64_t n, const ExtractionConfig& cfg);

ExtractionResult extract(std::span<const double> series, const ExtractionConfig& cfg);

/// Extraction restricted to the absolute window indices
/// [first_window, first_window + count). Per-window perturbation seeds are
/// derived from the absolute index, so chunked extraction merges to the
/// byte-identical result of a single pass.
ExtractionResult extract_range(std::span<const double> series, const ExtractionConfig& cfg,
                               std::uint64_t first_window, std::uint64_t count);

/// Codes only, for callers that do not need the comparison counter.
std::vector<std::optional<std::uint64_t>> pattern_sequence(std::span<const double> series,
                                                           const ExtractionConfig& cfg);

struct PatternDistribution {
    ExtractionConfig config;
    std::map<std::uint64_t, std::uint64_t> counts;  // code -> occurrences
    std::uint64_t total = 0;                        // sum of counts
    std::uint64_t skipped = 0;                      // absent windows

    /// d! or fubini(d) depending on the strategy.
    std::uint64_t code_space() const;
    double frequency(std::uint64_t code) const;  // count/total, 0 when unseen
};

PatternDistribution pattern_distribution(const ExtractionResult& extraction);

/// Distribution from raw optional codes; validates every code against the
/// configuration's code space (errc::range on violation).
PatternDistribution pattern_distribution(std::span<const std::optional<std::uint64_t>> codes,
                                         const ExtractionConfig& cfg);

/// Shannon entropy -sum p log p in nats; errc::empty when total == 0.
double pattern_entropy(const PatternDistribution& dist);

/// Ordinal pattern dependence between two aligned series.
///
/// alpha_pos standardizes the frequency of coinciding codes against the
/// product of the marginal distributions; alpha_neg does the same after
/// space-reflecting the second series' codes. Only windows present in both
/// series enter any estimate (n_windows). When a side's expected coincidence
/// probability is 1 its alpha is 0 and `degenerate` is set.
struct OpdReport {
    int d = 0;
    double alpha_pos = 0.0;
    double alpha_neg = 0.0;
    double signed_value = 0.0;  // alpha_pos if alpha_pos >= alpha_neg, else -alpha_neg
    std::uint64_t n_windows = 0;
    bool degenerate = false;
};

OpdReport opd(std::span<const double> x, std::span<const double> y, const ExtractionConfig& cfg);

}  // namespace ordpat
