#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "inversions.hpp"

namespace ordpat {

namespace {

void check_config(const ExtractionConfig& cfg) {
    if (cfg.d < 2) {
        raise(errc::length, "pattern length d must be at least 2, got " + std::to_string(cfg.d));
    }
    if (cfg.lag < 1) {
        raise(errc::range, "lag must be at least 1, got " + std::to_string(cfg.lag));
    }
    if (cfg.ties.kind == TieStrategy::Kind::generalized) {
        if (cfg.d > max_generalized_d) {
            raise(errc::length, "generalized codes are available for d <= " +
                                    std::to_string(max_generalized_d) + ", got " +
                                    std::to_string(cfg.d));
        }
    } else {
        factorial(cfg.d);  // errc::overflow beyond the 64-bit cap
    }
}

std::vector<std::uint64_t> scheme_weights(int d, Scheme scheme) {
    std::vector<std::uint64_t> weights(static_cast<std::size_t>(d));
    for (int j = 1; j <= d; ++j) {
        weights[static_cast<std::size_t>(j - 1)] =
            scheme == Scheme::kse ? factorial(d) / factorial(d - j + 1) : factorial(d - j);
    }
    return weights;
}

}  // namespace

std::uint64_t window_count(std::uint64_t n, const ExtractionConfig& cfg) {
    check_config(cfg);
    const std::uint64_t span =
        1 + static_cast<std::uint64_t>(cfg.d - 1) * static_cast<std::uint64_t>(cfg.lag);
    if (n < span) {
        raise(errc::length, "series of length " + std::to_string(n) + " is shorter than one window (" +
                                std::to_string(span) + " samples)");
    }
    return n - span + 1;
}

ExtractionResult extract_range(std::span<const double> series, const ExtractionConfig& cfg,
                               std::uint64_t first_window, std::uint64_t count) {
    const std::uint64_t total = window_count(series.size(), cfg);
    if (first_window > total || count > total - first_window) {
        raise(errc::range, "window range [" + std::to_string(first_window) + ", " +
                               std::to_string(first_window + count) + ") exceeds the " +
                               std::to_string(total) + " available windows");
    }

    const auto d = static_cast<std::size_t>(cfg.d);
    const auto lag = static_cast<std::size_t>(cfg.lag);
    const std::size_t last_touched =
        count == 0 ? first_window : first_window + count - 1 + (d - 1) * lag;
    for (std::size_t i = first_window; i <= last_touched && i < series.size(); ++i) {
        if (!std::isfinite(series[i])) {
            raise(errc::input, "series contains a NaN or infinite value at row " +
                                   std::to_string(i + 1));
        }
    }

    ExtractionResult result;
    result.config = cfg;
    result.codes.reserve(count);

    const bool generalized = cfg.ties.kind == TieStrategy::Kind::generalized;
    std::vector<std::uint64_t> weights;
    if (!generalized) weights = scheme_weights(cfg.d, cfg.scheme);

    std::vector<int> counts(d);
    std::vector<double> buffer(d);
    std::vector<double> distinct(d);
    GeneralizedRankPattern gpattern;
    gpattern.psi.resize(d);
    const std::uint64_t seed_base = detail::mix64(cfg.ties.seed);

    for (std::uint64_t t = first_window; t < first_window + count; ++t) {
        const double* window = series.data() + t;

        if (generalized) {
            distinct.clear();
            for (std::size_t j = 0; j < d; ++j) distinct.push_back(window[j * lag]);
            std::sort(distinct.begin(), distinct.end(), [&](double a, double b) {
                ++result.comparisons;
                return a < b;
            });
            distinct.erase(std::unique(distinct.begin(), distinct.end(),
                                       [&](double a, double b) {
                                           ++result.comparisons;
                                           return a == b;
                                       }),
                           distinct.end());
            for (std::size_t j = 0; j < d; ++j) {
                const auto it = std::lower_bound(distinct.begin(), distinct.end(),
                                                 window[j * lag], [&](double a, double b) {
                                                     ++result.comparisons;
                                                     return a < b;
                                                 });
                gpattern.psi[j] = static_cast<int>(it - distinct.begin()) + 1;
            }
            gpattern.m = static_cast<int>(distinct.size());
            result.codes.emplace_back(generalized_code(gpattern));
            continue;
        }

        // Inversion-based path: one three-way comparison per value pair,
        // (d^2-d)/2 in total. Counts against strict order are exactly the
        // stable-order inversion counts, so no rank pass is needed.
        std::fill(counts.begin(), counts.end(), 0);
        bool tied = false;
        for (std::size_t j = 0; j + 1 < d; ++j) {
            const double xj = window[j * lag];
            for (std::size_t k = j + 1; k < d; ++k) {
                const double xk = window[k * lag];
                ++result.comparisons;
                if (xj > xk) {
                    ++counts[j];
                } else if (xj == xk) {
                    tied = true;
                }
            }
        }

        if (tied) {
            if (cfg.ties.kind == TieStrategy::Kind::skip) {
                result.codes.emplace_back(std::nullopt);
                continue;
            }
            if (cfg.ties.kind == TieStrategy::Kind::perturb) {
                for (std::size_t j = 0; j < d; ++j) buffer[j] = window[j * lag];
                const std::vector<double> resolved = perturb_resolve(buffer, seed_base + t);
                std::fill(counts.begin(), counts.end(), 0);
                for (std::size_t j = 0; j + 1 < d; ++j) {
                    for (std::size_t k = j + 1; k < d; ++k) {
                        ++result.comparisons;
                        if (resolved[j] > resolved[k]) ++counts[j];
                    }
                }
            }
            // stable: strict-order counts already are the stable pattern's.
        }

        std::uint64_t code = 0;
        for (std::size_t j = 0; j < d; ++j) {
            code += static_cast<std::uint64_t>(counts[j]) * weights[j];
        }
        result.codes.emplace_back(code);
    }
    return result;
}

ExtractionResult extract(std::span<const double> series, const ExtractionConfig& cfg) {
    return extract_range(series, cfg, 0, window_count(series.size(), cfg));
}

std::vector<std::optional<std::uint64_t>> pattern_sequence(std::span<const double> series,
                                                           const ExtractionConfig& cfg) {
    return extract(series, cfg).codes;
}

std::uint64_t PatternDistribution::code_space() const {
    return config.ties.kind == TieStrategy::Kind::generalized ? fubini(config.d)
                                                              : factorial(config.d);
}

double PatternDistribution::frequency(std::uint64_t code) const {
    if (total == 0) return 0.0;
    const auto it = counts.find(code);
    return it == counts.end() ? 0.0
                              : static_cast<double>(it->second) / static_cast<double>(total);
}

PatternDistribution pattern_distribution(std::span<const std::optional<std::uint64_t>> codes,
                                         const ExtractionConfig& cfg) {
    check_config(cfg);
    PatternDistribution dist;
    dist.config = cfg;
    const std::uint64_t space = dist.code_space();

    // Dense accumulation for small code spaces, sparse otherwise.
    if (space <= 65536) {
        std::vector<std::uint64_t> dense(static_cast<std::size_t>(space), 0);
        for (const auto& code : codes) {
            if (!code) {
                ++dist.skipped;
                continue;
            }
            if (*code >= space) {
                raise(errc::range, "code " + std::to_string(*code) +
                                       " is outside the code space of size " +
                                       std::to_string(space));
            }
            ++dense[static_cast<std::size_t>(*code)];
            ++dist.total;
        }
        for (std::uint64_t c = 0; c < space; ++c) {
            if (dense[static_cast<std::size_t>(c)] > 0) {
                dist.counts.emplace(c, dense[static_cast<std::size_t>(c)]);
            }
        }
    } else {
        for (const auto& code : codes) {
            if (!code) {
                ++dist.skipped;
                continue;
            }
            if (*code >= space) {
                raise(errc::range, "code " + std::to_string(*code) +
                                       " is outside the code space of size " +
                                       std::to_string(space));
            }
            ++dist.counts[*code];
            ++dist.total;
        }
    }
    return dist;
}

PatternDistribution pattern_distribution(const ExtractionResult& extraction) {
    return pattern_distribution(extraction.codes, extraction.config);
}

double pattern_entropy(const PatternDistribution& dist) {
    if (dist.total == 0) {
        raise(errc::empty, "entropy of an empty distribution is undefined");
    }
    double entropy = 0.0;
    for (const auto& [code, count] : dist.counts) {
        const double p = static_cast<double>(count) / static_cast<double>(dist.total);
        entropy -= p * std::log(p);
    }
    return entropy;
}

namespace {

std::uint64_t reflected_code(std::uint64_t code, const ExtractionConfig& cfg) {
    if (cfg.ties.kind == TieStrategy::Kind::generalized) {
        return generalized_code(invert_space(generalized_pattern(code, cfg.d)));
    }
    return reflect_code(PatternCode{cfg.d, cfg.scheme, code}).value;
}

}  // namespace

OpdReport opd(std::span<const double> x, std::span<const double> y,
              const ExtractionConfig& cfg) {
    if (x.size() != y.size()) {
        raise(errc::length_mismatch, "series lengths differ: " + std::to_string(x.size()) +
                                         " vs " + std::to_string(y.size()));
    }
    const ExtractionResult ex = extract(x, cfg);
    const ExtractionResult ey = extract(y, cfg);

    std::uint64_t n = 0;
    std::uint64_t same_pos = 0;
    std::uint64_t same_neg = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> mx;
    std::unordered_map<std::uint64_t, std::uint64_t> my;
    std::unordered_map<std::uint64_t, std::uint64_t> reflected;

    for (std::size_t t = 0; t < ex.codes.size(); ++t) {
        if (!ex.codes[t] || !ey.codes[t]) continue;
        const std::uint64_t cx = *ex.codes[t];
        const std::uint64_t cy = *ey.codes[t];
        ++n;
        ++mx[cx];
        ++my[cy];
        auto it = reflected.find(cy);
        if (it == reflected.end()) {
            it = reflected.emplace(cy, reflected_code(cy, cfg)).first;
        }
        same_pos += cx == cy;
        same_neg += cx == it->second;
    }

    OpdReport report;
    report.d = cfg.d;
    report.n_windows = n;
    if (n == 0) {
        report.degenerate = true;
        return report;
    }

    // Expected coincidence counts under independence, as exact integers
    // scaled by n^2: sum_c #x(c) * #y(c), once against y and once against
    // the reflected y codes.
    std::uint64_t q_pos_num = 0;
    std::uint64_t q_neg_num = 0;
    for (const auto& [code, count] : mx) {
        const auto ity = my.find(code);
        if (ity != my.end()) q_pos_num += count * ity->second;
    }
    std::unordered_map<std::uint64_t, std::uint64_t> my_reflected;
    for (const auto& [code, count] : my) my_reflected[reflected.at(code)] += count;
    for (const auto& [code, count] : mx) {
        const auto ity = my_reflected.find(code);
        if (ity != my_reflected.end()) q_neg_num += count * ity->second;
    }

    const double nn = static_cast<double>(n);
    const auto alpha = [&](std::uint64_t same, std::uint64_t q_num, bool& degenerate) {
        if (q_num == n * n) {
            degenerate = true;
            return 0.0;
        }
        const double p_same = static_cast<double>(same) / nn;
        const double q = static_cast<double>(q_num) / (nn * nn);
        return (p_same - q) / (1.0 - q);
    };
    report.alpha_pos = alpha(same_pos, q_pos_num, report.degenerate);
    report.alpha_neg = alpha(same_neg, q_neg_num, report.degenerate);
    report.signed_value =
        report.alpha_pos >= report.alpha_neg ? report.alpha_pos : -report.alpha_neg;
    return report;
}

}  // namespace ordpat
