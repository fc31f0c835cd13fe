#include "levrecon/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "levrecon/error.hpp"
#include "levrecon/words.hpp"

namespace levrecon::bounds {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DomainError(what);
}

std::int64_t ceil_half(std::int64_t n) { return (n + 1) / 2; }

BigInt v2(std::int64_t n, std::int64_t t) { return hamming_ball_volume(2, n, std::min(t, n)); }

}  // namespace

BigInt levenshtein_deletion_bound(std::int64_t n, std::int64_t t) {
    require(t >= 1 && t <= n - 2, "levenshtein_deletion_bound: need 1 <= t <= n-2");
    BigInt sum = 0;
    for (std::int64_t i = 0; i < t; ++i) sum += binomial(n - t - 1, i);
    return 2 * sum + 1;
}

BigInt levenshtein_insertion_bound(std::int64_t n, int q, std::int64_t t) {
    require(t >= 1, "levenshtein_insertion_bound: need t >= 1");
    require(n >= 0 && q >= 2, "levenshtein_insertion_bound: need n >= 0, q >= 2");
    BigInt sum = 0;
    // 1 - (-1)^{t-i} is 2 for odd t-i and 0 otherwise.
    for (std::int64_t i = 0; i < t; ++i)
        if ((t - i) % 2 == 1) sum += 2 * binomial(n + t, i) * ipow(q - 1, i);
    return sum + 1;
}

BigInt pattern_bound(std::int64_t n, std::int64_t t, CountMode mode) {
    require(t >= 1 && n >= 2 * t + 2, "pattern_bound: need t >= 1 and n >= 2t+2");
    const std::int64_t m = ceil_half(n) - 1;
    if (mode == CountMode::AtMost) return v2(n, t) - v2(m, t) + 1;
    return binomial(n, t) - binomial(m, t) + 1;
}

BigInt multiset_t1_threshold(std::int64_t n) {
    require(n >= 2, "multiset_t1_threshold: need n >= 2");
    return v2(n, 1) - v2(ceil_half(n) - 1, 1);
}

BigInt adjacent_singleton_channels(std::int64_t n, std::int64_t t, std::int64_t a) {
    require(t >= 1 && n >= t + 1, "adjacent_singleton_channels: need t >= 1 and n >= t+1");
    require(a >= 1 && a <= n - 1, "adjacent_singleton_channels: need 1 <= a <= n-1");
    const std::int64_t k = (a * t + a) / n;
    return binomial(n, t) - binomial(a - 1, k) * binomial(n - a - 1, t - k) + 1;
}

BigInt adjacent_singleton_channels_at_most(std::int64_t n, std::int64_t t, std::int64_t a) {
    require(t >= 1 && n >= t + 1, "adjacent_singleton_channels_at_most: need t >= 1 and n >= t+1");
    BigInt sum = 0;
    for (std::int64_t i = 1; i <= t; ++i) sum += adjacent_singleton_channels(n, i, a) - 1;
    return sum + 1;
}

BigInt spread_pair_channels(std::int64_t n, std::int64_t t) {
    require(t >= 2, "spread_pair_channels: need t >= 2");
    require(n > 0 && n % (2 * t + 2) == 0, "spread_pair_channels: need n = h(2t+2)");
    const std::int64_t h = n / (2 * t + 2);
    return binomial(n, t) - binomial(h * t - 1, t / 2) * binomial(h * (t + 2) - 1, (t + 1) / 2) + 1;
}

BigInt half_pair_channels(std::int64_t n, std::int64_t t) {
    require(t >= 1 && n >= 2 * t + 2 && n % 2 == 0, "half_pair_channels: need even n >= 2t+2, t >= 1");
    const std::int64_t m = n / 2 - 1;
    return binomial(n, t) - binomial(m, t / 2) * binomial(m, (t + 1) / 2) + 1;
}

BigInt cumulative_half_bound(std::int64_t n, std::int64_t t) {
    require(n % 2 == 0, "cumulative_half_bound: n must be even");
    require(t >= 2 && n >= 2 * t + 2, "cumulative_half_bound: need t >= 2 and n >= 2t+2");
    const std::int64_t m = n / 2 - 1;
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= t; ++i) sum += binomial(m, i / 2) * binomial(m, (i + 1) / 2);
    return v2(n, t) - sum + 1;
}

BigInt weight_gap_confusable(std::int64_t n, std::int64_t w1, std::int64_t b, std::int64_t t) {
    require(b >= 1, "weight_gap_confusable: need b >= 1");
    require(b <= t, "weight_gap_confusable: a weight gap of b needs at least b deletions (b <= t)");
    require(t <= n && w1 >= b && w1 <= n, "weight_gap_confusable: need b <= w1 <= n and t <= n");
    BigInt sum = 0;
    for (std::int64_t i = b; i <= t; ++i) {
        BigInt from_heavy = binomial(w1, i) * binomial(n - w1, t - i);
        BigInt from_light = binomial(w1 - b, i - b) * binomial(n - w1 + b, t + b - i);
        sum += std::min(from_heavy, from_light);
    }
    return sum;
}

Rational binom_ratio(std::int64_t n, std::int64_t t) {
    require(n % 2 == 0 && t % 2 == 0, "binom_ratio: n and t must be even");
    require(t >= 2 && n >= 2 * t + 2, "binom_ratio: need t >= 2 and n >= 2t+2");
    const std::int64_t m = n / 2 - 1;
    BigInt half = binomial(m, t / 2);
    return Rational(half * half, binomial(m, t));
}

BigInt binom_ratio_limit(std::int64_t t) {
    require(t >= 0 && t % 2 == 0, "binom_ratio_limit: t must be even and non-negative");
    return binomial(t, t / 2);
}

namespace {

constexpr std::uint64_t kDirectHarmonicLimit = 1'000'000;
constexpr double kEulerGamma = 0.57721566490153286060651209;

}  // namespace

double harmonic(std::uint64_t m) {
    if (m <= kDirectHarmonicLimit) {
        double s = 0.0;
        for (std::uint64_t i = m; i >= 1; --i) s += 1.0 / static_cast<double>(i);
        return s;
    }
    const double x = static_cast<double>(m);
    return std::log(x) + kEulerGamma + 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x);
}

double pccp_expectation(std::uint64_t j, std::uint64_t m) {
    require(j >= 1 && j <= m, "pccp_expectation: need 1 <= j <= m");
    double diff;
    if (j <= kDirectHarmonicLimit) {
        // H_m - H_{m-j} as the tail sum; avoids cancellation for large m.
        diff = 0.0;
        for (std::uint64_t i = m; i > m - j; --i) diff += 1.0 / static_cast<double>(i);
    } else {
        diff = harmonic(m) - harmonic(m - j);
    }
    return static_cast<double>(m) * diff;
}

double expected_unique_patterns(double m, std::uint64_t draws) {
    require(m >= 1.0, "expected_unique_patterns: need m >= 1");
    if (draws == 0) return 0.0;
    if (m == 1.0) return 1.0;
    // m (1 - (1 - 1/m)^N) without cancellation.
    return -m * std::expm1(static_cast<double>(draws) * std::log1p(-1.0 / m));
}

}  // namespace levrecon::bounds
