#pragma once

#include <cstdint>

#include "levrecon/bigint.hpp"
#include "levrecon/error_patterns.hpp"

namespace levrecon::bounds {

// Every function checks the hypothesis its formula is stated under and throws
// DomainError otherwise.  Channel counts are exact.

/// Traditional model, q = 2, exactly t deletions, 1 <= t <= n-2:
/// 2 * sum_{i<t} C(n-t-1, i) + 1.
BigInt levenshtein_deletion_bound(std::int64_t n, std::int64_t t);

/// Traditional model, exactly t >= 1 insertions over Z_q^n:
/// sum_{i<t} C(n+t, i) (q-1)^i (1 - (-1)^{t-i}) + 1.
BigInt levenshtein_insertion_bound(std::int64_t n, int q, std::int64_t t);

/// Channels sufficient for a unique output (multi)set in both pattern models,
/// tight for the non-multiset model.  Requires t >= 1, n >= 2t + 2.
BigInt pattern_bound(std::int64_t n, std::int64_t t, CountMode mode);

/// Largest still-ambiguous multiset channel count for at most one deletion:
/// V_2(n,1) - V_2(ceil(n/2)-1, 1) = floor(n/2) + 1.
BigInt multiset_t1_threshold(std::int64_t n);

/// Exact multiset channel count separating 0^{a-1}10^{n-a} from
/// 0^a10^{n-a-1} under exactly t deletions.
BigInt adjacent_singleton_channels(std::int64_t n, std::int64_t t, std::int64_t a);

/// Same pair under at most t deletions: sum_{i=1}^{t} (N_i - 1) + 1.
BigInt adjacent_singleton_channels_at_most(std::int64_t n, std::int64_t t, std::int64_t a);

/// n = h(2t+2): pair 0^{ht-1}10^{h(t+2)} / 0^{ht}10^{h(t+2)-1}, exactly t.
BigInt spread_pair_channels(std::int64_t n, std::int64_t t);

/// Even n >= 2t+2: half-position pair 0^{n/2-1}10^{n/2} / 0^{n/2}10^{n/2-1}, exactly t.
BigInt half_pair_channels(std::int64_t n, std::int64_t t);

/// Half-position pair under at most t deletions (n even, n >= 2t+2, t >= 2).
BigInt cumulative_half_bound(std::int64_t n, std::int64_t t);

/// Maximum number of channels yielding identical output multisets from two
/// binary words whose weights differ by b (heavier word has weight w1).
BigInt weight_gap_confusable(std::int64_t n, std::int64_t w1, std::int64_t b, std::int64_t t);

/// C(n/2-1, t/2)^2 / C(n/2-1, t) for even n, t with n >= 2t+2.
Rational binom_ratio(std::int64_t n, std::int64_t t);
/// Limit of binom_ratio as n grows: C(t, t/2).
BigInt binom_ratio_limit(std::int64_t t);

/// H_m, exact summation up to 10^6 and asymptotic expansion above.
double harmonic(std::uint64_t m);

/// Expected draws to see j distinct coupons out of m: m (H_m - H_{m-j}).
double pccp_expectation(std::uint64_t j, std::uint64_t m);

/// Expected number of distinct patterns among N uniform draws from m:
/// m (1 - ((m-1)/m)^N).
double expected_unique_patterns(double m, std::uint64_t draws);

}  // namespace levrecon::bounds
