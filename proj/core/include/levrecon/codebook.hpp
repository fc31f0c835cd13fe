#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "levrecon/bigint.hpp"
#include "levrecon/rng.hpp"
#include "levrecon/words.hpp"

namespace levrecon {

/// Parameters of the restricted code C in Z_q^n: words whose two most common
/// symbols together fill fewer than tau = ceil((p-1) n / p) positions,
/// with p = 16/e by default.
class CodeParams {
public:
    CodeParams(int q, std::int64_t n);
    /// p given as a decimal string, evaluated at 50 significant digits.
    CodeParams(int q, std::int64_t n, const std::string& p);

    int q() const noexcept { return q_; }
    std::int64_t n() const noexcept { return n_; }
    double p() const noexcept { return p_approx_; }
    /// ceil((p-1) n / p).
    std::int64_t threshold() const noexcept { return tau_; }
    /// ceil(n / ((q-2) p)).
    std::int64_t third_symbol_floor() const noexcept { return third_floor_; }

private:
    int q_;
    std::int64_t n_;
    double p_approx_;
    std::int64_t tau_;
    std::int64_t third_floor_;
};

bool is_codeword(const Word& w, const CodeParams& params);

/// C(q,2) * sum_{i=tau}^{n} C(n,i) 2^i (q-2)^{n-i}.
BigInt excluded_count(const CodeParams& params);
/// q^n - excluded_count; may be negative for short lengths.
BigInt code_size_lower_bound(const CodeParams& params);

/// Uniform codeword by rejection; throws BudgetExceeded after max_attempts.
Word sample_codeword(const CodeParams& params, Rng& rng, std::uint64_t max_attempts = 1'000'000);

}  // namespace levrecon
