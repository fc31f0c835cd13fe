#include "levrecon/codebook.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include "levrecon/error.hpp"

namespace levrecon {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

std::int64_t ceil_to_int(const Decimal& v) {
    return static_cast<std::int64_t>(boost::multiprecision::ceil(v));
}

}  // namespace

CodeParams::CodeParams(int q, std::int64_t n) : CodeParams(q, n, std::string()) {}

CodeParams::CodeParams(int q, std::int64_t n, const std::string& p) : q_(q), n_(n) {
    if (q < 4) throw DomainError("code C requires q >= 4");
    if (n < 1) throw DomainError("code C requires n >= 1");
    Decimal pv;
    if (p.empty()) {
        pv = Decimal(16) / boost::multiprecision::exp(Decimal(1));
    } else {
        try {
            pv = Decimal(p);
        } catch (const std::exception&) {
            throw ParseError("invalid value for p: " + p);
        }
        if (pv <= 1) throw DomainError("p must exceed 1");
    }
    p_approx_ = pv.convert_to<double>();
    tau_ = ceil_to_int((pv - 1) * Decimal(n) / pv);
    third_floor_ = ceil_to_int(Decimal(n) / (Decimal(q - 2) * pv));
}

bool is_codeword(const Word& w, const CodeParams& params) {
    if (w.q() != params.q()) throw DomainError("is_codeword: alphabet mismatch");
    if (static_cast<std::int64_t>(w.size()) != params.n()) throw DomainError("is_codeword: length mismatch");
    std::vector<std::int64_t> counts(static_cast<std::size_t>(params.q()), 0);
    for (Symbol s : w.symbols()) ++counts[s];
    std::partial_sort(counts.begin(), counts.begin() + 2, counts.end(), std::greater<>());
    return counts[0] + counts[1] < params.threshold();
}

BigInt excluded_count(const CodeParams& params) {
    const std::int64_t n = params.n();
    const std::int64_t q = params.q();
    BigInt sum = 0;
    for (std::int64_t i = std::max<std::int64_t>(params.threshold(), 0); i <= n; ++i)
        sum += binomial(n, i) * ipow(2, i) * ipow(q - 2, n - i);
    return binomial(q, 2) * sum;
}

BigInt code_size_lower_bound(const CodeParams& params) {
    return ipow(params.q(), params.n()) - excluded_count(params);
}

Word sample_codeword(const CodeParams& params, Rng& rng, std::uint64_t max_attempts) {
    const Alphabet alphabet(params.q());
    std::vector<Symbol> s(static_cast<std::size_t>(params.n()));
    for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (auto& c : s) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(params.q())));
        Word w(s, alphabet);
        if (is_codeword(w, params)) return w;
    }
    throw BudgetExceeded("sample_codeword: no codeword found within attempt budget");
}

}  // namespace levrecon
