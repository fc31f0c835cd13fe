#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "levrecon/codebook.hpp"
#include "levrecon/error.hpp"

using namespace levrecon;

namespace {

std::vector<int> sorted_counts(const Word& w) {
    std::vector<int> c(static_cast<std::size_t>(w.q()), 0);
    for (Symbol s : w.symbols()) ++c[s];
    std::sort(c.rbegin(), c.rend());
    return c;
}

Word nth_word(std::uint64_t v, int q, std::size_t n) {
    std::vector<Symbol> s(n);
    for (std::size_t i = n; i-- > 0; v /= static_cast<std::uint64_t>(q)) s[i] = static_cast<Symbol>(v % static_cast<std::uint64_t>(q));
    return Word(s, Alphabet(q));
}

}  // namespace

TEST_CASE("threshold and third-symbol floor") {
    const CodeParams p(4, 10);
    CHECK(p.threshold() == 9);
    CHECK(p.third_symbol_floor() == 1);
    CHECK(p.p() == doctest::Approx(16.0 / std::exp(1.0)));
    CHECK(CodeParams(4, 100).third_symbol_floor() == 9);
    // ceil((p-1) n / p) by floating point agrees away from integer boundaries
    for (std::int64_t n = 1; n <= 500; ++n) {
        const double pd = 16.0 / std::exp(1.0);
        CHECK(CodeParams(4, n).threshold() == static_cast<std::int64_t>(std::ceil((pd - 1) * n / pd)));
    }
    CHECK_THROWS_AS(CodeParams(3, 10), DomainError);
    CHECK_THROWS_AS(CodeParams(4, 10, "abc"), ParseError);
    CHECK_THROWS_AS(CodeParams(4, 10, "0.5"), DomainError);
    CHECK(CodeParams(4, 10, "2").threshold() == 5);
}

TEST_CASE("membership") {
    const CodeParams p(4, 10);
    CHECK_FALSE(is_codeword(Word::parse("0000011112", Alphabet(4)), p));
    CHECK(is_codeword(Word::parse("0001112223", Alphabet(4)), p));
    CHECK(is_codeword(Word::parse("1200321021", Alphabet(6)), CodeParams(6, 10)));
    CHECK_THROWS_AS(is_codeword(Word::parse("000", Alphabet(4)), p), DomainError);
    CHECK_THROWS_AS(is_codeword(Word::parse("0001112223", Alphabet(5)), p), DomainError);
}

TEST_CASE("membership is invariant under symbol permutation") {
    const CodeParams p(5, 9);
    Rng rng(4);
    std::vector<Symbol> perm{0, 1, 2, 3, 4};
    for (int rep = 0; rep < 500; ++rep) {
        std::vector<Symbol> s(9);
        for (auto& c : s) c = static_cast<Symbol>(rng.below(5));
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Symbol> t(9);
        for (std::size_t i = 0; i < 9; ++i) t[i] = perm[s[i]];
        CHECK(is_codeword(Word(s, Alphabet(5)), p) == is_codeword(Word(t, Alphabet(5)), p));
    }
}

TEST_CASE("exhaustive code sizes for short lengths") {
    for (int q : {4, 5})
        for (std::size_t n = 1; n <= (q == 4 ? 8u : 6u); ++n) {
            const CodeParams p(q, static_cast<std::int64_t>(n));
            std::uint64_t total = 1;
            for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(q);
            std::uint64_t members = 0;
            for (std::uint64_t v = 0; v < total; ++v) {
                const Word w = nth_word(v, q, n);
                if (!is_codeword(w, p)) continue;
                ++members;
                CHECK(sorted_counts(w)[2] >= p.third_symbol_floor());
            }
            const BigInt excluded_exact = BigInt(total - members);
            CHECK(excluded_count(p) >= excluded_exact);
            CHECK(code_size_lower_bound(p) <= BigInt(members));
            CHECK(BigInt(members) <= ipow(q, static_cast<std::int64_t>(n)));
        }
}

TEST_CASE("excluded count formula") {
    const CodeParams p(4, 10);
    BigInt sum = 0;
    for (std::int64_t i = 9; i <= 10; ++i) sum += binomial(10, i) * ipow(2, i) * ipow(2, 10 - i);
    CHECK(excluded_count(p) == 6 * sum);
    CHECK(excluded_count(p) == 6 * (10 * 1024 + 1024));
    // one symbol: every word is excluded and the bound goes negative
    CHECK(code_size_lower_bound(CodeParams(4, 1)) == 4 - 12);
    for (std::int64_t n = 16; n <= 64; ++n) CHECK(code_size_lower_bound(CodeParams(4, n)) > 0);
}

TEST_CASE("codeword sampling") {
    const CodeParams p(4, 30);
    Rng a(10), b(10);
    for (int i = 0; i < 50; ++i) {
        const Word w = sample_codeword(p, a);
        CHECK(is_codeword(w, p));
        CHECK(w == sample_codeword(p, b));
    }
    Rng c(1);
    CHECK_THROWS_AS(sample_codeword(CodeParams(4, 1), c, 100), BudgetExceeded);
}
