#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "levrecon/error.hpp"
#include "levrecon/words.hpp"

using namespace levrecon;

namespace {
Word w2(const char* s) { return Word::parse(s, Alphabet(2)); }
}  // namespace

TEST_CASE("alphabet bounds") {
    CHECK_THROWS_AS(Alphabet(1), DomainError);
    CHECK(Alphabet(2).contains(1));
    CHECK_FALSE(Alphabet(2).contains(2));
    CHECK_FALSE(Alphabet(4).contains(-1));
}

TEST_CASE("word parse and print") {
    CHECK(w2("11101").to_string() == "11101");
    CHECK(Word::parse("", Alphabet(3)).empty());
    CHECK_THROWS_AS(Word::parse("102", Alphabet(2)), ParseError);
    CHECK_THROWS_AS(Word::parse("1a", Alphabet(4)), ParseError);

    const Word big = Word::parse("1,12,0", Alphabet(13));
    CHECK(big.size() == 3);
    CHECK(big[1] == 12);
    CHECK(big.to_string() == "1,12,0");
    CHECK_THROWS_AS(Word::parse("1,13", Alphabet(13)), ParseError);
    CHECK_THROWS_AS(Word::parse("1,,2", Alphabet(13)), ParseError);
    CHECK_THROWS_AS(Word({0, 2}, Alphabet(2)), DomainError);
}

TEST_CASE("support, weight, distance") {
    CHECK(support(w2("0010")) == std::vector<std::size_t>{3});
    CHECK(support(w2("0000")).empty());
    CHECK(support(w2("111100")) == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(weight(w2("111100")) == 4);
    CHECK(hamming_distance(w2("11101"), w2("11101")) == 0);
    CHECK(hamming_distance(w2("11101"), w2("11011")) == 2);
    CHECK_THROWS_AS(hamming_distance(w2("111"), w2("11")), DomainError);
    CHECK_THROWS_AS(hamming_distance(w2("11"), Word::parse("11", Alphabet(3))), DomainError);
}

TEST_CASE("distance is a metric on random triples") {
    std::mt19937 gen(7);
    for (int rep = 0; rep < 500; ++rep) {
        const int q = 2 + static_cast<int>(gen() % 5);
        const std::size_t n = 1 + gen() % 12;
        auto rand_word = [&] {
            std::vector<Symbol> s(n);
            for (auto& c : s) c = static_cast<Symbol>(gen() % static_cast<unsigned>(q));
            return Word(s, Alphabet(q));
        };
        const Word a = rand_word(), b = rand_word(), c = rand_word();
        CHECK(hamming_distance(a, b) == hamming_distance(b, a));
        CHECK(hamming_distance(a, c) <= hamming_distance(a, b) + hamming_distance(b, c));
        std::size_t diff = 0;
        for (std::size_t i = 0; i < n; ++i) diff += a[i] != b[i];
        CHECK(hamming_distance(a, b) == diff);
    }
}

TEST_CASE("hamming ball volume") {
    CHECK(hamming_ball_volume(2, 6, 1) == 7);
    CHECK(hamming_ball_volume(5, 9, 0) == 1);
    CHECK(hamming_ball_volume(4, 3, 1) == 10);
    for (int n = 0; n <= 30; ++n) CHECK(hamming_ball_volume(2, n, n) == ipow(2, n));
    CHECK_THROWS_AS(hamming_ball_volume(2, 3, 4), DomainError);
    CHECK_THROWS_AS(hamming_ball_volume(2, 3, -1), DomainError);
}

TEST_CASE("insertion ball volume") {
    CHECK(insertion_ball_volume(2, 3, 1) == 9);
    CHECK(insertion_ball_volume(7, 5, 0) == 1);
    CHECK(insertion_ball_volume(4, 10, 2) == 1101);
    for (int q = 2; q <= 4; ++q)
        for (int n = 0; n <= 6; ++n)
            for (int t = 0; t <= 2; ++t) {
                std::uint64_t total = 0;
                for (int k = 0; k <= t; ++k) total += brute::count_insertion_vectors(n, q, k);
                CHECK(insertion_ball_volume(q, n, t) == total);
            }
}

TEST_CASE("binomials stay exact at large n") {
    // Pascal's rule against the multiplicative evaluation.
    for (std::int64_t n = 1; n <= 200; n += 13)
        for (std::int64_t k = 1; k < n; k += 7) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(to_string(binomial(200, 100)) == "90548514656103281165404177077484163874504589675413336841320");
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(to_u64(binomial(70, 35)) == std::nullopt);
    CHECK(to_u64(binomial(60, 30)) == std::optional<std::uint64_t>(118264581564861424ULL));
}

TEST_CASE("word ordering") {
    CHECK(w2("0") < w2("1"));
    CHECK(w2("01") < w2("1"));
    CHECK(w2("") < w2("0"));
    CHECK(Word::parse("1", Alphabet(2)) != Word::parse("1", Alphabet(3)));
}
