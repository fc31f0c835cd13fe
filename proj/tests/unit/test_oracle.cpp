#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "levrecon/bounds.hpp"
#include "levrecon/error.hpp"
#include "levrecon/oracle.hpp"

using namespace levrecon;
using namespace levrecon::oracle;

namespace {

const Alphabet kBin(2);
Word w2(const std::string& s) { return Word::parse(s, kBin); }

bool contains_pair(const ExtremalResult& r, const std::string& a, const std::string& b) {
    return std::any_of(r.pairs.begin(), r.pairs.end(), [&](const ExtremalPair& p) {
        return (p.x == w2(a) && p.xp == w2(b)) || (p.x == w2(b) && p.xp == w2(a));
    });
}

}  // namespace

TEST_CASE("two deletions on 11101 and 11011") {
    const auto multi = confusable_max(w2("11101"), w2("11011"), 2, CountMode::Exactly, ChannelModel::MultisetPattern);
    CHECK(multi.n_max_confusable == 8);
    const auto non = confusable_max(w2("11101"), w2("11011"), 2, CountMode::Exactly, ChannelModel::NonMultisetPattern);
    CHECK(non.n_max_confusable == 9);
    const auto trad = confusable_max(w2("11101"), w2("11011"), 2, CountMode::Exactly, ChannelModel::Traditional);
    CHECK(trad.n_max_confusable == 3);
}

TEST_CASE("a word is never distinguishable from itself") {
    const Word x = w2("110100");
    for (auto mode : {CountMode::Exactly, CountMode::AtMost}) {
        const auto m = confusable_max(x, x, 2, mode, ChannelModel::MultisetPattern);
        const auto n = confusable_max(x, x, 2, mode, ChannelModel::NonMultisetPattern);
        const BigInt total = mode == CountMode::Exactly ? binomial(6, 2) : hamming_ball_volume(2, 6, 2);
        CHECK(BigInt(m.n_max_confusable) == total);
        CHECK(BigInt(n.n_max_confusable) == total);
        const auto t = confusable_max(x, x, 2, mode, ChannelModel::Traditional);
        const auto outs = transmit_all(x, 2, mode, ChannelModel::Traditional, ErrorType::Deletion);
        CHECK(t.n_max_confusable == outs.distinct());
    }
}

TEST_CASE("oracle agrees with the string reference on random pairs") {
    Rng rng(99);
    for (int rep = 0; rep < 300; ++rep) {
        const int n = 3 + static_cast<int>(rng.below(6));
        const int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(n, 3))));
        const bool at_most = rng.below(2) == 1;
        const std::string a = brute::binary(static_cast<std::uint32_t>(rng.below(1u << n)), n);
        const std::string b = brute::binary(static_cast<std::uint32_t>(rng.below(1u << n)), n);
        const CountMode mode = at_most ? CountMode::AtMost : CountMode::Exactly;
        const auto trad = confusable_max(w2(a), w2(b), static_cast<std::size_t>(t), mode, ChannelModel::Traditional);
        const auto multi = confusable_max(w2(a), w2(b), static_cast<std::size_t>(t), mode, ChannelModel::MultisetPattern, ErrorType::Deletion, true);
        const auto non = confusable_max(w2(a), w2(b), static_cast<std::size_t>(t), mode, ChannelModel::NonMultisetPattern, ErrorType::Deletion, true);
        CHECK(trad.n_max_confusable == brute::confusable(a, b, t, at_most, brute::Model::Traditional));
        CHECK(multi.n_max_confusable == brute::confusable(a, b, t, at_most, brute::Model::Multiset));
        CHECK(non.n_max_confusable == brute::confusable(a, b, t, at_most, brute::Model::NonMultiset));
        CHECK(trad.n_max_confusable <= non.n_max_confusable);
        CHECK(multi.n_max_confusable <= non.n_max_confusable);
        CHECK(replay_witness(multi));
        CHECK(replay_witness(non));
    }
}

TEST_CASE("witness replay") {
    auto r = confusable_max(w2("11101"), w2("11011"), 2, CountMode::Exactly, ChannelModel::NonMultisetPattern,
                            ErrorType::Deletion, true);
    REQUIRE(r.witness);
    CHECK(r.witness->on_x.size() == 9);
    CHECK(replay_witness(r));
    r.witness->on_xp.pop_back();
    CHECK_FALSE(replay_witness(r));

    auto t = confusable_max(w2("11101"), w2("11011"), 2, CountMode::Exactly, ChannelModel::Traditional,
                            ErrorType::Deletion, true);
    CHECK(replay_witness(t));
    CHECK_FALSE(replay_witness(confusable_max(w2("11101"), w2("11011"), 2, CountMode::Exactly, ChannelModel::Traditional)));
}

TEST_CASE("insertion confusability") {
    // 01 and 10 share 010 and 101 after one insertion; 010 arises twice from each.
    const auto r = confusable_max(w2("01"), w2("10"), 1, CountMode::Exactly, ChannelModel::MultisetPattern,
                                  ErrorType::Insertion, true);
    const auto a = transmit_all(w2("01"), 1, CountMode::Exactly, ChannelModel::MultisetPattern, ErrorType::Insertion);
    const auto b = transmit_all(w2("10"), 1, CountMode::Exactly, ChannelModel::MultisetPattern, ErrorType::Insertion);
    std::uint64_t expect = 0;
    for (auto& [y, c] : a.items()) expect += std::min(c, b.count(y));
    CHECK(r.n_max_confusable == expect);
    CHECK(replay_witness(r));
}

TEST_CASE("argument errors") {
    CHECK_THROWS_AS(confusable_max(w2("101"), w2("10"), 1, CountMode::Exactly, ChannelModel::MultisetPattern), DomainError);
    CHECK_THROWS_AS(confusable_max(w2("101"), Word::parse("101", Alphabet(3)), 1, CountMode::Exactly,
                                   ChannelModel::MultisetPattern),
                    DomainError);
    CHECK_THROWS_AS(confusable_max(w2("101"), w2("100"), 4, CountMode::Exactly, ChannelModel::MultisetPattern), DomainError);
    CHECK_THROWS_AS(extremal_search(12, 3, 2, CountMode::Exactly, ChannelModel::MultisetPattern), BudgetExceeded);
}

TEST_CASE("extremal pairs for small parameters") {
    const auto r = extremal_search(6, 2, 2, CountMode::Exactly, ChannelModel::MultisetPattern);
    CHECK(r.n_max == 12);
    CHECK(contains_pair(r, "010000", "001000"));
    CHECK(r.pairs_examined == 64 * 63 / 2);

    const auto s = extremal_search(6, 2, 1, CountMode::Exactly, ChannelModel::NonMultisetPattern);
    CHECK(s.n_max == 4);
    CHECK(contains_pair(s, "001000", "000100"));

    const auto half = extremal_search(8, 2, 3, CountMode::Exactly, ChannelModel::MultisetPattern);
    CHECK(contains_pair(half, "00010000", "00001000"));
}

TEST_CASE("extremal search matches pairwise brute force") {
    for (int n = 3; n <= 6; ++n)
        for (std::size_t t = 1; t <= 2; ++t)
            for (auto model : {ChannelModel::Traditional, ChannelModel::MultisetPattern, ChannelModel::NonMultisetPattern}) {
                const auto r = extremal_search(static_cast<std::size_t>(n), 2, t, CountMode::AtMost, model);
                const auto bm = model == ChannelModel::Traditional     ? brute::Model::Traditional
                                : model == ChannelModel::MultisetPattern ? brute::Model::Multiset
                                                                         : brute::Model::NonMultiset;
                std::uint64_t best = 0;
                std::size_t count = 0;
                for (std::uint32_t a = 0; a < (1u << n); ++a)
                    for (std::uint32_t b = a + 1; b < (1u << n); ++b) {
                        const auto v = brute::confusable(brute::binary(a, n), brute::binary(b, n), static_cast<int>(t), true, bm);
                        if (v > best) {
                            best = v;
                            count = 0;
                        }
                        count += v == best;
                    }
                CHECK(r.n_max == best);
                CHECK(r.pairs.size() == count);
            }
}

TEST_CASE("pruned ternary search equals unpruned pair scan") {
    for (auto model : {ChannelModel::MultisetPattern, ChannelModel::NonMultisetPattern}) {
        const std::size_t n = 4, t = 2;
        const auto r = extremal_search(n, 3, t, CountMode::Exactly, model);
        std::uint64_t best = 0;
        std::size_t count = 0;
        std::vector<Word> words;
        for (int v = 0; v < 81; ++v) {
            std::vector<Symbol> s(n);
            int u = v;
            for (std::size_t i = n; i-- > 0; u /= 3) s[i] = static_cast<Symbol>(u % 3);
            words.emplace_back(s, Alphabet(3));
        }
        for (std::size_t a = 0; a < words.size(); ++a)
            for (std::size_t b = a + 1; b < words.size(); ++b) {
                const auto v = confusable_max(words[a], words[b], t, CountMode::Exactly, model).n_max_confusable;
                if (v > best) {
                    best = v;
                    count = 0;
                }
                count += v == best;
            }
        CHECK(r.n_max == best);
        CHECK(r.pairs.size() == count);
        CHECK(r.pairs_examined < 81 * 80 / 2);
    }
}

TEST_CASE("extremal search is independent of the worker count") {
    oracle::ExtremalOptions one, four;
    four.jobs = 4;
    const auto a = extremal_search(7, 2, 2, CountMode::AtMost, ChannelModel::MultisetPattern, one);
    const auto b = extremal_search(7, 2, 2, CountMode::AtMost, ChannelModel::MultisetPattern, four);
    CHECK(a.n_max == b.n_max);
    REQUIRE(a.pairs.size() == b.pairs.size());
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        CHECK(a.pairs[i].x == b.pairs[i].x);
        CHECK(a.pairs[i].xp == b.pairs[i].xp);
    }
}

TEST_CASE("canonical pairs") {
    const Alphabet a3(3);
    const auto p = canonical_pair(Word::parse("2210", a3), Word::parse("2201", a3));
    CHECK(p.first == Word::parse("0012", a3));
    CHECK(p.second == Word::parse("0021", a3));
    CHECK(canonical_pair(Word::parse("1102", a3), Word::parse("1120", a3)) == p);

    ExtremalOptions opts;
    opts.canonicalize = true;
    const auto plain = extremal_search(4, 3, 1, CountMode::Exactly, ChannelModel::MultisetPattern);
    const auto canon = extremal_search(4, 3, 1, CountMode::Exactly, ChannelModel::MultisetPattern, opts);
    CHECK(plain.n_max == canon.n_max);
    CHECK(canon.pairs.size() < plain.pairs.size());
    for (const auto& pr : canon.pairs) CHECK(canonical_pair(pr.x, pr.xp) == std::make_pair(pr.x, pr.xp));
}

TEST_CASE("pair filter restricts the scan") {
    ExtremalOptions opts;
    opts.filter = [](const Word& a, const Word& b) { return weight(a) == 1 && weight(b) == 1; };
    const auto r = extremal_search(6, 2, 2, CountMode::Exactly, ChannelModel::MultisetPattern, opts);
    CHECK(r.pairs_examined == 15);
    CHECK(r.n_max == 12);
    for (const auto& p : r.pairs) CHECK(weight(p.x) == 1);
}
