#include "levrecon/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <thread>

#include "levrecon/error.hpp"

namespace levrecon::oracle {

namespace {

using PatternGroups = std::map<Word, std::vector<ErrorPattern>>;

PatternGroups group_patterns(const Word& x, std::size_t t, CountMode mode, ErrorType type) {
    PatternGroups groups;
    const std::size_t n = x.size();
    if (type == ErrorType::Deletion) {
        for_each_deletion_vector(n, t, mode, [&](const DeletionVector& d) {
            ErrorPattern p{InsertionVector::none(n), d, {}};
            groups[apply_deletion(x, d)].push_back(std::move(p));
        });
    } else {
        const auto patterns = mode == CountMode::Exactly
                                  ? ipow(x.q(), std::int64_t(t)) * binomial(std::int64_t(n + t), std::int64_t(t))
                                  : insertion_ball_volume(x.q(), std::int64_t(n), std::int64_t(t));
        if (patterns > kDefaultEnumerationLimit) throw BudgetExceeded("insertion oracle exceeds enumeration limit");
        for_each_insertion_vector(n, x.q(), t, mode, [&](const InsertionVector& v) {
            ErrorPattern p{v, DeletionVector::none(n), {}};
            groups[apply_insertion(x, v)].push_back(std::move(p));
        });
    }
    return groups;
}

}  // namespace

ConfusabilityReport confusable_max(const Word& x, const Word& xp, std::size_t t, CountMode mode, ChannelModel model,
                                   ErrorType type, bool with_witness) {
    if (x.alphabet() != xp.alphabet()) throw DomainError("confusable_max: alphabet mismatch");
    if (x.size() != xp.size()) throw DomainError("confusable_max: words must have equal length");
    if (type == ErrorType::Deletion && t > x.size()) throw DomainError("confusable_max: t exceeds word length");

    ConfusabilityReport report{x, xp, model, type, t, mode, 0, std::nullopt};
    const PatternGroups gx = group_patterns(x, t, mode, type);
    const PatternGroups gxp = group_patterns(xp, t, mode, type);

    std::vector<const Word*> common;
    for (const auto& [y, ps] : gx)
        if (gxp.count(y)) common.push_back(&y);

    Witness w;
    w.outputs = OutputCollection(OutputCollection::kind_for(model));

    switch (model) {
        case ChannelModel::Traditional: {
            report.n_max_confusable = common.size();
            for (const Word* y : common) {
                w.on_x.push_back(gx.at(*y).front());
                w.on_xp.push_back(gxp.at(*y).front());
                w.outputs.add(*y);
            }
            break;
        }
        case ChannelModel::MultisetPattern: {
            for (const Word* y : common) {
                const auto& px = gx.at(*y);
                const auto& pxp = gxp.at(*y);
                const std::size_t m = std::min(px.size(), pxp.size());
                report.n_max_confusable += m;
                w.on_x.insert(w.on_x.end(), px.begin(), px.begin() + static_cast<std::ptrdiff_t>(m));
                w.on_xp.insert(w.on_xp.end(), pxp.begin(), pxp.begin() + static_cast<std::ptrdiff_t>(m));
                w.outputs.add(*y, m);
            }
            break;
        }
        case ChannelModel::NonMultisetPattern: {
            // Every common output is reachable at least once from both words,
            // so Y = all common outputs already satisfies |Y| <= min-sum, and
            // shrinking Y can only lower either sum.
            std::uint64_t sum_x = 0, sum_xp = 0;
            for (const Word* y : common) {
                sum_x += gx.at(*y).size();
                sum_xp += gxp.at(*y).size();
            }
            const std::uint64_t best = std::min(sum_x, sum_xp);
            report.n_max_confusable = best;
            auto pick = [&](const PatternGroups& g, std::vector<ErrorPattern>& out) {
                // One pattern per output first so every y in Y is produced,
                // then fill up to N.
                for (const Word* y : common) out.push_back(g.at(*y).front());
                for (const Word* y : common) {
                    const auto& ps = g.at(*y);
                    for (std::size_t k = 1; k < ps.size() && out.size() < best; ++k) out.push_back(ps[k]);
                }
            };
            pick(gx, w.on_x);
            pick(gxp, w.on_xp);
            for (const Word* y : common) w.outputs.add(*y);
            break;
        }
    }
    if (with_witness) report.witness = std::move(w);
    return report;
}

bool replay_witness(const ConfusabilityReport& report) {
    if (!report.witness) return false;
    const Witness& w = *report.witness;
    if (w.on_x.size() != w.on_xp.size() || w.on_x.size() != report.n_max_confusable) return false;
    if (std::set<ErrorPattern>(w.on_x.begin(), w.on_x.end()).size() != w.on_x.size()) return false;
    if (std::set<ErrorPattern>(w.on_xp.begin(), w.on_xp.end()).size() != w.on_xp.size()) return false;
    const auto kind = OutputCollection::kind_for(report.model);
    OutputCollection from_x(kind), from_xp(kind);
    for (const auto& p : w.on_x) from_x.add(apply_pattern(report.x, p));
    for (const auto& p : w.on_xp) from_xp.add(apply_pattern(report.xp, p));
    if (report.model == ChannelModel::Traditional && from_x.distinct() != w.on_x.size()) return false;
    return from_x == from_xp && from_x == w.outputs;
}

std::pair<Word, Word> canonical_pair(const Word& x, const Word& xp) {
    auto relabel = [](const Word& a, const Word& b) {
        std::vector<int> map(static_cast<std::size_t>(a.q()), -1);
        int next = 0;
        auto apply = [&](const Word& w) {
            std::vector<Symbol> out;
            out.reserve(w.size());
            for (Symbol s : w.symbols()) {
                if (map[s] < 0) map[s] = next++;
                out.push_back(static_cast<Symbol>(map[s]));
            }
            return Word(std::move(out), w.alphabet());
        };
        Word ra = apply(a);
        Word rb = apply(b);
        if (rb < ra) std::swap(ra, rb);
        return std::pair<Word, Word>(std::move(ra), std::move(rb));
    };
    auto first = relabel(x, xp);
    auto second = relabel(xp, x);
    return std::min(first, second);
}

namespace {

/// Output multiset of every word in Z_q^n under one deletion budget, stored
/// as sorted (code, multiplicity) runs.  Code = q^len + base-q value, which
/// is unique across output lengths.
class ProfileTable {
public:
    ProfileTable(std::size_t n, int q, std::size_t t, CountMode mode) : n_(n), q_(q) {
        std::vector<std::vector<std::uint8_t>> kept;
        for_each_deletion_vector(n, t, mode, [&](const DeletionVector& d) {
            std::vector<std::uint8_t> k;
            for (std::size_t i = 0; i < n; ++i)
                if (!d.deletes(i)) k.push_back(static_cast<std::uint8_t>(i));
            kept.push_back(std::move(k));
        });
        patterns_ = kept.size();
        words_ = 1;
        for (std::size_t i = 0; i < n; ++i) words_ *= static_cast<std::uint64_t>(q);
        offsets_.reserve(words_ + 1);
        offsets_.push_back(0);
        std::vector<std::uint8_t> digits(n);
        std::vector<std::uint64_t> codes(kept.size());
        for (std::uint64_t w = 0; w < words_; ++w) {
            decode(w, digits);
            for (std::size_t p = 0; p < kept.size(); ++p) {
                std::uint64_t c = 1;
                for (auto pos : kept[p]) c = c * static_cast<std::uint64_t>(q) + digits[pos];
                codes[p] = c;
            }
            std::sort(codes.begin(), codes.end());
            for (std::size_t i = 0; i < codes.size();) {
                std::size_t j = i;
                while (j < codes.size() && codes[j] == codes[i]) ++j;
                entries_.push_back({codes[i], static_cast<std::uint32_t>(j - i)});
                i = j;
            }
            offsets_.push_back(entries_.size());
        }
    }

    std::uint64_t words() const { return words_; }
    std::size_t patterns() const { return patterns_; }

    void decode(std::uint64_t w, std::vector<std::uint8_t>& digits) const {
        for (std::size_t i = n_; i-- > 0;) {
            digits[i] = static_cast<std::uint8_t>(w % static_cast<std::uint64_t>(q_));
            w /= static_cast<std::uint64_t>(q_);
        }
    }

    Word word(std::uint64_t w) const {
        std::vector<std::uint8_t> digits(n_);
        decode(w, digits);
        return Word(std::vector<Symbol>(digits.begin(), digits.end()), Alphabet(q_));
    }

    std::uint64_t pair_value(std::uint64_t a, std::uint64_t b, ChannelModel model) const {
        std::size_t i = offsets_[a], ie = offsets_[a + 1];
        std::size_t j = offsets_[b], je = offsets_[b + 1];
        std::uint64_t common = 0, min_sum = 0, sum_a = 0, sum_b = 0;
        while (i < ie && j < je) {
            if (entries_[i].code < entries_[j].code) {
                ++i;
            } else if (entries_[j].code < entries_[i].code) {
                ++j;
            } else {
                ++common;
                min_sum += std::min(entries_[i].count, entries_[j].count);
                sum_a += entries_[i].count;
                sum_b += entries_[j].count;
                ++i;
                ++j;
            }
        }
        switch (model) {
            case ChannelModel::Traditional: return common;
            case ChannelModel::MultisetPattern: return min_sum;
            case ChannelModel::NonMultisetPattern: return std::min(sum_a, sum_b);
        }
        return 0;
    }

private:
    struct Entry {
        std::uint64_t code;
        std::uint32_t count;
    };
    std::size_t n_;
    int q_;
    std::size_t patterns_ = 0;
    std::uint64_t words_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Entry> entries_;
};

struct Partial {
    std::uint64_t best = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::uint64_t examined = 0;
};

}  // namespace

ExtremalResult extremal_search(std::size_t n, int q, std::size_t t, CountMode mode, ChannelModel model,
                               const ExtremalOptions& options) {
    if (q < 2) throw DomainError("extremal_search: q must be >= 2");
    if (n < 1 || t > n) throw DomainError("extremal_search: need 1 <= n and t <= n");
    if (static_cast<double>(n) * std::log2(static_cast<double>(q)) > 62.0)
        throw BudgetExceeded("extremal_search: word space too large to index");
    const double patterns = to_double(mode == CountMode::Exactly ? binomial(std::int64_t(n), std::int64_t(t))
                                                                 : hamming_ball_volume(2, std::int64_t(n), std::int64_t(t)));
    const double cost = std::pow(static_cast<double>(q), 2.0 * static_cast<double>(n)) * patterns;
    if (cost > options.budget)
        throw BudgetExceeded("extremal_search: q^(2n) * patterns = " + std::to_string(cost) + " exceeds budget");

    const ProfileTable table(n, q, t, mode);
    const std::uint64_t words = table.words();

    // For q > 2, collapsing both words to binary with A = {x_i} at the first
    // differing coordinate i can only merge outputs, which bounds the
    // multiset and non-multiset values from above.
    std::unique_ptr<ProfileTable> binary;
    std::vector<std::uint32_t> binary_value;
    const bool prune = q > 2 && model != ChannelModel::Traditional && n <= 10;
    if (prune) {
        binary = std::make_unique<ProfileTable>(n, 2, t, mode);
        const std::uint64_t bw = binary->words();
        binary_value.assign(bw * bw, 0);
        for (std::uint64_t a = 0; a < bw; ++a)
            for (std::uint64_t b = a; b < bw; ++b)
                binary_value[a * bw + b] = binary_value[b * bw + a] =
                    static_cast<std::uint32_t>(binary->pair_value(a, b, model));
    }

    std::vector<Word> word_cache;
    if (options.filter) {
        word_cache.reserve(words);
        for (std::uint64_t w = 0; w < words; ++w) word_cache.push_back(table.word(w));
    }

    const unsigned jobs = std::max(1u, options.jobs);
    std::vector<Partial> partials(jobs);
    auto worker = [&](unsigned id) {
        Partial& part = partials[id];
        std::vector<std::uint8_t> da(n), db(n);
        for (std::uint64_t a = id; a < words; a += jobs) {
            if (prune) table.decode(a, da);
            for (std::uint64_t b = a + 1; b < words; ++b) {
                if (options.filter && !options.filter(word_cache[a], word_cache[b])) continue;
                if (prune) {
                    table.decode(b, db);
                    std::size_t i = 0;
                    while (da[i] == db[i]) ++i;
                    const std::uint8_t pivot = da[i];
                    std::uint64_t fa = 0, fb = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        fa = 2 * fa + (da[k] == pivot ? 0 : 1);
                        fb = 2 * fb + (db[k] == pivot ? 0 : 1);
                    }
                    if (binary_value[fa * binary->words() + fb] < part.best) continue;
                }
                ++part.examined;
                const std::uint64_t v = table.pair_value(a, b, model);
                if (v > part.best) {
                    part.best = v;
                    part.pairs.clear();
                }
                if (v == part.best) part.pairs.emplace_back(a, b);
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
        for (auto& th : threads) th.join();
    }

    ExtremalResult result;
    for (const auto& p : partials) {
        result.n_max = std::max(result.n_max, p.best);
        result.pairs_examined += p.examined;
    }
    std::set<std::pair<Word, Word>> found;
    for (const auto& p : partials) {
        if (p.best != result.n_max) continue;
        for (auto [a, b] : p.pairs) {
            Word wa = table.word(a), wb = table.word(b);
            found.insert(options.canonicalize ? canonical_pair(wa, wb) : std::pair<Word, Word>(wa, wb));
        }
    }
    for (auto& [a, b] : found) result.pairs.push_back({a, b, result.n_max});
    return result;
}

}  // namespace levrecon::oracle
