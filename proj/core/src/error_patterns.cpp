#include "levrecon/error_patterns.hpp"

#include <algorithm>

#include "levrecon/error.hpp"

namespace levrecon {

// ---- DeletionVector / InsertionVector ------------------------------------

DeletionVector::DeletionVector(std::vector<std::uint8_t> mask) : mask_(std::move(mask)) {
    for (auto b : mask_)
        if (b > 1) throw DomainError("deletion vector entries must be 0 or 1");
}

DeletionVector DeletionVector::parse(std::string_view text) {
    std::vector<std::uint8_t> mask;
    mask.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw ParseError("deletion vector must be a binary string");
        mask.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return DeletionVector(std::move(mask));
}

std::size_t DeletionVector::weight() const noexcept {
    return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), std::uint8_t{1}));
}

std::string DeletionVector::to_string() const {
    std::string s;
    s.reserve(mask_.size());
    for (auto b : mask_) s.push_back(b ? '1' : '0');
    return s;
}

InsertionVector::InsertionVector(std::vector<std::vector<Symbol>> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("insertion vector needs n+1 >= 1 parts");
}

std::size_t InsertionVector::total() const noexcept {
    std::size_t t = 0;
    for (const auto& p : parts_) t += p.size();
    return t;
}

// ---- application ----------------------------------------------------------

Word apply_deletion(const Word& x, const DeletionVector& d) {
    if (d.size() != x.size())
        throw DomainError("deletion vector length " + std::to_string(d.size()) + " != word length " +
                          std::to_string(x.size()));
    std::vector<Symbol> out;
    out.reserve(x.size() - d.weight());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!d.deletes(i)) out.push_back(x[i]);
    return Word(std::move(out), x.alphabet());
}

namespace {

void check_insertion(const Word& x, const InsertionVector& v) {
    if (v.gaps() != x.size() + 1)
        throw DomainError("insertion vector has " + std::to_string(v.gaps()) + " parts, expected " +
                          std::to_string(x.size() + 1));
    for (const auto& part : v.parts())
        for (Symbol s : part)
            if (!x.alphabet().contains(s)) throw DomainError("inserted symbol " + std::to_string(s) + " outside alphabet");
}

}  // namespace

Word apply_insertion(const Word& x, const InsertionVector& v) {
    check_insertion(x, v);
    std::vector<Symbol> out;
    out.reserve(x.size() + v.total());
    for (std::size_t i = 0; i <= x.size(); ++i) {
        const auto& part = v.parts()[i];
        out.insert(out.end(), part.begin(), part.end());
        if (i < x.size()) out.push_back(x[i]);
    }
    return Word(std::move(out), x.alphabet());
}

void validate_pattern(const Word& x, const ErrorPattern& p) {
    check_insertion(x, p.ins);
    if (p.del.size() != x.size()) throw DomainError("deletion vector length does not match word length");
    for (const auto& [pos, s] : p.sub.entries()) {
        if (pos < 1 || pos > x.size()) throw DomainError("substitution position " + std::to_string(pos) + " out of range");
        if (!x.alphabet().contains(s)) throw DomainError("substituted symbol outside alphabet");
        if (x[pos - 1] == s)
            throw DomainError("substitution at position " + std::to_string(pos) + " keeps the original symbol");
        if (p.del.deletes(pos - 1))
            throw DomainError("position " + std::to_string(pos) + " is both deleted and substituted");
    }
}

Word apply_pattern(const Word& x, const ErrorPattern& p) {
    validate_pattern(x, p);
    std::vector<Symbol> out;
    out.reserve(x.size() + p.ins.total());
    auto sub = p.sub.entries().begin();
    for (std::size_t i = 0; i <= x.size(); ++i) {
        const auto& part = p.ins.parts()[i];
        out.insert(out.end(), part.begin(), part.end());
        if (i == x.size()) break;
        Symbol s = x[i];
        if (sub != p.sub.entries().end() && sub->first == i + 1) {
            s = sub->second;
            ++sub;
        }
        if (!p.del.deletes(i)) out.push_back(s);
    }
    return Word(std::move(out), x.alphabet());
}

// ---- enumeration ------------------------------------------------------------

void for_each_deletion_vector(std::size_t n, std::size_t t, CountMode mode,
                              const std::function<void(const DeletionVector&)>& visit) {
    if (t > n) throw DomainError("deletion budget exceeds word length");
    const std::size_t lo = mode == CountMode::Exactly ? t : 0;
    std::vector<std::size_t> idx;
    for (std::size_t w = lo; w <= t; ++w) {
        idx.resize(w);
        for (std::size_t i = 0; i < w; ++i) idx[i] = i;
        while (true) {
            std::vector<std::uint8_t> mask(n, 0);
            for (auto i : idx) mask[i] = 1;
            visit(DeletionVector(std::move(mask)));
            // next combination
            std::size_t k = w;
            while (k > 0 && idx[k - 1] == n - w + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<DeletionVector> enumerate_deletion_vectors(std::size_t n, std::size_t t, CountMode mode) {
    std::vector<DeletionVector> out;
    for_each_deletion_vector(n, t, mode, [&](const DeletionVector& d) { out.push_back(d); });
    return out;
}

void for_each_insertion_vector(std::size_t n, int q, std::size_t t, CountMode mode,
                               const std::function<void(const InsertionVector&)>& visit) {
    if (q < 2) throw DomainError("alphabet size must be >= 2");
    const std::size_t lo = mode == CountMode::Exactly ? t : 0;
    for (std::size_t j = lo; j <= t; ++j) {
        std::vector<std::size_t> boxes(j, 0);  // nondecreasing in [0, n]
        while (true) {
            std::vector<Symbol> symbols(j, 0);
            while (true) {
                std::vector<std::vector<Symbol>> parts(n + 1);
                for (std::size_t k = 0; k < j; ++k) parts[boxes[k]].push_back(symbols[k]);
                visit(InsertionVector(std::move(parts)));
                std::size_t k = j;
                while (k > 0 && symbols[k - 1] == q - 1) symbols[--k] = 0;
                if (k == 0) break;
                ++symbols[k - 1];
            }
            std::size_t k = j;
            while (k > 0 && boxes[k - 1] == n) --k;
            if (k == 0) break;
            ++boxes[k - 1];
            for (std::size_t m = k; m < j; ++m) boxes[m] = boxes[k - 1];
        }
    }
}

// ---- sampling --------------------------------------------------------------

void PatternSampler::WeightTable::build(const std::vector<BigInt>& weights) {
    total_ = 0;
    for (const auto& w : weights) total_ += w;
    exact_ = to_u64(total_).has_value();
    exact_cumulative_.clear();
    approx_cumulative_.clear();
    BigInt running = 0;
    for (const auto& w : weights) {
        running += w;
        if (exact_)
            exact_cumulative_.push_back(running.convert_to<std::uint64_t>());
        else
            approx_cumulative_.push_back(running.convert_to<long double>() / total_.convert_to<long double>());
    }
}

std::size_t PatternSampler::WeightTable::draw(Rng& rng) const {
    if (exact_) {
        const std::uint64_t r = rng.below(exact_cumulative_.back());
        return static_cast<std::size_t>(std::upper_bound(exact_cumulative_.begin(), exact_cumulative_.end(), r) -
                                        exact_cumulative_.begin());
    }
    const long double r = rng.uniform01();
    auto it = std::upper_bound(approx_cumulative_.begin(), approx_cumulative_.end(), r);
    if (it == approx_cumulative_.end()) --it;
    return static_cast<std::size_t>(it - approx_cumulative_.begin());
}

PatternSampler::PatternSampler(std::size_t n, int q, ErrorBudgets budgets) : n_(n), q_(q), budgets_(budgets) {
    if (q < 2) throw DomainError("alphabet size must be >= 2");
    if (budgets.substitutions < 0 || budgets.deletions < 0 || budgets.insertions < 0)
        throw DomainError("error budgets must be non-negative");
    if (static_cast<std::size_t>(budgets.substitutions + budgets.deletions) > n)
        throw DomainError("t_d + t_s = " + std::to_string(budgets.substitutions + budgets.deletions) +
                          " exceeds word length " + std::to_string(n));
    std::vector<BigInt> ins;
    for (int j = 0; j <= budgets.insertions; ++j) ins.push_back(ipow(q, j) * binomial(std::int64_t(n) + j, j));
    insertion_lengths_.build(ins);

    std::vector<BigInt> splits;
    for (int s = 0; s <= budgets.substitutions; ++s) {
        for (int d = 0; d <= budgets.deletions; ++d) {
            splits.push_back(ipow(q - 1, s) * binomial(std::int64_t(n), s + d) * binomial(s + d, s));
            split_of_.emplace_back(s, d);
        }
    }
    edit_splits_.build(splits);
}

BigInt PatternSampler::space_size() const { return insertion_lengths_.total() * edit_splits_.total(); }

namespace {

/// Floyd's algorithm: uniform k-subset of [0, range), unsorted.
void choose_subset(std::uint32_t range, std::uint32_t k, Rng& rng, std::vector<std::uint32_t>& out) {
    out.clear();
    for (std::uint32_t j = range - k; j < range; ++j) {
        auto t = static_cast<std::uint32_t>(rng.below(std::uint64_t(j) + 1));
        if (std::find(out.begin(), out.end(), t) == out.end())
            out.push_back(t);
        else
            out.push_back(j);
    }
}

}  // namespace

void PatternSampler::draw(std::span<const Symbol> x, Rng& rng, Draw& d) const {
    const auto ins_len = static_cast<std::uint32_t>(insertion_lengths_.draw(rng));
    d.ins_boxes.clear();
    d.ins_symbols.clear();
    if (ins_len > 0) {
        // Stars and bars: a k-subset of n+k slots marks the stars; star k sits
        // in the gap equal to the number of bars before it.
        choose_subset(static_cast<std::uint32_t>(n_) + ins_len, ins_len, rng, d.ins_boxes);
        std::sort(d.ins_boxes.begin(), d.ins_boxes.end());
        for (std::uint32_t k = 0; k < ins_len; ++k) {
            d.ins_boxes[k] -= k;
            d.ins_symbols.push_back(static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(q_))));
        }
    }

    const auto [subs, dels] = split_of_[edit_splits_.draw(rng)];
    const auto edits = static_cast<std::uint32_t>(subs + dels);
    d.del_positions.clear();
    d.sub_positions.clear();
    d.sub_symbols.clear();
    if (edits > 0) {
        std::vector<std::uint32_t>& chosen = d.del_positions;
        choose_subset(static_cast<std::uint32_t>(n_), edits, rng, chosen);
        for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(subs); ++i)
            std::swap(chosen[i], chosen[i + rng.below(edits - i)]);
        d.sub_positions.assign(chosen.begin(), chosen.begin() + subs);
        chosen.erase(chosen.begin(), chosen.begin() + subs);
        std::sort(d.sub_positions.begin(), d.sub_positions.end());
        std::sort(chosen.begin(), chosen.end());
        for (auto pos : d.sub_positions) {
            auto r = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(q_ - 1)));
            d.sub_symbols.push_back(r >= x[pos] ? static_cast<Symbol>(r + 1) : r);
        }
    }
}

ErrorPattern PatternSampler::sample(const Word& x, Rng& rng) const {
    if (x.size() != n_ || x.q() != q_) throw DomainError("sampler configured for a different word shape");
    Draw d;
    draw(x.symbols(), rng, d);
    std::vector<std::vector<Symbol>> parts(n_ + 1);
    for (std::size_t k = 0; k < d.ins_boxes.size(); ++k) parts[d.ins_boxes[k]].push_back(d.ins_symbols[k]);
    std::vector<std::uint8_t> mask(n_, 0);
    for (auto p : d.del_positions) mask[p] = 1;
    std::map<std::size_t, Symbol> subs;
    for (std::size_t k = 0; k < d.sub_positions.size(); ++k) subs.emplace(d.sub_positions[k] + 1, d.sub_symbols[k]);
    return ErrorPattern{InsertionVector(std::move(parts)), DeletionVector(std::move(mask)),
                        SubstitutionPattern(std::move(subs))};
}

void PatternSampler::transmit(std::span<const Symbol> x, Rng& rng, std::vector<Symbol>& out) const {
    thread_local Draw d;
    draw(x, rng, d);
    out.clear();
    out.reserve(n_ + d.ins_boxes.size());
    std::size_t ins = 0, del = 0, sub = 0;
    for (std::size_t h = 0; h < n_; ++h) {
        while (ins < d.ins_boxes.size() && d.ins_boxes[ins] == h) out.push_back(d.ins_symbols[ins++]);
        if (del < d.del_positions.size() && d.del_positions[del] == h) {
            ++del;
            continue;
        }
        if (sub < d.sub_positions.size() && d.sub_positions[sub] == h) {
            out.push_back(d.sub_symbols[sub++]);
            continue;
        }
        out.push_back(x[h]);
    }
    while (ins < d.ins_boxes.size()) out.push_back(d.ins_symbols[ins++]);
}

ErrorPattern sample_pattern(const Word& x, ErrorBudgets budgets, std::uint64_t seed) {
    PatternSampler sampler(x.size(), x.q(), budgets);
    Rng rng(seed);
    return sampler.sample(x, rng);
}

}  // namespace levrecon
