#include "levrecon/decoder.hpp"

#include <algorithm>
#include <string>

#include "levrecon/error.hpp"

namespace levrecon {

void DecoderConfig::validate() const {
    if (q < 4) throw DomainError("decoder requires q >= 4");
    if (budgets.substitutions < 0 || budgets.deletions < 0 || budgets.insertions < 0)
        throw DomainError("error budgets must be non-negative");
    if (static_cast<std::size_t>(budgets.deletions) > n) throw DomainError("deletion budget exceeds n");
    if (max_reads && *max_reads == 0) throw DomainError("max_reads must be positive");
}

SymbolProfile::SymbolProfile(std::span<const Symbol> y, int q) { assign(y, q); }

void SymbolProfile::assign(std::span<const Symbol> y, int q) {
    counts_.assign(static_cast<std::size_t>(q), 0);
    length_ = static_cast<std::uint32_t>(y.size());
    for (Symbol s : y) {
        if (s >= q) throw DomainError("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(q));
        ++counts_[s];
    }
}

SymbolProfile profile(const Word& y) { return SymbolProfile(y.symbols(), y.q()); }

Frontier::Frontier(int q)
    : q_(q),
      pair_slots_(static_cast<std::size_t>(q) * static_cast<std::size_t>(q)),
      triple_slots_(static_cast<std::size_t>(q) * static_cast<std::size_t>(q) * static_cast<std::size_t>(q)) {
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (a == b) continue;
            const auto sa = static_cast<Symbol>(a), sb = static_cast<Symbol>(b);
            pair_keys_.push_back({pair_index(sa, sb), sa, sb});
            for (int c = 0; c < q; ++c)
                if (c != a && c != b) triple_keys_.push_back({triple_index(sa, sb, static_cast<Symbol>(c)), sa, sb, static_cast<Symbol>(c)});
        }
}

bool Frontier::update(const std::shared_ptr<const ProfiledWord>& y) {
    const SymbolProfile& m = y->profile;
    const bool first = !filled_;
    filled_ = true;
    bool changed = false;
    for (const PairKey& k : pair_keys_) {
        Slot& s = pair_slots_[k.index];
        const std::uint32_t low = m.count(k.a), high = m.count(k.b);
        if (first || (low <= s.low && high >= s.high)) {
            s = Slot{y, low, high};
            changed = true;
        }
    }
    for (const TripleKey& k : triple_keys_) {
        Slot& s = triple_slots_[k.index];
        const std::uint32_t low = m.count(k.a), high = m.others(k.a, k.b, k.c);
        if (first || (low <= s.low && high >= s.high)) {
            s = Slot{y, low, high};
            changed = true;
        }
    }
    return changed;
}

bool Frontier::admits(const SymbolProfile& m) const {
    if (!filled_) return true;
    const std::uint32_t* count = m.counts().data();
    const std::uint32_t length = m.length();
    for (const PairKey& k : pair_keys_) {
        const Slot& s = pair_slots_[k.index];
        if (count[k.a] <= s.low && count[k.b] >= s.high) return true;
    }
    for (const TripleKey& k : triple_keys_) {
        const Slot& s = triple_slots_[k.index];
        if (count[k.a] <= s.low && length - count[k.a] - count[k.b] - count[k.c] >= s.high) return true;
    }
    return false;
}

const ProfiledWord& Frontier::pair_slot(Symbol a, Symbol b) const {
    if (a >= q_ || b >= q_ || a == b) throw DomainError("pair slot needs two distinct symbols");
    const Slot& s = pair_slots_[pair_index(a, b)];
    if (!s.word) throw DomainError("frontier is empty");
    return *s.word;
}

const ProfiledWord& Frontier::triple_slot(Symbol a, Symbol b, Symbol c) const {
    if (a >= q_ || b >= q_ || c >= q_ || a == b || b == c || a == c)
        throw DomainError("triple slot needs three distinct symbols");
    const Slot& s = triple_slots_[triple_index(a, b, c)];
    if (!s.word) throw DomainError("frontier is empty");
    return *s.word;
}

namespace {

bool equalities_hold(const SymbolProfile* p[6], Symbol i1, Symbol i2, Symbol i3, const DecoderConfig& cfg) {
    const std::int64_t tm = cfg.t_m();
    const std::int64_t tis = cfg.budgets.insertions + cfg.budgets.substitutions;
    auto M = [&](int k, Symbol a) { return static_cast<std::int64_t>(p[k]->count(a)); };
    auto O = [&](int k) { return static_cast<std::int64_t>(p[k]->others(i1, i2, i3)); };
    return M(0, i1) == M(1, i1) + tm && M(1, i2) == M(2, i2) + tm && M(2, i3) == M(0, i3) + tm &&
           M(1, i1) == M(3, i1) && M(2, i2) == M(4, i2) && M(0, i3) == M(5, i3) && O(3) == O(0) + tis &&
           O(4) == O(3) && O(5) == O(3);
}

}  // namespace

bool verify_certificate(const Y6Certificate& cert, const DecoderConfig& cfg) {
    if (cert.words.size() != 6) return false;
    const Symbol i1 = cert.i1, i2 = cert.i2, i3 = cert.i3;
    if (i1 == i2 || i2 == i3 || i1 == i3) return false;
    if (i1 >= cfg.q || i2 >= cfg.q || i3 >= cfg.q) return false;
    std::vector<SymbolProfile> profiles;
    for (const Word& w : cert.words) {
        if (w.q() != cfg.q) return false;
        profiles.push_back(profile(w));
    }
    const SymbolProfile* p[6];
    for (int k = 0; k < 6; ++k) p[k] = &profiles[static_cast<std::size_t>(k)];
    return equalities_hold(p, i1, i2, i3, cfg);
}

std::optional<Y6Certificate> detect_y6(const Frontier& frontier, const DecoderConfig& cfg) {
    if (frontier.empty()) return std::nullopt;
    const auto tm = static_cast<std::uint32_t>(cfg.t_m());
    const auto& pairs = frontier.pair_slots_;
    const auto& triples = frontier.triple_slots_;
    for (const auto& k : frontier.triple_keys_) {
        const Symbol i1 = k.a, i2 = k.b, i3 = k.c;
        const auto& y31 = pairs[frontier.pair_index(i3, i1)];
        const auto& y12 = pairs[frontier.pair_index(i1, i2)];
        const auto& y23 = pairs[frontier.pair_index(i2, i3)];
        // The three pair equalities read only stored slot counts.
        if (y31.high != y12.low + tm || y12.high != y23.low + tm || y23.high != y31.low + tm) continue;
        const Frontier::Slot* w[6] = {&y31, &y12, &y23, &triples[k.index], &triples[frontier.triple_index(i2, i1, i3)],
                                      &triples[frontier.triple_index(i3, i1, i2)]};
        const SymbolProfile* p[6];
        for (int j = 0; j < 6; ++j) p[j] = &w[j]->word->profile;
        if (!equalities_hold(p, i1, i2, i3, cfg)) continue;
        Y6Certificate cert{i1, i2, i3, {}};
        for (auto* s : w) cert.words.push_back(s->word->word);
        return cert;
    }
    return std::nullopt;
}

MergeState::MergeState(const Y6Certificate& cert) {
    if (cert.words.size() != 6) throw DomainError("certificate must hold six words");
    const Symbol i1 = cert.i1, i2 = cert.i2, i3 = cert.i3;
    auto filter = [](const Word& w, auto keep) {
        std::vector<Symbol> out;
        for (Symbol s : w.symbols())
            if (keep(s)) out.push_back(s);
        return out;
    };
    z_[0] = filter(cert.words[0], [&](Symbol s) { return s != i1 && s != i3; });
    z_[1] = filter(cert.words[1], [&](Symbol s) { return s != i1 && s != i2; });
    z_[2] = filter(cert.words[2], [&](Symbol s) { return s != i2 && s != i3; });
    z_[3] = filter(cert.words[3], [&](Symbol s) { return s == i2 || s == i3; });
    z_[4] = filter(cert.words[4], [&](Symbol s) { return s == i1 || s == i3; });
    z_[5] = filter(cert.words[5], [&](Symbol s) { return s == i1 || s == i2; });
}

bool MergeState::finished() const {
    for (std::size_t k = 0; k < 6; ++k)
        if (head_[k] < z_[k].size()) return false;
    return true;
}

std::optional<Symbol> MergeState::step() {
    std::optional<Symbol> chosen;
    for (std::size_t k = 0; k < 6; ++k) {
        if (head_[k] >= z_[k].size()) continue;
        const Symbol s = z_[k][head_[k]];
        int matches = 0;
        for (std::size_t j = 0; j < 6; ++j)
            if (head_[j] < z_[j].size() && z_[j][head_[j]] == s) ++matches;
        if (matches != 3) continue;
        if (chosen && *chosen != s) return std::nullopt;
        chosen = s;
    }
    if (!chosen) return std::nullopt;
    for (std::size_t k = 0; k < 6; ++k)
        if (head_[k] < z_[k].size() && z_[k][head_[k]] == *chosen) ++head_[k];
    return chosen;
}

std::span<const Symbol> MergeState::remaining(std::size_t k) const {
    if (k >= 6) throw DomainError("merge index out of range");
    return std::span<const Symbol>(z_[k]).subspan(head_[k]);
}

std::optional<Word> reconstruct(const Y6Certificate& cert, const DecoderConfig& cfg) {
    MergeState state(cert);
    std::vector<Symbol> c;
    c.reserve(cfg.n);
    while (!state.finished()) {
        auto s = state.step();
        if (!s || c.size() == cfg.n) return std::nullopt;
        c.push_back(*s);
    }
    if (c.size() != cfg.n) return std::nullopt;
    return Word(std::move(c), Alphabet(cfg.q));
}

StreamDecoder::StreamDecoder(DecoderConfig cfg) : cfg_(std::move(cfg)), frontier_(cfg_.q) { cfg_.validate(); }

bool StreamDecoder::exhausted() const noexcept {
    return !halted() && cfg_.max_reads && result_.reads_consumed >= *cfg_.max_reads;
}

bool StreamDecoder::push(const Word& y) {
    if (y.q() != cfg_.q) throw DomainError("output alphabet does not match decoder alphabet");
    return push(y.symbols());
}

bool StreamDecoder::push(std::span<const Symbol> y) {
    if (halted() || exhausted()) return halted();
    const std::size_t lo = cfg_.n - static_cast<std::size_t>(cfg_.budgets.deletions);
    const std::size_t hi = cfg_.n + static_cast<std::size_t>(cfg_.budgets.insertions);
    if (y.size() < lo || y.size() > hi)
        throw DomainError("output length " + std::to_string(y.size()) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    scratch_.assign(y, cfg_.q);
    ++result_.reads_consumed;
    if (cfg_.t_m() == 0) {
        result_.word = Word(std::vector<Symbol>(y.begin(), y.end()), Alphabet(cfg_.q));
        return true;
    }
    if (!frontier_.admits(scratch_)) return false;
    auto pw = std::make_shared<ProfiledWord>(
        ProfiledWord{Word(std::vector<Symbol>(y.begin(), y.end()), Alphabet(cfg_.q)), scratch_});
    if (!frontier_.update(pw)) return false;
    auto cert = detect_y6(frontier_, cfg_);
    if (!cert) return false;
    auto word = reconstruct(*cert, cfg_);
    if (!word) return false;
    result_.word = std::move(word);
    result_.certificate = std::move(cert);
    return true;
}

DecodeResult decode_stream(std::span<const Word> outputs, const DecoderConfig& cfg) {
    cfg.validate();
    if (cfg.t_m() > 0 && outputs.size() < 6) return DecodeResult{};
    StreamDecoder decoder(cfg);
    for (const Word& y : outputs)
        if (decoder.push(y) || decoder.exhausted()) break;
    return decoder.result();
}

}  // namespace levrecon
