#include "levrecon/channel.hpp"

#include <set>

#include "levrecon/error.hpp"

namespace levrecon {

std::string_view to_string(ChannelModel m) {
    switch (m) {
        case ChannelModel::Traditional: return "traditional";
        case ChannelModel::MultisetPattern: return "multiset";
        case ChannelModel::NonMultisetPattern: return "nonmultiset";
    }
    return "?";
}

std::string_view to_string(CountMode m) { return m == CountMode::Exactly ? "exactly" : "at-most"; }

std::string_view to_string(ErrorType e) { return e == ErrorType::Deletion ? "deletion" : "insertion"; }

ChannelModel parse_channel_model(std::string_view s) {
    if (s == "traditional") return ChannelModel::Traditional;
    if (s == "multiset") return ChannelModel::MultisetPattern;
    if (s == "nonmultiset" || s == "non-multiset") return ChannelModel::NonMultisetPattern;
    throw ParseError("unknown channel model '" + std::string(s) + "'");
}

CountMode parse_count_mode(std::string_view s) {
    if (s == "exactly" || s == "exact") return CountMode::Exactly;
    if (s == "at-most" || s == "at_most" || s == "atmost") return CountMode::AtMost;
    throw ParseError("unknown count mode '" + std::string(s) + "'");
}

ErrorType parse_error_type(std::string_view s) {
    if (s == "deletion") return ErrorType::Deletion;
    if (s == "insertion") return ErrorType::Insertion;
    throw ParseError("unknown error type '" + std::string(s) + "'");
}

void OutputCollection::add(const Word& w, std::uint64_t count) {
    if (count == 0) return;
    auto& c = items_[w];
    c = kind_ == CollectionKind::Set ? 1 : c + count;
}

void OutputCollection::merge(const OutputCollection& other) {
    if (other.kind_ != kind_) throw DomainError("cannot merge a set with a multiset");
    for (const auto& [w, c] : other.items_) add(w, c);
}

std::uint64_t OutputCollection::count(const Word& w) const {
    auto it = items_.find(w);
    return it == items_.end() ? 0 : it->second;
}

std::uint64_t OutputCollection::total() const noexcept {
    std::uint64_t t = 0;
    for (const auto& [w, c] : items_) t += c;
    return t;
}

OutputCollection OutputCollection::as_set() const {
    OutputCollection s(CollectionKind::Set);
    for (const auto& [w, c] : items_) s.add(w);
    return s;
}

OutputCollection transmit_all(const Word& x, std::size_t t, CountMode mode, ChannelModel model, ErrorType type,
                              std::uint64_t limit) {
    OutputCollection out(OutputCollection::kind_for(model));
    const auto n = static_cast<std::int64_t>(x.size());
    const auto tt = static_cast<std::int64_t>(t);
    if (type == ErrorType::Deletion) {
        if (tt > n) throw DomainError("cannot delete " + std::to_string(t) + " symbols from a word of length " +
                                      std::to_string(x.size()));
        const BigInt patterns = mode == CountMode::Exactly ? binomial(n, tt) : hamming_ball_volume(2, n, tt);
        if (patterns > limit) throw BudgetExceeded("deletion pattern count exceeds enumeration limit");
        for_each_deletion_vector(x.size(), t, mode, [&](const DeletionVector& d) { out.add(apply_deletion(x, d)); });
        return out;
    }
    const BigInt patterns =
        mode == CountMode::Exactly ? ipow(x.q(), tt) * binomial(n + tt, tt) : insertion_ball_volume(x.q(), n, tt);
    if (patterns > limit) throw BudgetExceeded("insertion pattern count exceeds enumeration limit");
    for_each_insertion_vector(x.size(), x.q(), t, mode,
                              [&](const InsertionVector& v) { out.add(apply_insertion(x, v)); });
    return out;
}

OutputCollection transmit_random(const Word& x, std::size_t channels, ErrorBudgets budgets, ChannelModel model,
                                 std::uint64_t seed, bool strict) {
    if (channels < 1) throw DomainError("need at least one channel");
    PatternSampler sampler(x.size(), x.q(), budgets);
    Rng rng(seed);
    OutputCollection out(OutputCollection::kind_for(model));
    if (!strict) {
        for (std::size_t i = 0; i < channels; ++i) out.add(apply_pattern(x, sampler.sample(x, rng)));
        return out;
    }
    if (BigInt(channels) > sampler.space_size())
        throw DomainError("strict mode needs " + std::to_string(channels) + " distinct patterns but only " +
                          to_string(sampler.space_size()) + " exist");
    const std::uint64_t max_attempts = 1000 * std::uint64_t(channels) + 1'000'000;
    std::uint64_t attempts = 0;
    if (model == ChannelModel::Traditional) {
        // Distinct outputs; the number of reachable outputs is not known up
        // front, so the attempt cap is the only guard.
        while (out.distinct() < channels) {
            if (++attempts > max_attempts) throw BudgetExceeded("could not draw enough distinct outputs");
            out.add(apply_pattern(x, sampler.sample(x, rng)));
        }
        return out;
    }
    std::set<ErrorPattern> seen;
    while (seen.size() < channels) {
        if (++attempts > max_attempts) throw BudgetExceeded("could not draw enough distinct patterns");
        ErrorPattern p = sampler.sample(x, rng);
        if (seen.insert(p).second) out.add(apply_pattern(x, p));
    }
    return out;
}

}  // namespace levrecon
