#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "levrecon/channel.hpp"
#include "levrecon/error_patterns.hpp"
#include "levrecon/words.hpp"

namespace levrecon::oracle {

/// Pattern sets D on x and D' on x' that produce the same received collection.
struct Witness {
    std::vector<ErrorPattern> on_x;
    std::vector<ErrorPattern> on_xp;
    OutputCollection outputs{CollectionKind::Set};
};

struct ConfusabilityReport {
    Word x;
    Word xp;
    ChannelModel model;
    ErrorType type;
    std::size_t t;
    CountMode mode;
    /// Largest N for which x and x' can produce the same received collection.
    std::uint64_t n_max_confusable = 0;
    std::optional<Witness> witness;
};

/// Brute-force confusability of a word pair.
///  Traditional:  number of common distinct outputs.
///  Multiset:     sum over common outputs of min(m_x(y), m_x'(y)).
///  NonMultiset:  max N such that some common-output set Y admits
///                |Y| <= N <= min(sum_Y m_x, sum_Y m_x').
ConfusabilityReport confusable_max(const Word& x, const Word& xp, std::size_t t, CountMode mode, ChannelModel model,
                                   ErrorType type = ErrorType::Deletion, bool with_witness = false);

/// Replays a witness through the channel and checks both sides agree.
bool replay_witness(const ConfusabilityReport& report);

struct ExtremalPair {
    Word x;
    Word xp;
    std::uint64_t n_max = 0;
};

using PairFilter = std::function<bool(const Word&, const Word&)>;

struct ExtremalOptions {
    /// Report pairs up to symbol relabelling (first-occurrence canonical form).
    bool canonicalize = false;
    unsigned jobs = 1;
    /// Guard on q^(2n) * (patterns per word).
    double budget = 2e10;
    /// Optional restriction of the pair space (e.g. weight classes).
    PairFilter filter;
};

struct ExtremalResult {
    std::uint64_t n_max = 0;
    std::vector<ExtremalPair> pairs;  // sorted, deduplicated
    std::uint64_t pairs_examined = 0;
};

/// Every unordered pair of distinct words in Z_q^n attaining the maximum
/// deletion confusability under the model.
ExtremalResult extremal_search(std::size_t n, int q, std::size_t t, CountMode mode, ChannelModel model,
                               const ExtremalOptions& options = {});

/// Relabels symbols by first occurrence across x then x' and orders the pair.
std::pair<Word, Word> canonical_pair(const Word& x, const Word& xp);

}  // namespace levrecon::oracle
