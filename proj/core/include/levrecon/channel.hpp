#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>

#include "levrecon/error_patterns.hpp"
#include "levrecon/words.hpp"

namespace levrecon {

enum class ChannelModel { Traditional, MultisetPattern, NonMultisetPattern };
enum class ErrorType { Deletion, Insertion };
enum class CollectionKind { Set, Multiset };

std::string_view to_string(ChannelModel m);
std::string_view to_string(CountMode m);
std::string_view to_string(ErrorType e);
ChannelModel parse_channel_model(std::string_view s);
CountMode parse_count_mode(std::string_view s);
ErrorType parse_error_type(std::string_view s);

/// The (multi)set Y received from N channels, as word -> multiplicity with
/// canonical word order.  Set collections keep every multiplicity at 1.
class OutputCollection {
public:
    explicit OutputCollection(CollectionKind kind) : kind_(kind) {}

    static CollectionKind kind_for(ChannelModel m) {
        return m == ChannelModel::MultisetPattern ? CollectionKind::Multiset : CollectionKind::Set;
    }

    void add(const Word& w, std::uint64_t count = 1);
    /// Associative, commutative merge.
    void merge(const OutputCollection& other);

    CollectionKind kind() const noexcept { return kind_; }
    const std::map<Word, std::uint64_t>& items() const noexcept { return items_; }
    std::uint64_t count(const Word& w) const;
    std::size_t distinct() const noexcept { return items_.size(); }
    std::uint64_t total() const noexcept;

    /// Same words with multiplicities dropped.
    OutputCollection as_set() const;

    bool operator==(const OutputCollection&) const = default;

private:
    CollectionKind kind_;
    std::map<Word, std::uint64_t> items_;
};

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

/// Applies every pattern of the given type and budget to x (the maximal
/// channel experiment).  Multiset multiplicity counts patterns.
OutputCollection transmit_all(const Word& x, std::size_t t, CountMode mode, ChannelModel model, ErrorType type,
                              std::uint64_t limit = kDefaultEnumerationLimit);

/// N independent uniformly drawn patterns.  With strict set, duplicate draws
/// are rejected: duplicate patterns for the pattern models, duplicate output
/// words for the traditional model.
OutputCollection transmit_random(const Word& x, std::size_t channels, ErrorBudgets budgets, ChannelModel model,
                                 std::uint64_t seed, bool strict = false);

}  // namespace levrecon
