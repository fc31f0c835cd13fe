#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "levrecon/error_patterns.hpp"
#include "levrecon/words.hpp"

namespace levrecon {

struct DecoderConfig {
    int q = 4;
    std::size_t n = 0;
    ErrorBudgets budgets;
    /// Reads after which an undecided stream gives up; unlimited if empty.
    std::optional<std::uint64_t> max_reads;

    /// t_m = t_d + t_i + 2 t_s, the largest per-symbol count swing between two
    /// outputs of the same transmitted word.
    int t_m() const noexcept { return budgets.total_swing(); }
    /// Throws DomainError for q < 4 or negative budgets.
    void validate() const;
};

/// Per-symbol counts M_j(y).
class SymbolProfile {
public:
    SymbolProfile() = default;
    SymbolProfile(std::span<const Symbol> y, int q);
    /// Recounts in place, reusing storage.
    void assign(std::span<const Symbol> y, int q);

    std::uint32_t count(Symbol a) const { return counts_[a]; }
    /// M_{a,b,c}(y): positions holding none of a, b, c.
    std::uint32_t others(Symbol a, Symbol b, Symbol c) const {
        return length_ - counts_[a] - counts_[b] - counts_[c];
    }
    std::uint32_t length() const noexcept { return length_; }
    std::span<const std::uint32_t> counts() const noexcept { return counts_; }

private:
    std::vector<std::uint32_t> counts_;
    std::uint32_t length_ = 0;
};

SymbolProfile profile(const Word& y);

struct ProfiledWord {
    Word word;
    SymbolProfile profile;
};

struct Y6Certificate;

/// The collections Y2 = {y_{a,b}} and Y3 = {y_{a,b,c}}.  Slot y_{a,b} keeps a
/// word with small M_a and large M_b, slot y_{a,b,c} one with small M_a and
/// large M_{a,b,c}.  A new word displaces a slot when it is at least as good
/// in both counts.
class Frontier {
public:
    explicit Frontier(int q);

    int q() const noexcept { return q_; }
    bool empty() const noexcept { return !filled_; }

    /// Offers y to every slot (the first word fills all of them).  Returns
    /// whether any slot changed.
    bool update(const std::shared_ptr<const ProfiledWord>& y);
    /// Whether update would change any slot for a word with this profile.
    bool admits(const SymbolProfile& m) const;

    const ProfiledWord& pair_slot(Symbol a, Symbol b) const;
    const ProfiledWord& triple_slot(Symbol a, Symbol b, Symbol c) const;

private:
    friend std::optional<Y6Certificate> detect_y6(const Frontier&, const DecoderConfig&);

    std::size_t pair_index(Symbol a, Symbol b) const { return std::size_t(a) * q_ + b; }
    std::size_t triple_index(Symbol a, Symbol b, Symbol c) const { return (std::size_t(a) * q_ + b) * q_ + c; }

    struct Slot {
        std::shared_ptr<const ProfiledWord> word;
        std::uint32_t low = 0;   // stored M_a
        std::uint32_t high = 0;  // stored M_b or M_{a,b,c}
    };

    struct PairKey {
        std::size_t index;
        Symbol a, b;
    };
    struct TripleKey {
        std::size_t index;
        Symbol a, b, c;
    };

    int q_;
    bool filled_ = false;
    std::vector<PairKey> pair_keys_;      // distinct (a, b)
    std::vector<TripleKey> triple_keys_;  // distinct (a, b, c)
    std::vector<Slot> pair_slots_;    // q*q, diagonal unused
    std::vector<Slot> triple_slots_;  // q*q*q, only distinct triples used
};

/// Six frontier words satisfying the count equalities for (i1, i2, i3):
/// words[0] = y_{i3,i1}, words[1] = y_{i1,i2}, words[2] = y_{i2,i3},
/// words[3] = y_{i1,i2,i3}, words[4] = y_{i2,i1,i3}, words[5] = y_{i3,i1,i2}.
struct Y6Certificate {
    Symbol i1 = 0;
    Symbol i2 = 0;
    Symbol i3 = 0;
    std::vector<Word> words;  // always six entries
};

/// Checks the seven count equalities directly on the certificate words.
bool verify_certificate(const Y6Certificate& cert, const DecoderConfig& cfg);

/// First triple in lexicographic order whose slots satisfy the equalities.
std::optional<Y6Certificate> detect_y6(const Frontier& frontier, const DecoderConfig& cfg);

/// Ordered merge of the six filtered words z_1..z_6.  Each step emits the
/// symbol shared by exactly three heads and pops those heads.
class MergeState {
public:
    explicit MergeState(const Y6Certificate& cert);

    bool finished() const;
    /// Emits one symbol; empty when no symbol heads exactly three words
    /// (an inconsistent certificate).
    std::optional<Symbol> step();
    /// Unconsumed tail of z_{k+1}.
    std::span<const Symbol> remaining(std::size_t k) const;

private:
    std::array<std::vector<Symbol>, 6> z_;
    std::array<std::size_t, 6> head_{};
};

/// Rebuilds x from a certificate; empty when the merge invariant breaks or
/// the result does not have length n.
std::optional<Word> reconstruct(const Y6Certificate& cert, const DecoderConfig& cfg);

struct DecodeResult {
    /// The transmitted word, or empty for the empty-word answer.
    std::optional<Word> word;
    std::uint64_t reads_consumed = 0;
    std::optional<Y6Certificate> certificate;
};

/// Online decoder: feed channel outputs one at a time.
class StreamDecoder {
public:
    explicit StreamDecoder(DecoderConfig cfg);

    /// Reads one output.  Returns true once the decoder has halted with a
    /// word; further pushes are ignored.  Throws DomainError for symbols
    /// outside Z_q or lengths outside [n - t_d, n + t_i].
    bool push(const Word& y);
    bool push(std::span<const Symbol> y);

    bool halted() const noexcept { return result_.word.has_value(); }
    bool exhausted() const noexcept;
    const DecodeResult& result() const noexcept { return result_; }
    const Frontier& frontier() const noexcept { return frontier_; }

private:
    DecoderConfig cfg_;
    Frontier frontier_;
    SymbolProfile scratch_;
    DecodeResult result_;
};

/// Decodes a finite stream.  Fewer than six outputs (with errors possible)
/// give the empty word.
DecodeResult decode_stream(std::span<const Word> outputs, const DecoderConfig& cfg);

}  // namespace levrecon
