#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levrecon/bigint.hpp"

namespace levrecon {

using Symbol = std::uint16_t;

/// Alphabet Z_q; symbols are the integers 0 .. q-1.
class Alphabet {
public:
    explicit Alphabet(int q);

    int size() const noexcept { return q_; }
    bool contains(int s) const noexcept { return s >= 0 && s < q_; }

    auto operator<=>(const Alphabet&) const = default;

private:
    int q_;
};

/// An immutable q-ary word.  Lengths are unrestricted and the empty word is
/// valid, so outputs of any channel are Words over the same alphabet.
///
/// Text format: a digit string ("11101") when q <= 10, otherwise
/// comma-separated integers ("1,12,0").  Positions exposed through
/// support() and the error-pattern types are 1-based.
class Word {
public:
    Word(std::vector<Symbol> symbols, Alphabet alphabet);
    explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

    static Word parse(std::string_view text, Alphabet alphabet);
    static Word zeros(std::size_t n, Alphabet alphabet);

    std::string to_string() const;

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    Alphabet alphabet() const noexcept { return alphabet_; }
    int q() const noexcept { return alphabet_.size(); }

    /// 0-based element access.
    Symbol operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    bool operator==(const Word&) const = default;
    /// Canonical order: alphabet, then lexicographic on symbols.
    std::strong_ordering operator<=>(const Word& other) const;

private:
    std::vector<Symbol> symbols_;
    Alphabet alphabet_;
};

/// 1-based positions of nonzero symbols.
std::vector<std::size_t> support(const Word& w);
std::size_t weight(const Word& w);
std::size_t hamming_distance(const Word& a, const Word& b);

/// V_q(n, t) = sum_{i=0}^{t} (q-1)^i C(n, i).
BigInt hamming_ball_volume(int q, std::int64_t n, std::int64_t t);

/// Number of insertion vectors of total length at most t for a length-n word:
/// sum_{i=0}^{t} q^i C(n+i, i).
BigInt insertion_ball_volume(int q, std::int64_t n, std::int64_t t);

}  // namespace levrecon
