#include "levrecon/words.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "levrecon/error.hpp"

namespace levrecon {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt ipow(std::int64_t base, std::int64_t exp) {
    if (exp < 0) throw DomainError("ipow: negative exponent");
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

std::optional<std::uint64_t> to_u64(const BigInt& v) {
    if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max())) return std::nullopt;
    return v.convert_to<std::uint64_t>();
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

std::string to_string(const BigInt& v) { return v.str(); }

Alphabet::Alphabet(int q) : q_(q) {
    if (q < 2 || q > 65536) throw DomainError("alphabet size must be in [2, 65536], got " + std::to_string(q));
}

Word::Word(std::vector<Symbol> symbols, Alphabet alphabet) : symbols_(std::move(symbols)), alphabet_(alphabet) {
    for (Symbol s : symbols_) {
        if (!alphabet_.contains(s))
            throw DomainError("symbol " + std::to_string(s) + " outside Z_" + std::to_string(alphabet_.size()));
    }
}

Word Word::zeros(std::size_t n, Alphabet alphabet) { return Word(std::vector<Symbol>(n, 0), alphabet); }

Word Word::parse(std::string_view text, Alphabet alphabet) {
    std::vector<Symbol> out;
    if (alphabet.size() <= 10) {
        out.reserve(text.size());
        for (char c : text) {
            if (c < '0' || c > '9') throw ParseError(std::string("invalid character '") + c + "' in word");
            int s = c - '0';
            if (!alphabet.contains(s))
                throw ParseError("symbol " + std::to_string(s) + " outside Z_" + std::to_string(alphabet.size()));
            out.push_back(static_cast<Symbol>(s));
        }
        return Word(std::move(out), alphabet);
    }
    if (text.empty()) return Word(alphabet);
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view tok = text.substr(pos, comma - pos);
        int value = -1;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("invalid symbol '" + std::string(tok) + "' in word");
        if (!alphabet.contains(value))
            throw ParseError("symbol " + std::to_string(value) + " outside Z_" + std::to_string(alphabet.size()));
        out.push_back(static_cast<Symbol>(value));
        pos = comma + 1;
    }
    return Word(std::move(out), alphabet);
}

std::string Word::to_string() const {
    std::string s;
    if (q() <= 10) {
        s.reserve(symbols_.size());
        for (Symbol v : symbols_) s.push_back(static_cast<char>('0' + v));
        return s;
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(symbols_[i]);
    }
    return s;
}

std::strong_ordering Word::operator<=>(const Word& other) const {
    if (auto c = alphabet_ <=> other.alphabet_; c != 0) return c;
    return std::lexicographical_compare_three_way(symbols_.begin(), symbols_.end(), other.symbols_.begin(),
                                                  other.symbols_.end());
}

std::vector<std::size_t> support(const Word& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) out.push_back(i + 1);
    return out;
}

std::size_t weight(const Word& w) {
    return static_cast<std::size_t>(std::count_if(w.symbols().begin(), w.symbols().end(), [](Symbol s) { return s != 0; }));
}

std::size_t hamming_distance(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet()) throw DomainError("hamming_distance: alphabet mismatch");
    if (a.size() != b.size()) throw DomainError("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

BigInt hamming_ball_volume(int q, std::int64_t n, std::int64_t t) {
    if (q < 2) throw DomainError("hamming_ball_volume: q must be >= 2");
    if (t < 0 || t > n) throw DomainError("hamming_ball_volume: need 0 <= t <= n");
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= t; ++i) sum += ipow(q - 1, i) * binomial(n, i);
    return sum;
}

BigInt insertion_ball_volume(int q, std::int64_t n, std::int64_t t) {
    if (q < 2) throw DomainError("insertion_ball_volume: q must be >= 2");
    if (t < 0 || n < 0) throw DomainError("insertion_ball_volume: need n, t >= 0");
    BigInt sum = 0;
    for (std::int64_t i = 0; i <= t; ++i) sum += ipow(q, i) * binomial(n + i, i);
    return sum;
}

}  // namespace levrecon
