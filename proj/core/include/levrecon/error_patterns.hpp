#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "levrecon/bigint.hpp"
#include "levrecon/rng.hpp"
#include "levrecon/words.hpp"

namespace levrecon {

enum class CountMode { Exactly, AtMost };

/// Binary mask d of length n; applying it deletes x_i wherever d_i = 1.
class DeletionVector {
public:
    DeletionVector() = default;
    explicit DeletionVector(std::vector<std::uint8_t> mask);
    static DeletionVector none(std::size_t n) { return DeletionVector(std::vector<std::uint8_t>(n, 0)); }
    static DeletionVector parse(std::string_view text);

    std::size_t size() const noexcept { return mask_.size(); }
    std::size_t weight() const noexcept;
    bool deletes(std::size_t index0) const { return mask_[index0] != 0; }
    std::span<const std::uint8_t> mask() const noexcept { return mask_; }
    std::string to_string() const;

    auto operator<=>(const DeletionVector&) const = default;

private:
    std::vector<std::uint8_t> mask_;
};

/// n+1 (possibly empty) words; part i is inserted before original symbol i
/// (0-based), part n after the last symbol.
class InsertionVector {
public:
    InsertionVector() = default;
    explicit InsertionVector(std::vector<std::vector<Symbol>> parts);
    static InsertionVector none(std::size_t n) { return InsertionVector(std::vector<std::vector<Symbol>>(n + 1)); }

    std::size_t gaps() const noexcept { return parts_.size(); }
    std::size_t total() const noexcept;
    const std::vector<std::vector<Symbol>>& parts() const noexcept { return parts_; }

    auto operator<=>(const InsertionVector&) const = default;

private:
    std::vector<std::vector<Symbol>> parts_;
};

/// Position (1-based, original coordinate) -> replacement symbol.
class SubstitutionPattern {
public:
    SubstitutionPattern() = default;
    explicit SubstitutionPattern(std::map<std::size_t, Symbol> entries) : entries_(std::move(entries)) {}
    SubstitutionPattern(std::initializer_list<std::pair<const std::size_t, Symbol>> entries) : entries_(entries) {}

    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<std::size_t, Symbol>& entries() const noexcept { return entries_; }

    auto operator<=>(const SubstitutionPattern&) const = default;

private:
    std::map<std::size_t, Symbol> entries_;
};

/// One channel event.  Deletions and substitutions address original
/// coordinates and never overlap; inserted symbols are never touched.
struct ErrorPattern {
    InsertionVector ins;
    DeletionVector del;
    SubstitutionPattern sub;

    static ErrorPattern identity(std::size_t n) { return {InsertionVector::none(n), DeletionVector::none(n), {}}; }

    auto operator<=>(const ErrorPattern&) const = default;
};

Word apply_deletion(const Word& x, const DeletionVector& d);
Word apply_insertion(const Word& x, const InsertionVector& v);

/// Checks every ErrorPattern invariant against x; throws DomainError.
void validate_pattern(const Word& x, const ErrorPattern& p);

/// Substitute, then delete, then insert (all in original coordinates).
Word apply_pattern(const Word& x, const ErrorPattern& p);

/// Visits each deletion vector of weight t (Exactly) or <= t (AtMost) once,
/// ordered by weight then lexicographically by support.
void for_each_deletion_vector(std::size_t n, std::size_t t, CountMode mode,
                              const std::function<void(const DeletionVector&)>& visit);
std::vector<DeletionVector> enumerate_deletion_vectors(std::size_t n, std::size_t t, CountMode mode);

/// Visits each insertion vector of total length t (Exactly) or <= t (AtMost).
void for_each_insertion_vector(std::size_t n, int q, std::size_t t, CountMode mode,
                               const std::function<void(const InsertionVector&)>& visit);

struct ErrorBudgets {
    int substitutions = 0;
    int deletions = 0;
    int insertions = 0;

    int total_swing() const noexcept { return deletions + insertions + 2 * substitutions; }
    bool zero() const noexcept { return substitutions == 0 && deletions == 0 && insertions == 0; }
};

/// Draws error patterns uniformly from
///   {insertion vectors of total length <= t_i}
///     x {disjoint sets of j <= t_d deleted and i <= t_s substituted positions,
///        with one of q-1 replacement symbols per substitution}.
/// The insertion length and the (i, j) split are drawn with exact integer
/// weights; positions are then unranked uniformly.
class PatternSampler {
public:
    PatternSampler(std::size_t n, int q, ErrorBudgets budgets);

    std::size_t length() const noexcept { return n_; }
    int q() const noexcept { return q_; }
    const ErrorBudgets& budgets() const noexcept { return budgets_; }
    BigInt space_size() const;

    ErrorPattern sample(const Word& x, Rng& rng) const;

    /// Samples a pattern and writes its output for x into out (reused buffer).
    void transmit(std::span<const Symbol> x, Rng& rng, std::vector<Symbol>& out) const;

private:
    struct Draw {
        std::vector<std::uint32_t> ins_boxes;  // nondecreasing gap indices in [0, n]
        std::vector<Symbol> ins_symbols;
        std::vector<std::uint32_t> del_positions;  // sorted, 0-based
        std::vector<std::uint32_t> sub_positions;  // sorted, 0-based
        std::vector<Symbol> sub_symbols;
    };

    class WeightTable {
    public:
        void build(const std::vector<BigInt>& weights);
        std::size_t draw(Rng& rng) const;
        const BigInt& total() const noexcept { return total_; }

    private:
        std::vector<std::uint64_t> exact_cumulative_;
        std::vector<long double> approx_cumulative_;
        bool exact_ = true;
        BigInt total_;
    };

    void draw(std::span<const Symbol> x, Rng& rng, Draw& d) const;

    std::size_t n_;
    int q_;
    ErrorBudgets budgets_;
    WeightTable insertion_lengths_;
    WeightTable edit_splits_;
    std::vector<std::pair<int, int>> split_of_;  // index -> (substitutions, deletions)
};

/// Uniformly sampled pattern for x under the given budgets; deterministic in seed.
ErrorPattern sample_pattern(const Word& x, ErrorBudgets budgets, std::uint64_t seed);

}  // namespace levrecon
