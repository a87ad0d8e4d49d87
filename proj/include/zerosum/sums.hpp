#pragma once

#include "zerosum/sequence.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace zerosum {

/**
 * Reusable bounded-multiplicity DP for Sigma_l(S), all l at once.
 *
 * Row l is the bit-vector of sums of length-l subsequences. Each copy of a
 * support element g shifts every row l into row l+1 by translation with g,
 * so multiplicity m costs m passes. One engine per worker thread.
 */
class SumsEngine {
public:
    explicit SumsEngine(GroupSpec g);

    void compute(std::span<const std::uint32_t> mult);
    void compute(const Sequence& s) { compute(s.multiplicities()); }

    const GroupSpec& group() const noexcept { return group_; }
    std::size_t length() const noexcept { return length_; }

    bool row_contains(std::size_t l, Element x) const noexcept
    {
        const std::uint64_t* row = row_ptr(l);
        return ((row[x.index >> 6] >> (x.index & 63)) & 1U) != 0;
    }
    std::size_t row_size(std::size_t l) const noexcept;
    ElementSet row(std::size_t l) const;

    /// Nontrivial zero-sum lengths {l >= 1 : 0 in Sigma_l}.
    std::vector<std::size_t> zero_lengths() const;

    /// Row m == sigma - row(|S| - m) for every m.
    bool complement_identity_holds(Element sigma) const;

private:
    const std::uint64_t* row_ptr(std::size_t l) const noexcept { return rows_.data() + l * words_; }
    std::uint64_t* row_ptr(std::size_t l) noexcept { return rows_.data() + l * words_; }
    void shift_into(const std::uint64_t* src, std::uint64_t* dst, std::uint32_t g);
    const std::vector<std::uint32_t>& translation(std::uint32_t g);

    GroupSpec group_;
    std::size_t words_;
    bool rotate_ = false; // single cyclic factor fitting in one word
    std::uint64_t mask_ = 0;
    std::vector<std::vector<std::uint32_t>> translations_;
    std::vector<std::uint64_t> rows_;
    std::size_t length_ = 0;
};

/// The table l -> Sigma_l(S), l in [0, |S|]; row 0 is {0}.
class SumsByLength {
public:
    SumsByLength(GroupSpec g, std::vector<ElementSet> rows, Element sigma);

    const GroupSpec& group() const noexcept { return group_; }
    std::size_t max_length() const noexcept { return rows_.size() - 1; }
    const ElementSet& row(std::size_t l) const { return rows_.at(l); }
    Element sigma() const noexcept { return sigma_; }

    /// Union of rows lo..hi; requires 1 <= lo <= hi <= |S|.
    ElementSet window(std::size_t lo, std::size_t hi) const;
    /// Sigma(S): union of all nontrivial rows (empty for the empty sequence).
    ElementSet all_sums() const;

    bool complement_identity_holds() const;

private:
    GroupSpec group_;
    std::vector<ElementSet> rows_;
    Element sigma_;
};

struct ZeroSumProfile {
    std::vector<std::size_t> lengths;
    std::optional<std::size_t> unique_r;
};

SumsByLength sums_by_length(const Sequence& s);
ZeroSumProfile zero_sum_profile(const Sequence& s);
ZeroSumProfile zero_sum_profile(const SumsByLength& table);
ZeroSumProfile profile_from_lengths(std::vector<std::size_t> lengths);

ElementSet sigma_window(const Sequence& s, std::size_t lo, std::size_t hi);

inline constexpr std::size_t default_brute_force_terms = 24;

/// Sigma_l(S) by explicit enumeration of all 2^|S| term subsets.
ElementSet brute_force_sums(const Sequence& s, std::size_t l, std::size_t max_terms = default_brute_force_terms);
/// Every row at once by the same enumeration.
std::vector<ElementSet> brute_force_table(const Sequence& s, std::size_t max_terms = default_brute_force_terms);

/**
 * For S with unique zero-sum length r, the two padded-sequence identities:
 *   Sigma_{<=r-1}(S) = Sigma_{r-1}(0^{r-2} S), not containing 0          (r >= 2)
 *   Sigma_{>=r+1}(S) = Sigma_{|S|}(0^{|S|-r-1} S)
 *                    = sigma(S) - Sigma_{|S|-r-1}(0^{|S|-r-1} S), not containing 0   (r <= |S|-1)
 */
struct PaddingCheck {
    bool lower_applicable = false;
    bool lower_holds = true;
    bool upper_applicable = false;
    bool upper_holds = true;

    bool holds() const noexcept { return lower_holds && upper_holds; }
};

PaddingCheck check_padding_identities(const Sequence& s, std::size_t r);

} // namespace zerosum
