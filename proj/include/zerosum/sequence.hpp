#pragma once

#include "zerosum/group.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace zerosum {

using Multiplicities = std::vector<std::uint32_t>;

/// A finite multiset over a group, stored as the multiplicity of every element.
class Sequence {
public:
    explicit Sequence(GroupSpec group);
    Sequence(GroupSpec group, Multiplicities mult);

    /// g^k
    static Sequence power(const GroupSpec& group, Element g, std::uint32_t k);
    /// g_1^{k_1} g_2^{k_2} ...
    static Sequence of(const GroupSpec& group, std::initializer_list<std::pair<Element, std::uint32_t>> atoms);

    const GroupSpec& group() const noexcept { return group_; }
    std::span<const std::uint32_t> multiplicities() const noexcept { return mult_; }
    std::uint32_t multiplicity(Element g) const;
    std::size_t length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    ElementSet support() const;
    std::size_t support_size() const noexcept;
    /// The terms in index order, each element repeated by its multiplicity.
    std::vector<Element> terms() const;

    Sequence& append(Element g, std::uint32_t k = 1);

    /// Concatenation S*T (pointwise multiplicity sum).
    friend Sequence operator*(const Sequence& s, const Sequence& t);
    friend bool operator==(const Sequence& a, const Sequence& b);
    /// Lexicographic on multiplicity vectors.
    friend bool operator<(const Sequence& a, const Sequence& b);

private:
    GroupSpec group_;
    Multiplicities mult_;
    std::size_t length_ = 0;
};

Element sigma(const Sequence& s);
std::uint32_t max_multiplicity(const Sequence& s);
bool divides(const Sequence& sub, const Sequence& s);
/// S * sub^{-1}; throws UsageError unless sub divides S.
Sequence remove(const Sequence& s, const Sequence& sub);
/// Image sequence f(s_1)...f(s_r), with f valued in the same group.
Sequence push_map(const Sequence& s, const std::function<Element(Element)>& f);
/// alpha(S) for an automorphism alpha.
Sequence apply(const Automorphism& alpha, const Sequence& s);

/// C(n+L-1, L), saturating at UINT64_MAX.
std::uint64_t multiset_count(std::uint64_t n, std::uint64_t length);

inline constexpr std::uint64_t default_multiset_budget = 20'000'000;

/**
 * Decides whether a multiplicity vector is the lexicographically minimal
 * member of its automorphism orbit, and counts its stabilizer.
 */
class OrbitCanonicalizer {
public:
    explicit OrbitCanonicalizer(const GroupSpec& g,
                                std::uint32_t max_order = default_automorphism_order_cap);
    explicit OrbitCanonicalizer(std::vector<Automorphism> auts);

    std::size_t group_size() const noexcept { return inverse_.size(); }
    const std::vector<Automorphism>& automorphisms() const noexcept { return auts_; }

    /// True iff mult <= alpha(mult) lexicographically for every automorphism.
    /// When canonical, the stabilizer size is stored so that |orbit| = |Aut| / stabilizer.
    bool is_canonical(std::span<const std::uint32_t> mult, std::size_t* stabilizer = nullptr) const;

    Multiplicities canonical_form(std::span<const std::uint32_t> mult) const;

private:
    std::vector<Automorphism> auts_;
    std::vector<std::vector<std::uint32_t>> inverse_;
};

struct EnumerationOptions {
    bool up_to_automorphism = false;
    std::uint64_t budget = default_multiset_budget;
};

/**
 * Streams every multiplicity vector of total `length` over n slots, with an
 * optional fixed prefix (slots [0, prefix.size()) pinned). Order is reverse
 * lexicographic: L0...0 first, 0...0L last.
 */
class MultisetCursor {
public:
    MultisetCursor(std::uint32_t slots, std::uint32_t length, std::span<const std::uint32_t> prefix = {});

    /// Advance to the next vector; the first call yields the first one.
    bool next();
    std::span<const std::uint32_t> current() const noexcept { return mult_; }

private:
    Multiplicities mult_;
    std::size_t fixed_;
    std::uint32_t free_total_;
    bool started_ = false;
    bool done_ = false;
};

/// Pull-style stream of Sequence values; see enumerate_multisets.
class MultisetStream {
public:
    MultisetStream(GroupSpec g, std::uint32_t length, EnumerationOptions options);

    /// Next multiset (or orbit representative when deduplicating), empty at the end.
    std::optional<Sequence> next();

    std::uint64_t scanned() const noexcept { return scanned_; }

private:
    GroupSpec group_;
    MultisetCursor cursor_;
    std::optional<OrbitCanonicalizer> canon_;
    std::uint64_t scanned_ = 0;
};

/// Throws BudgetExceeded when C(n+L-1, L) exceeds options.budget.
MultisetStream enumerate_multisets(const GroupSpec& g, std::uint32_t length, EnumerationOptions options = {});

} // namespace zerosum
