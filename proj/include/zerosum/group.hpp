#pragma once

#include "zerosum/element_set.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace zerosum {

/**
 * A finite abelian group C_{orders[0]} x ... x C_{orders[k-1]}.
 *
 * Factor orders are kept exactly as given (C2xC4 and C4xC2 are distinct specs
 * with isomorphic behaviour). Elements are canonical indices: the last factor
 * is the least significant digit, so index order is lexicographic order on
 * coordinate tuples. The empty factor list is the trivial group.
 *
 * Copies share one immutable table block and are safe to use from any thread.
 */
class GroupSpec {
public:
    /// Largest group order accepted; keeps bit-vector rows and tables small.
    static constexpr std::uint32_t max_order = 1U << 20;

    GroupSpec();
    explicit GroupSpec(std::vector<std::uint32_t> orders);

    static GroupSpec cyclic(std::uint32_t n) { return GroupSpec({n}); }

    std::span<const std::uint32_t> orders() const noexcept;
    std::uint32_t order() const noexcept;
    std::size_t rank() const noexcept { return orders().size(); }

    bool contains(Element e) const noexcept { return e.index < order(); }
    Element zero() const noexcept { return Element{0}; }

    Element element(std::uint32_t index) const;
    Element element(std::span<const std::uint32_t> coords) const;
    Element element(std::initializer_list<std::uint32_t> coords) const
    {
        return element(std::span<const std::uint32_t>(coords.begin(), coords.size()));
    }
    std::vector<std::uint32_t> coords(Element e) const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    Element neg(Element a) const;
    Element scalar_mul(long long k, Element a) const;
    std::uint32_t order_of(Element a) const;

    std::vector<Element> elements() const;

    /// "C12", "C2xC4"; the trivial group renders as "C1".
    std::string name() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b);

    struct Tables; // opaque

private:
    void check(Element e) const;

    std::shared_ptr<const Tables> tables_;
};

/// A set of elements closed under addition and negation; construct via `verify` or a builder.
class Subgroup {
public:
    static Subgroup verify(const GroupSpec& g, ElementSet members, std::vector<Element> generators = {});

    const ElementSet& members() const noexcept { return members_; }
    std::span<const Element> generators() const noexcept { return generators_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(Element e) const noexcept { return members_.contains(e); }

private:
    Subgroup(ElementSet members, std::vector<Element> generators)
        : members_(std::move(members)), generators_(std::move(generators))
    {
    }

    ElementSet members_;
    std::vector<Element> generators_;
};

bool is_subgroup(const GroupSpec& g, const ElementSet& s);

ElementSet translate(const GroupSpec& g, const ElementSet& a, Element by);
ElementSet sumset(const GroupSpec& g, const ElementSet& a, const ElementSet& b);
/// {s - a : a in A}
ElementSet reflect(const GroupSpec& g, const ElementSet& a, Element s);
std::uint64_t rep_count(const GroupSpec& g, const ElementSet& a, const ElementSet& b, Element x);
/// r_{A,B}(x) for every x, indexed by element.
std::vector<std::uint64_t> rep_counts(const GroupSpec& g, const ElementSet& a, const ElementSet& b);

Subgroup cyclic_subgroup(const GroupSpec& g, Element a);
Subgroup stabilizer(const GroupSpec& g, const ElementSet& a);

struct CosetPartition {
    std::vector<std::uint32_t> label;   // label[x] = coset of x, numbered by smallest member
    std::vector<Element> representative; // smallest member of each coset
    std::size_t coset_size = 0;

    std::size_t count() const noexcept { return representative.size(); }
};

CosetPartition cosets(const GroupSpec& g, const Subgroup& h);

/// A group automorphism as an index permutation, image[x] = alpha(x).
struct Automorphism {
    std::vector<std::uint32_t> image;

    Element operator()(Element e) const { return Element{image[e.index]}; }
    friend bool operator==(const Automorphism&, const Automorphism&) = default;
    friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

inline constexpr std::uint32_t default_automorphism_order_cap = 16;

/// Every automorphism, by brute force over images of the coordinate basis.
/// Throws BudgetExceeded when |G| > max_order. Sorted, identity first.
std::vector<Automorphism> automorphisms(const GroupSpec& g,
                                        std::uint32_t max_order = default_automorphism_order_cap);

} // namespace zerosum

namespace zerosum {

/// Elements of order |G|.
std::vector<Element> group_generators(const GroupSpec& g);
bool is_cyclic(const GroupSpec& g);

} // namespace zerosum
