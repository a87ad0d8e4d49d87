#include "zerosum/error.hpp"
#include "zerosum/sequence.hpp"

#include "groups.hpp"
#include "naive_oracle.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace zerosum;

namespace {

Sequence seq(const GroupSpec& g, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> atoms)
{
    Sequence s(g);
    for (auto [e, k] : atoms)
        s.append(Element{e}, k);
    return s;
}

std::set<Multiplicities> collect(MultisetStream stream)
{
    std::set<Multiplicities> out;
    while (auto s = stream.next())
        out.emplace(s->multiplicities().begin(), s->multiplicities().end());
    return out;
}

} // namespace

TEST_CASE("sigma examples")
{
    const auto c5 = GroupSpec::cyclic(5);
    CHECK(sigma(seq(c5, {{1, 4}, {2, 1}})) == Element{1});
    CHECK(sigma(Sequence(c5)) == c5.zero());
    const GroupSpec c2c4({2, 4});
    CHECK(sigma(Sequence::power(c2c4, c2c4.element({1, 1}), 2)) == c2c4.element({0, 2}));
}

TEST_CASE("max_multiplicity examples")
{
    const auto c5 = GroupSpec::cyclic(5);
    CHECK(max_multiplicity(seq(c5, {{1, 4}, {2, 1}})) == 4);
    CHECK(max_multiplicity(Sequence(c5)) == 0);
    const auto c4 = GroupSpec::cyclic(4);
    CHECK(max_multiplicity(seq(c4, {{1, 2}, {2, 2}, {3, 1}})) == 2);
}

TEST_CASE("divides and remove examples")
{
    const auto c5 = GroupSpec::cyclic(5);
    const auto s = seq(c5, {{1, 4}, {2, 1}});
    CHECK(divides(seq(c5, {{1, 2}, {2, 1}}), s));
    CHECK(remove(s, seq(c5, {{1, 2}})) == seq(c5, {{1, 2}, {2, 1}}));
    CHECK_FALSE(divides(seq(c5, {{1, 5}}), s));
    CHECK_THROWS_AS(remove(s, seq(c5, {{1, 5}})), UsageError);
    CHECK_THROWS_AS(remove(s, seq(c5, {{3, 1}})), UsageError);
}

TEST_CASE("push_map examples")
{
    const auto c4 = GroupSpec::cyclic(4);
    const auto h = Subgroup::verify(c4, ElementSet(4, {0, 2}));
    const auto p = cosets(c4, h);
    const auto s = seq(c4, {{1, 3}, {3, 1}});
    const auto image = push_map(s, [&](Element x) { return p.representative[p.label[x.index]]; });
    CHECK(image.multiplicity(Element{1}) == 4);
    CHECK(image.length() == 4);

    CHECK(push_map(s, [](Element x) { return x; }) == s);

    const auto c6 = GroupSpec::cyclic(6);
    const auto doubled = push_map(seq(c6, {{1, 1}, {4, 1}}), [&](Element x) { return c6.scalar_mul(2, x); });
    CHECK(doubled == seq(c6, {{2, 2}}));
}

TEST_CASE("sequence literals and accessors")
{
    const auto c5 = GroupSpec::cyclic(5);
    const auto s = Sequence::of(c5, {{Element{1}, 4}, {Element{2}, 1}});
    CHECK(s.length() == 5);
    CHECK(s.support_size() == 2);
    CHECK(s.support() == ElementSet(5, {1, 2}));
    CHECK(s.terms() == std::vector<Element>{Element{1}, Element{1}, Element{1}, Element{1}, Element{2}});
    CHECK_THROWS_AS(Sequence(c5, Multiplicities{1, 2}), UsageError);
    CHECK_THROWS_AS(Sequence::power(c5, Element{5}, 1), UsageError);
}

TEST_CASE("enumerate_multisets examples")
{
    const auto c2 = GroupSpec::cyclic(2);
    const auto two = collect(enumerate_multisets(c2, 2));
    CHECK(two == std::set<Multiplicities>{{2, 0}, {1, 1}, {0, 2}});

    const auto c5 = GroupSpec::cyclic(5);
    auto stream = enumerate_multisets(c5, 5);
    const auto all = collect(std::move(stream));
    CHECK(all.size() == 126);

    const auto reps = collect(enumerate_multisets(c5, 5, {.up_to_automorphism = true}));
    CHECK(reps.size() < 126);
    std::set<Multiplicities> expanded;
    for (const auto& m : reps)
        for (const auto& a : automorphisms(c5)) {
            const auto img = apply(a, Sequence(c5, m));
            expanded.emplace(img.multiplicities().begin(), img.multiplicities().end());
        }
    CHECK(expanded == all);
}

TEST_CASE("enumeration budget")
{
    CHECK(multiset_count(5, 5) == 126);
    CHECK(multiset_count(12, 12) == 1352078);
    CHECK(multiset_count(1, 0) == 1);
    CHECK(multiset_count(1000, 1000) == UINT64_MAX);
    CHECK_THROWS_AS(enumerate_multisets(GroupSpec::cyclic(16), 16, {.budget = 1000}), BudgetExceeded);
}

TEST_CASE("cursor with fixed prefix")
{
    const Multiplicities prefix{1, 0};
    MultisetCursor c(4, 3, prefix);
    std::set<Multiplicities> seen;
    while (c.next()) {
        CHECK(c.current()[0] == 1);
        CHECK(c.current()[1] == 0);
        seen.emplace(c.current().begin(), c.current().end());
    }
    CHECK(seen.size() == 3); // two free slots holding 2
}

TEST_CASE("enumeration matches naive recursion")
{
    for (const auto& g : testing_groups::up_to(6))
        for (std::uint32_t l = 0; l <= g.order(); ++l) {
            const auto naive_all = naive::all_multisets(g.order(), l);
            const auto got = collect(enumerate_multisets(g, l));
            CHECK(got == std::set<Multiplicities>(naive_all.begin(), naive_all.end()));
            CHECK(got.size() == naive_all.size());
        }
}

TEST_CASE("dedup re-expands to the full enumeration, exhaustive up to order 8")
{
    for (const auto& g : testing_groups::up_to(8)) {
        const OrbitCanonicalizer canon(g);
        for (std::uint32_t l = 0; l <= g.order(); ++l) {
            const auto all = collect(enumerate_multisets(g, l));
            const auto reps = collect(enumerate_multisets(g, l, {.up_to_automorphism = true}));
            std::set<Multiplicities> expanded;
            std::uint64_t weighted = 0;
            for (const auto& m : reps) {
                std::size_t stab = 0;
                REQUIRE(canon.is_canonical(m, &stab));
                weighted += canon.group_size() / stab;
                std::set<Multiplicities> orbit;
                for (const auto& a : canon.automorphisms()) {
                    const auto img = apply(a, Sequence(g, m));
                    orbit.emplace(img.multiplicities().begin(), img.multiplicities().end());
                }
                CHECK(orbit.size() == canon.group_size() / stab);
                CHECK(*orbit.begin() == m);
                expanded.insert(orbit.begin(), orbit.end());
            }
            CHECK_MESSAGE(expanded == all, g.name() << " L=" << l);
            CHECK(weighted == all.size());
        }
    }
}

TEST_CASE("sequence algebra on random instances")
{
    std::mt19937_64 rng(3);
    for (const auto& g : testing_groups::up_to(16)) {
        for (int t = 0; t < 30; ++t) {
            const auto s = naive::random_sequence(g, rng() % 12, rng);
            const auto u = naive::random_sequence(g, rng() % 12, rng);
            const auto st = s * u;
            CHECK(sigma(st) == g.add(sigma(s), sigma(u)));
            CHECK(st.length() == s.length() + u.length());
            CHECK(divides(u, st));
            CHECK(remove(st, u) * u == st);
            CHECK(remove(st, u) == s);

            const auto k = static_cast<long long>(rng() % 7);
            const auto mapped = push_map(s, [&](Element x) { return g.scalar_mul(k, x); });
            CHECK(mapped.length() == s.length());
            CHECK(sigma(mapped) == g.scalar_mul(k, sigma(s)));
            const auto collapsed = push_map(s, [&](Element) { return g.zero(); });
            CHECK(collapsed.length() == s.length());
        }
    }
}

TEST_CASE("canonical form is orbit invariant")
{
    std::mt19937_64 rng(5);
    const GroupSpec g({2, 4});
    const OrbitCanonicalizer canon(g);
    for (int t = 0; t < 100; ++t) {
        const auto s = naive::random_sequence(g, 8, rng);
        const auto c = canon.canonical_form(s.multiplicities());
        CHECK(canon.is_canonical(c));
        for (const auto& a : canon.automorphisms())
            CHECK(canon.canonical_form(apply(a, s).multiplicities()) == c);
    }
}
