#include "zerosum/error.hpp"
#include "zerosum/group.hpp"

#include "groups.hpp"
#include "naive_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace zerosum;

namespace {

ElementSet set_of(const GroupSpec& g, std::initializer_list<std::uint32_t> xs) { return ElementSet(g.order(), xs); }

std::vector<GroupSpec> small_groups()
{
    std::vector<GroupSpec> out;
    for (std::vector<std::uint32_t> orders : std::vector<std::vector<std::uint32_t>>{
             {2}, {5}, {12}, {64}, {2, 4}, {4, 2}, {3, 3}, {2, 2, 2}, {8, 8}, {4, 4, 4}, {2, 32}, {2, 2, 2, 2, 2, 2}})
        out.emplace_back(orders);
    return out;
}

} // namespace

TEST_CASE("add examples")
{
    const auto c6 = GroupSpec::cyclic(6);
    CHECK(c6.add(Element{4}, Element{5}) == Element{3});

    const GroupSpec c2c4({2, 4});
    CHECK(c2c4.add(c2c4.element({1, 3}), c2c4.element({1, 2})) == c2c4.element({0, 1}));

    for (const auto& g : small_groups())
        for (auto a : g.elements())
            CHECK(g.add(a, g.zero()) == a);
}

TEST_CASE("invalid elements are rejected")
{
    const auto c5 = GroupSpec::cyclic(5);
    CHECK_THROWS_AS(c5.add(Element{5}, Element{0}), UsageError);
    CHECK_THROWS_AS(c5.element(7), UsageError);
    const GroupSpec c2c4({2, 4});
    CHECK_THROWS_AS(c2c4.element({2, 0}), UsageError);
    CHECK_THROWS_AS(c2c4.element({1}), UsageError);
    CHECK_THROWS_AS(GroupSpec({0}), UsageError);
    CHECK_THROWS_AS(GroupSpec({1}), UsageError);
}

TEST_CASE("coordinates round trip, last factor least significant")
{
    const GroupSpec g({2, 4});
    CHECK(g.element({1, 0}).index == 4);
    CHECK(g.element({0, 3}).index == 3);
    for (auto e : g.elements())
        CHECK(g.element(g.coords(e)) == e);
}

TEST_CASE("neg and scalar_mul examples")
{
    const auto c5 = GroupSpec::cyclic(5);
    CHECK(c5.scalar_mul(3, Element{1}) == Element{3});
    CHECK(c5.neg(Element{2}) == Element{3});
    CHECK(c5.scalar_mul(-1, Element{2}) == c5.neg(Element{2}));
    CHECK(c5.scalar_mul(0, Element{4}) == c5.zero());
    CHECK(c5.scalar_mul(-7, Element{1}) == Element{3});

    const GroupSpec c2c4({2, 4});
    CHECK(c2c4.scalar_mul(2, c2c4.element({1, 1})) == c2c4.element({0, 2}));
}

TEST_CASE("order_of examples")
{
    CHECK(GroupSpec::cyclic(12).order_of(Element{8}) == 3);
    const GroupSpec c2c4({2, 4});
    CHECK(c2c4.order_of(c2c4.element({1, 1})) == 4);
    for (const auto& g : small_groups())
        CHECK(g.order_of(g.zero()) == 1);
}

TEST_CASE("trivial group")
{
    const GroupSpec g;
    CHECK(g.order() == 1);
    CHECK(g.name() == "C1");
    CHECK(g.add(g.zero(), g.zero()) == g.zero());
    CHECK(automorphisms(g).size() == 1);
}

TEST_CASE("cyclic_subgroup examples")
{
    const auto c8 = GroupSpec::cyclic(8);
    CHECK(cyclic_subgroup(c8, Element{2}).members() == set_of(c8, {0, 2, 4, 6}));

    const GroupSpec c2c4({2, 4});
    const auto h = cyclic_subgroup(c2c4, c2c4.element({0, 1}));
    CHECK(h.members() == set_of(c2c4, {0, 1, 2, 3}));

    for (const auto& g : small_groups())
        CHECK(cyclic_subgroup(g, g.zero()).members() == set_of(g, {0}));
}

TEST_CASE("sumset examples")
{
    const auto c5 = GroupSpec::cyclic(5);
    CHECK(sumset(c5, set_of(c5, {0, 1}), set_of(c5, {0, 1})) == set_of(c5, {0, 1, 2}));
    const auto c4 = GroupSpec::cyclic(4);
    CHECK(sumset(c4, set_of(c4, {0, 2}), set_of(c4, {0, 2})) == set_of(c4, {0, 2}));
    const auto c3 = GroupSpec::cyclic(3);
    CHECK(sumset(c3, ElementSet::full(3), ElementSet::full(3)) == ElementSet::full(3));

    CHECK_THROWS_AS(sumset(c5, ElementSet(5), set_of(c5, {1})), UsageError);
    CHECK_THROWS_AS(sumset(c5, set_of(c5, {1}), ElementSet(5)), UsageError);
}

TEST_CASE("rep_count examples")
{
    const auto c3 = GroupSpec::cyclic(3);
    for (auto x : c3.elements())
        CHECK(rep_count(c3, ElementSet::full(3), ElementSet::full(3), x) == 3);
    const auto c5 = GroupSpec::cyclic(5);
    const auto a = set_of(c5, {0, 1});
    CHECK(rep_count(c5, a, a, Element{1}) == 2);
    CHECK(rep_count(c5, a, a, Element{2}) == 1);
    CHECK(rep_count(c5, a, a, Element{4}) == 0);
}

TEST_CASE("stabilizer examples")
{
    const auto c4 = GroupSpec::cyclic(4);
    CHECK(stabilizer(c4, set_of(c4, {0, 2})).members() == set_of(c4, {0, 2}));
    const auto c5 = GroupSpec::cyclic(5);
    CHECK(stabilizer(c5, set_of(c5, {0, 3, 4})).members() == set_of(c5, {0}));
    for (const auto& g : small_groups())
        CHECK(stabilizer(g, ElementSet::full(g.order())).members() == ElementSet::full(g.order()));
}

TEST_CASE("cosets examples")
{
    const auto c4 = GroupSpec::cyclic(4);
    const auto p = cosets(c4, Subgroup::verify(c4, set_of(c4, {0, 2})));
    CHECK(p.count() == 2);
    CHECK(p.label[0] == p.label[2]);
    CHECK(p.label[1] == p.label[3]);
    CHECK(p.label[0] != p.label[1]);

    const auto c6 = GroupSpec::cyclic(6);
    const auto q = cosets(c6, Subgroup::verify(c6, set_of(c6, {0, 3})));
    CHECK(q.count() == 3);
    CHECK(q.coset_size == 2);

    const auto r = cosets(c6, cyclic_subgroup(c6, c6.zero()));
    CHECK(r.count() == 6);
    CHECK(r.coset_size == 1);
}

TEST_CASE("non-subgroups are rejected")
{
    const auto c4 = GroupSpec::cyclic(4);
    CHECK_THROWS_AS(Subgroup::verify(c4, set_of(c4, {0, 1})), UsageError);
    CHECK_THROWS_AS(Subgroup::verify(c4, set_of(c4, {2})), UsageError);
    CHECK_FALSE(is_subgroup(c4, set_of(c4, {0, 1, 2})));
    CHECK(is_subgroup(c4, set_of(c4, {0, 2})));
}

TEST_CASE("automorphism counts")
{
    CHECK(automorphisms(GroupSpec::cyclic(5)).size() == 4);
    CHECK(automorphisms(GroupSpec({2, 2})).size() == 6);
    CHECK(automorphisms(GroupSpec::cyclic(2)).size() == 1);
    CHECK(automorphisms(GroupSpec::cyclic(12)).size() == 4);
    CHECK(automorphisms(GroupSpec({2, 4})).size() == 8);
    CHECK(automorphisms(GroupSpec({3, 3})).size() == 48);
    CHECK(automorphisms(GroupSpec({2, 2, 2})).size() == 168);
    CHECK(automorphisms(GroupSpec({2, 2, 2, 2})).size() == 20160);
    CHECK_THROWS_AS(automorphisms(GroupSpec::cyclic(17)), BudgetExceeded);
}

TEST_CASE("cyclic automorphisms are the unit multiplications")
{
    for (std::uint32_t n = 2; n <= 16; ++n) {
        const auto g = GroupSpec::cyclic(n);
        std::set<std::vector<std::uint32_t>> expected;
        for (std::uint32_t u = 1; u < n; ++u) {
            if (std::gcd(u, n) != 1)
                continue;
            std::vector<std::uint32_t> img(n);
            for (std::uint32_t x = 0; x < n; ++x)
                img[x] = (u * x) % n;
            expected.insert(img);
        }
        std::set<std::vector<std::uint32_t>> got;
        for (const auto& a : automorphisms(g))
            got.insert(a.image);
        CHECK(got == expected);
    }
}

TEST_CASE("group axioms against coordinate arithmetic")
{
    auto groups = testing_groups::up_to(16);
    for (const auto& g : small_groups())
        groups.push_back(g);
    for (const auto& g : groups) {
        const naive::Group ref(g);
        const auto n = g.order();
        for (std::uint32_t a = 0; a < n; ++a) {
            CHECK(g.add(Element{a}, g.neg(Element{a})) == g.zero());
            CHECK(n % g.order_of(Element{a}) == 0);
            CHECK(g.order_of(Element{a}) == ref.order_of(ref.decode(a)));
            for (std::uint32_t b = 0; b < n; ++b)
                REQUIRE(g.add(Element{a}, Element{b}).index == ref.encode(ref.add(ref.decode(a), ref.decode(b))));
        }
    }
}

TEST_CASE("associativity exhaustive up to order 64")
{
    for (const auto& g : small_groups()) {
        const auto n = g.order();
        bool ok = true;
        for (std::uint32_t a = 0; a < n && ok; ++a)
            for (std::uint32_t b = 0; b < n && ok; ++b) {
                const auto ab = g.add(Element{a}, Element{b});
                for (std::uint32_t c = 0; c < n; ++c)
                    if (g.add(ab, Element{c}) != g.add(Element{a}, g.add(Element{b}, Element{c}))) {
                        ok = false;
                        break;
                    }
            }
        CHECK_MESSAGE(ok, g.name());
    }
}

namespace {

void check_stabilizer_property(const GroupSpec& g, const ElementSet& a)
{
    const auto h = stabilizer(g, a);
    REQUIRE(is_subgroup(g, h.members()));
    // brute force: g + A == A
    for (auto x : g.elements())
        REQUIRE(h.contains(x) == (translate(g, a, x) == a));
    const auto p = cosets(g, h);
    std::vector<int> hit(p.count(), -1);
    for (auto x : g.elements()) {
        const int in = a.contains(x) ? 1 : 0;
        auto& slot = hit[p.label[x.index]];
        REQUIRE((slot == -1 || slot == in));
        slot = in;
    }
}

} // namespace

TEST_CASE("stabilizer is a subgroup and A a union of its cosets, exhaustive up to order 8")
{
    for (const auto& g : testing_groups::up_to(8)) {
        const auto n = g.order();
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            ElementSet a(n);
            for (std::uint32_t x = 0; x < n; ++x)
                if ((mask >> x) & 1U)
                    a.insert(Element{x});
            check_stabilizer_property(g, a);
        }
    }
}

TEST_CASE("stabilizer property on random sets up to order 64")
{
    std::mt19937_64 rng(7);
    for (const auto& g : small_groups())
        for (int t = 0; t < 50; ++t) {
            auto a = naive::random_set(g.order(), rng);
            check_stabilizer_property(g, a);
            // unions of cosets of a random cyclic subgroup have nontrivial stabilizers
            const auto h = cyclic_subgroup(g, Element{static_cast<std::uint32_t>(rng() % g.order())});
            const auto padded = sumset(g, a, h.members());
            check_stabilizer_property(g, padded);
            CHECK(h.members().is_subset_of(stabilizer(g, padded).members()));
        }
}

TEST_CASE("sumset is commutative and associative on random triples")
{
    std::mt19937_64 rng(11);
    for (const auto& g : small_groups()) {
        const naive::Group ref(g);
        for (int t = 0; t < 40; ++t) {
            const auto a = naive::random_set(g.order(), rng);
            const auto b = naive::random_set(g.order(), rng);
            const auto c = naive::random_set(g.order(), rng);
            CHECK(sumset(g, a, b) == sumset(g, b, a));
            CHECK(sumset(g, sumset(g, a, b), c) == sumset(g, a, sumset(g, b, c)));
            std::set<std::uint32_t> expected;
            for (auto x : a.elements())
                for (auto y : b.elements())
                    expected.insert(ref.encode(ref.add(ref.decode(x.index), ref.decode(y.index))));
            CHECK(naive::as_indices(sumset(g, a, b)) == expected);
            const auto reps = rep_counts(g, a, b);
            std::uint64_t total = 0;
            for (auto r : reps)
                total += r;
            CHECK(total == a.size() * b.size());
        }
    }
}

TEST_CASE("automorphisms are additive bijections closed under composition")
{
    for (const auto& g : testing_groups::up_to(16)) {
        const auto auts = automorphisms(g);
        REQUIRE(!auts.empty());
        CHECK(auts.front().image == [&] {
            std::vector<std::uint32_t> id(g.order());
            for (std::uint32_t x = 0; x < g.order(); ++x)
                id[x] = x;
            return id;
        }());
        std::set<std::vector<std::uint32_t>> images;
        for (const auto& a : auts) {
            images.insert(a.image);
            CHECK(a(g.zero()) == g.zero());
            auto sorted = a.image;
            std::sort(sorted.begin(), sorted.end());
            for (std::uint32_t x = 0; x < g.order(); ++x)
                REQUIRE(sorted[x] == x);
            for (auto x : g.elements())
                for (auto y : g.elements())
                    REQUIRE(a(g.add(x, y)) == g.add(a(x), a(y)));
        }
        CHECK(images.size() == auts.size());
        auto composed_in_list = [&](const Automorphism& a, const Automorphism& b) {
            std::vector<std::uint32_t> comp(g.order());
            for (std::uint32_t x = 0; x < g.order(); ++x)
                comp[x] = a.image[b.image[x]];
            return images.count(comp) == 1;
        };
        if (auts.size() <= 200) {
            for (const auto& a : auts)
                for (const auto& b : auts)
                    REQUIRE(composed_in_list(a, b));
        } else {
            // |Aut(C2^4)| = 20160: sample pairs
            std::mt19937_64 rng(13);
            for (int t = 0; t < 20000; ++t)
                REQUIRE(composed_in_list(auts[rng() % auts.size()], auts[rng() % auts.size()]));
        }
    }
}

TEST_CASE("factor spelling is kept")
{
    const GroupSpec a({2, 4});
    const GroupSpec b({4, 2});
    CHECK_FALSE(a == b);
    CHECK(a.name() == "C2xC4");
    CHECK(b.name() == "C4xC2");
    CHECK(automorphisms(a).size() == automorphisms(b).size());
    CHECK(is_cyclic(GroupSpec({2, 3})));
    CHECK_FALSE(is_cyclic(GroupSpec({2, 2})));
    CHECK(group_generators(GroupSpec::cyclic(12)).size() == 4);
}
