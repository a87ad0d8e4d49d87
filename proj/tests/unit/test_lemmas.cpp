#include "zerosum/error.hpp"
#include "zerosum/lemmas.hpp"

#include "groups.hpp"
#include "naive_oracle.hpp"

#include <doctest.h>

using namespace zerosum;

TEST_CASE("lemma 31 examples")
{
    const auto c7 = GroupSpec::cyclic(7);
    const auto v = evaluate_lemma31(Sequence::power(c7, Element{1}, 3), Element{1});
    CHECK(v.hypothesis);
    CHECK(v.conclusion);

    const auto c5 = check_lemma31(GroupSpec::cyclic(5), 4);
    CHECK(c5.counterexample_count() == 0);
    CHECK(c5.passed());
    CHECK(c5.satisfying > 0);
    CHECK(c5.vacuous + c5.satisfying == c5.total);

    const auto c12 = check_lemma31(GroupSpec::cyclic(12), 6);
    CHECK(c12.counterexample_count() == 0);
    CHECK(c12.satisfying > 0);
    CHECK(c12.crosschecks > 0);
    CHECK(c12.crosscheck_failures == 0);
}

TEST_CASE("lemma 31 single instances")
{
    const auto c7 = GroupSpec::cyclic(7);
    // sigma matches but Sigma(R) escapes the progression
    const auto r = Sequence::of(c7, {{Element{2}, 1}, {Element{4}, 1}});
    const auto v = evaluate_lemma31(r, Element{3});
    CHECK_FALSE(v.hypothesis);
    CHECK_THROWS_AS(evaluate_lemma31(Sequence::power(c7, Element{1}, 7), Element{1}), UsageError);
    CHECK_THROWS_AS(evaluate_lemma31(Sequence(c7), Element{1}), UsageError);
}

TEST_CASE("lemma 31 sweep counts every admissible pair")
{
    const auto g = GroupSpec({2, 4});
    const auto rep = check_lemma31(g);
    std::uint64_t expected = 0;
    for (auto e : g.elements())
        for (std::uint32_t k = 1; k + 1 <= g.order_of(e); ++k)
            expected += multiset_count(g.order(), k);
    CHECK(rep.total == expected);
    CHECK(rep.passed());
    CHECK_THROWS_AS(check_lemma31(GroupSpec::cyclic(12), 0, 1000), BudgetExceeded);
}

TEST_CASE("lemma 32 examples")
{
    const auto v = evaluate_lemma32(5, Element{1}, Element{3}, 3);
    CHECK(v.hypothesis);
    CHECK(v.conclusion);

    const auto six = check_lemma32(6);
    CHECK(six.counterexample_count() == 0);
    CHECK(six.satisfying > 0);
    CHECK(six.vacuous + six.satisfying == six.total);

    // h = g: Sigma(g^2) = {g} u {2g} has the required shape and S = g^4 has unique r = 4,
    // so the instance is hypothesis-satisfying and S = g^3 h
    for (std::uint32_t l : {2U, 3U}) {
        const auto w = evaluate_lemma32(4, Element{1}, Element{1}, l);
        CHECK(w.hypothesis);
        CHECK(w.conclusion);
    }
    // h = 2g: Sigma((2g)^2) = {2g, 0} misses g
    CHECK_FALSE(evaluate_lemma32(4, Element{1}, Element{2}, 2).hypothesis);

    CHECK_THROWS_AS(evaluate_lemma32(6, Element{2}, Element{1}, 3), UsageError);
    CHECK_THROWS_AS(evaluate_lemma32(6, Element{1}, Element{1}, 2), UsageError);
}

TEST_CASE("lemma 32 up to 12")
{
    for (std::uint32_t n = 2; n <= 12; ++n) {
        const auto r = check_lemma32(n);
        CHECK_MESSAGE(r.passed(), n);
        CHECK(r.satisfying > 0);
    }
}

TEST_CASE("lemma 33 examples")
{
    const GroupSpec c2c4({2, 4});
    const auto v = evaluate_lemma33(c2c4, c2c4.element({0, 1}), c2c4.element({1, 1}), 5);
    CHECK(v.hypothesis);
    CHECK(v.conclusion);
    const auto s = Sequence::of(c2c4, {{c2c4.element({0, 1}), 5}, {c2c4.element({1, 1}), 3}});
    CHECK(naive::zero_lengths(s) == std::vector<std::size_t>{4});

    const auto c8 = check_lemma33(GroupSpec::cyclic(8));
    CHECK(c8.counterexample_count() == 0);
    const auto c6 = check_lemma33(GroupSpec::cyclic(6));
    CHECK(c6.counterexample_count() == 0);
    CHECK(c6.satisfying > 0);

    CHECK_THROWS_AS(check_lemma33(GroupSpec::cyclic(5)), UsageError);
    CHECK_THROWS_AS(evaluate_lemma33(c2c4, c2c4.element({0, 1}), c2c4.element({0, 1}), 5), UsageError);
    CHECK_THROWS_AS(evaluate_lemma33(c2c4, c2c4.element({1, 0}), c2c4.element({0, 1}), 5), UsageError);
}

TEST_CASE("lemma 33 over even groups up to 12")
{
    std::uint64_t satisfying = 0;
    for (const auto& g : testing_groups::up_to(12)) {
        if (g.order() % 2 != 0)
            continue;
        const auto r = check_lemma33(g);
        CHECK_MESSAGE(r.passed(), g.name());
        CHECK(r.vacuous + r.satisfying == r.total);
        satisfying += r.satisfying;
    }
    CHECK(satisfying > 0);
}

TEST_CASE("lemma 33 hypothesis agrees with the naive zero-sum lengths")
{
    const GroupSpec g({2, 6});
    const auto n = g.order();
    for (auto a : g.elements()) {
        if (2 * g.order_of(a) != n)
            continue;
        for (auto h : g.elements()) {
            if (h == a)
                continue;
            for (std::uint32_t l = n / 2; l + 2 <= n; ++l) {
                const auto s = Sequence::of(g, {{a, l}, {h, n - l}});
                const bool expected = naive::zero_lengths(s) == std::vector<std::size_t>{n / 2};
                CHECK(evaluate_lemma33(g, a, h, l).hypothesis == expected);
            }
        }
    }
}
