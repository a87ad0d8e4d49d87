#include "zerosum/lemmas.hpp"

#include "zerosum/error.hpp"

#include <algorithm>

namespace zerosum {

namespace {

constexpr std::size_t kept_counterexamples = 16;

/// Sigma rows from the DP, with every crosscheck_stride-th evaluation redone by subset enumeration.
class HypothesisSums {
public:
    HypothesisSums(const GroupSpec& g, LemmaReport* report) : engine_(g), report_(report) {}

    const SumsEngine& evaluate(const Sequence& s)
    {
        engine_.compute(s);
        if (report_ != nullptr && evaluations_++ % crosscheck_stride == 0) {
            ++report_->crosschecks;
            const auto oracle = brute_force_table(s);
            for (std::size_t l = 0; l <= s.length(); ++l) {
                if (engine_.row(l) != oracle[l]) {
                    ++report_->crosscheck_failures;
                    break;
                }
            }
        }
        return engine_;
    }

private:
    SumsEngine engine_;
    LemmaReport* report_;
    std::uint64_t evaluations_ = 0;
};

ElementSet all_sums(const SumsEngine& e)
{
    ElementSet out(e.group().order());
    for (std::size_t l = 1; l <= e.length(); ++l)
        out |= e.row(l);
    return out;
}

/// {g, 2g, ..., k g}
ElementSet progression(const GroupSpec& G, Element g, std::uint32_t k)
{
    ElementSet out(G.order());
    for (std::uint32_t j = 1; j <= k; ++j)
        out.insert(G.scalar_mul(j, g));
    return out;
}

bool lemma31_hypothesis(const GroupSpec& G, const ElementSet& sums_r, Element sigma_r, std::uint32_t k, Element g)
{
    return sums_r.is_subset_of(progression(G, g, k)) && sigma_r == G.scalar_mul(k, g);
}

Sequence two_terms(const GroupSpec& G, Element a, std::uint32_t ka, Element b, std::uint32_t kb)
{
    Sequence s(G);
    s.append(a, ka);
    s.append(b, kb);
    return s;
}

LemmaVerdict lemma32_with(HypothesisSums& sums, SumsEngine& profile, std::uint32_t n, Element g, Element h,
                          std::uint32_t l)
{
    const auto& G = profile.group();
    const std::uint32_t tail = n - l;
    LemmaVerdict v;
    const auto hs = all_sums(sums.evaluate(Sequence::power(G, h, tail)));
    const auto prog = progression(G, g, tail - 1);
    // Sigma(h^{n-l}) = P u {b0} for some b0: P inside, at most one element outside.
    const auto outside = hs.size() - (hs & prog).size();
    if (!(prog.is_subset_of(hs) && outside <= 1))
        return v;
    const auto s = two_terms(G, g, l, h, tail);
    profile.compute(s);
    v.hypothesis = profile.zero_lengths().size() == 1;
    if (!v.hypothesis)
        return v;
    v.conclusion = s == two_terms(G, g, n - 1, h, 1);
    if (!v.conclusion && n % 2 == 1 && n >= 3 && h == G.scalar_mul((n + 1) / 2, g))
        v.conclusion = s == two_terms(G, g, n - 2, h, 2);
    return v;
}

LemmaVerdict lemma33_with(HypothesisSums& sums, const GroupSpec& G, const Subgroup& generated, Element g, Element h,
                          std::uint32_t l)
{
    const auto n = G.order();
    LemmaVerdict v;
    const auto lengths = sums.evaluate(two_terms(G, g, l, h, n - l)).zero_lengths();
    v.hypothesis = lengths.size() == 1 && 2 * lengths.front() == n;
    if (v.hypothesis)
        v.conclusion = (n - l) % 2 == 1 && !generated.contains(h) && G.scalar_mul(2, h) == G.scalar_mul(2, g);
    return v;
}

void check_lemma32_args(std::uint32_t n, const GroupSpec& G, Element g, std::uint32_t l)
{
    if (G.order_of(g) != n)
        throw UsageError("lemma 32 needs g to generate C" + std::to_string(n));
    if (!(l < n && 2 * l >= n))
        throw UsageError("lemma 32 needs l >= n - l >= 1");
}

void check_lemma33_args(const GroupSpec& G, Element g, Element h, std::uint32_t l)
{
    const auto n = G.order();
    if (n % 2 != 0)
        throw UsageError("lemma 33 needs a group of even order, " + G.name() + " has order " + std::to_string(n));
    if (2 * G.order_of(g) != n || h == g || 2 * l < n || l + 2 > n)
        throw UsageError("lemma 33 needs ord(g) = n/2, h != g, l >= n/2 and n - l >= 2");
}

void tally(LemmaReport& r, const LemmaVerdict& v, LemmaCounterexample cex)
{
    ++r.total;
    if (!v.hypothesis) {
        ++r.vacuous;
        return;
    }
    ++r.satisfying;
    if (v.conclusion)
        ++r.conclusion_holds;
    else if (r.counterexamples.size() < kept_counterexamples)
        r.counterexamples.push_back(std::move(cex));
}

} // namespace

LemmaVerdict evaluate_lemma31(const Sequence& r, Element g)
{
    const auto& G = r.group();
    if (r.empty())
        throw UsageError("lemma 31 needs a nontrivial R");
    const auto k = static_cast<std::uint32_t>(r.length());
    if (k + 1 > G.order_of(g))
        throw UsageError("lemma 31 needs |R| <= ord(g) - 1");
    LemmaVerdict v;
    v.hypothesis = lemma31_hypothesis(G, sums_by_length(r).all_sums(), sigma(r), k, g);
    v.conclusion = r.multiplicity(g) == k;
    return v;
}

LemmaVerdict evaluate_lemma32(std::uint32_t n, Element g, Element h, std::uint32_t l)
{
    const auto G = GroupSpec::cyclic(n);
    check_lemma32_args(n, G, g, l);
    HypothesisSums sums(G, nullptr);
    SumsEngine profile(G);
    return lemma32_with(sums, profile, n, g, h, l);
}

LemmaVerdict evaluate_lemma33(const GroupSpec& G, Element g, Element h, std::uint32_t l)
{
    check_lemma33_args(G, g, h, l);
    HypothesisSums sums(G, nullptr);
    return lemma33_with(sums, G, cyclic_subgroup(G, g), g, h, l);
}

LemmaReport check_lemma31(const GroupSpec& G, std::uint32_t max_len, std::uint64_t budget)
{
    LemmaReport report{.lemma = "31", .group = G};
    const auto n = G.order();
    std::vector<std::uint32_t> orders(n);
    std::uint32_t max_ord = 1;
    for (Element g : G.elements()) {
        orders[g.index] = G.order_of(g);
        max_ord = std::max(max_ord, orders[g.index]);
    }
    std::uint32_t top = max_ord - 1;
    if (max_len != 0)
        top = std::min(top, max_len);

    std::uint64_t needed = 0;
    for (std::uint32_t k = 1; k <= top; ++k)
        needed += multiset_count(n, k);
    if (needed > budget)
        throw BudgetExceeded("lemma 31 sweep over " + G.name() + " needs " + std::to_string(needed) +
                             " multisets, over budget " + std::to_string(budget));

    // Sigma(R) is shared by every g admitting |R|.
    HypothesisSums sums(G, &report);
    for (std::uint32_t k = 1; k <= top; ++k) {
        MultisetCursor cursor(n, k);
        while (cursor.next()) {
            const auto mult = cursor.current();
            const Sequence rseq(G, Multiplicities(mult.begin(), mult.end()));
            std::optional<ElementSet> sums_r;
            Element sig{};
            for (Element g : G.elements()) {
                if (k + 1 > orders[g.index])
                    continue;
                if (!sums_r) {
                    sums_r = all_sums(sums.evaluate(rseq));
                    sig = sigma(rseq);
                }
                LemmaVerdict v;
                v.hypothesis = lemma31_hypothesis(G, *sums_r, sig, k, g);
                v.conclusion = mult[g.index] == k;
                tally(report, v, {g, std::nullopt, rseq, "R is not g^|R|"});
            }
        }
    }
    return report;
}

LemmaReport check_lemma32(std::uint32_t n)
{
    const auto G = GroupSpec::cyclic(n);
    LemmaReport report{.lemma = "32", .group = G};
    HypothesisSums sums(G, &report);
    SumsEngine profile(G);
    for (Element g : group_generators(G))
        for (Element h : G.elements())
            for (std::uint32_t tail = 1; 2 * tail <= n; ++tail) {
                const std::uint32_t l = n - tail;
                tally(report, lemma32_with(sums, profile, n, g, h, l),
                      {g, h, two_terms(G, g, l, h, tail), "S is neither g^{n-1}h nor g^{n-2}((n+1)/2 g)^2"});
            }
    return report;
}

LemmaReport check_lemma33(const GroupSpec& G)
{
    const auto n = G.order();
    if (n % 2 != 0)
        throw UsageError("lemma 33 needs a group of even order, " + G.name() + " has order " + std::to_string(n));
    LemmaReport report{.lemma = "33", .group = G};
    HypothesisSums sums(G, &report);
    for (Element g : G.elements()) {
        if (2 * G.order_of(g) != n)
            continue;
        const auto generated = cyclic_subgroup(G, g);
        for (Element h : G.elements()) {
            if (h == g)
                continue;
            for (std::uint32_t l = n / 2; l + 2 <= n; ++l)
                tally(report, lemma33_with(sums, G, generated, g, h, l),
                      {g, h, two_terms(G, g, l, h, n - l), "needs n-l odd, h outside <g>, 2h = 2g"});
        }
    }
    return report;
}

} // namespace zerosum
