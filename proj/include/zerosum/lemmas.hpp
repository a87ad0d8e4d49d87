#pragma once

#include "zerosum/sequence.hpp"
#include "zerosum/sums.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zerosum {

/// A hypothesis-satisfying instance whose conclusion failed.
struct LemmaCounterexample {
    Element g;
    std::optional<Element> h;
    Sequence sequence; // R for lemma 31, S otherwise
    std::string detail;
};

struct LemmaReport {
    std::string lemma; // "31", "32", "33"
    GroupSpec group;
    std::uint64_t total = 0;
    std::uint64_t vacuous = 0;           // hypothesis fails
    std::uint64_t satisfying = 0;        // hypothesis holds
    std::uint64_t conclusion_holds = 0;
    std::vector<LemmaCounterexample> counterexamples; // first few
    std::uint64_t crosschecks = 0;       // hypotheses recomputed by subset enumeration
    std::uint64_t crosscheck_failures = 0;

    std::uint64_t counterexample_count() const noexcept { return satisfying - conclusion_holds; }
    bool passed() const noexcept { return satisfying == conclusion_holds && crosscheck_failures == 0; }
};

struct LemmaVerdict {
    bool hypothesis = false;
    bool conclusion = false;
};

/// Single instances of the three implications, evaluated extensionally.
LemmaVerdict evaluate_lemma31(const Sequence& r, Element g);
LemmaVerdict evaluate_lemma32(std::uint32_t n, Element g, Element h, std::uint32_t l);
LemmaVerdict evaluate_lemma33(const GroupSpec& group, Element g, Element h, std::uint32_t l);

/// Every 100th hypothesis evaluation is recomputed by brute force.
inline constexpr std::uint64_t crosscheck_stride = 100;

/**
 * For every g and nontrivial R with |R| <= min(max_len, ord(g)-1):
 * Sigma(R) inside {g, 2g, ..., |R|g} and sigma(R) = |R|g imply R = g^{|R|}.
 * max_len = 0 means no extra cap.
 */
LemmaReport check_lemma31(const GroupSpec& g, std::uint32_t max_len = 0,
                          std::uint64_t budget = default_multiset_budget);

/**
 * Over C_n, for every generator g, every h and every l with l >= n-l >= 1, S = g^l h^{n-l}:
 * if Sigma(h^{n-l}) = {g, ..., (n-l-1)g} u {b0} for some b0 and S has a unique
 * zero-sum length, then S = g^{n-1}h, or n is odd, h = (n+1)/2 g and S = g^{n-2}h^2.
 */
LemmaReport check_lemma32(std::uint32_t n);

/**
 * For |G| = n even, every g with ord(g) = n/2, every h != g, every l in [n/2, n-2],
 * S = g^l h^{n-l}: if n/2 is the unique zero-sum length, then n-l is odd,
 * h is outside <g>, and 2h = 2g. Throws UsageError for odd n.
 */
LemmaReport check_lemma33(const GroupSpec& g);

} // namespace zerosum
