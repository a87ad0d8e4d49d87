#pragma once

#include "zerosum/sequence.hpp"
#include "zerosum/sums.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace zerosum {

// --- Davenport constant -----------------------------------------------------

struct SearchOptions {
    bool up_to_automorphism = false;
    std::uint64_t node_budget = 500'000'000;
    std::uint32_t max_cyclic_order = 20;
    std::uint32_t max_noncyclic_order = 16;
};

struct DavenportResult {
    std::uint32_t value = 0;               // 1 + longest zero-sum free length
    Sequence witness;                      // a longest zero-sum free sequence
    std::uint64_t nodes = 0;               // zero-sum free sequences visited
};

/// Computed by depth-first extension of zero-sum free sequences; no closed forms involved.
DavenportResult davenport(const GroupSpec& g, const SearchOptions& options = {});

struct DavenportUpperReport {
    std::uint32_t davenport = 0;
    std::uint32_t order = 0;
    bool holds = false;
};

DavenportUpperReport check_davenport_upper(const GroupSpec& g, const SearchOptions& options = {});

/// All zero-sum free sequences of exactly `length` terms, sorted; orbit
/// representatives only when options.up_to_automorphism.
std::vector<Sequence> zero_sum_free_of_length(const GroupSpec& g, std::uint32_t length,
                                              const SearchOptions& options = {});

// --- Representation counts --------------------------------------------------

struct Prop21Report {
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    std::size_t size_sum = 0;

    // (i): k = |A|+|B|-|A+B|, applicable when k >= 1; needs r(x) >= k on A+B.
    long long k_sumset = 0;
    bool sumset_applicable = false;
    std::uint64_t min_rep_on_sumset = 0;
    bool sumset_holds = true;
    std::optional<Element> sumset_witness;

    // (ii): k = |A|+|B|-|G|, applicable when k >= 1; needs r(x) >= k on all of G.
    long long k_group = 0;
    bool group_applicable = false;
    std::uint64_t min_rep_on_group = 0;
    bool group_holds = true;
    std::optional<Element> group_witness;

    bool holds() const noexcept { return sumset_holds && group_holds; }
};

/// Both implications, each at its largest applicable k (smaller k are weaker).
Prop21Report check_prop21(const GroupSpec& g, const ElementSet& a, const ElementSet& b);

struct Prop21Summary {
    std::uint64_t pairs = 0;
    std::uint64_t sumset_applicable = 0;
    std::uint64_t group_applicable = 0;
    std::uint64_t failures = 0;
    std::vector<std::pair<ElementSet, ElementSet>> failing_pairs; // first few
};

/// Every ordered pair of nonempty subsets; throws BudgetExceeded for |G| > max_order.
Prop21Summary check_prop21_exhaustive(const GroupSpec& g, std::uint32_t max_order = 10);

// --- Cauchy-Davenport ---------------------------------------------------------

bool is_prime(std::uint64_t p);

struct CauchyDavenportReport {
    std::uint32_t p = 0;
    std::size_t set_count = 0;
    std::size_t size_total = 0;
    std::size_t sumset_size = 0;
    long long bound = 0; // min(sum |A_i| - k + 1, p)
    bool holds = false;
};

/// |A_1 + ... + A_k| >= min(sum |A_i| - k + 1, p) over C_p; throws UsageError if p is not prime.
CauchyDavenportReport check_cauchy_davenport(std::uint32_t p, const std::vector<ElementSet>& sets);

struct CauchyDavenportSummary {
    std::uint32_t p = 0;
    std::uint64_t cases = 0;
    std::uint64_t tight = 0;
    std::uint64_t failures = 0;
    std::vector<std::vector<ElementSet>> failing; // first few
};

CauchyDavenportSummary cauchy_davenport_exhaustive_pairs(std::uint32_t p);
/// Random tuples of 2..max_sets nonempty sets; trial t uses its own seeded stream.
CauchyDavenportSummary cauchy_davenport_random(std::uint32_t p, std::uint64_t trials, std::uint64_t seed,
                                               std::size_t max_sets = 4, unsigned jobs = 1);

// --- Devos-Goddyn-Mohar, single-sequence special case -----------------------

struct DgmReport {
    std::size_t length = 0;           // the subsequence length l
    std::size_t sums_size = 0;        // |Sigma_l(S)|
    std::size_t stabilizer_order = 0; // |H|
    std::vector<std::uint32_t> coset_multiplicities; // v_{x+H}(phi_H(S)) per coset
    long long bound = 0;              // (sum min{l, v} - l + 1) |H|
    bool holds = false;

    bool tight() const noexcept { return static_cast<long long>(sums_size) == bound; }
};

DgmReport dgm_check(const Sequence& s, std::size_t length);

struct DgmTrial {
    Sequence sequence;
    DgmReport report;
};

struct DgmCampaign {
    std::uint64_t trials = 0;
    std::uint64_t tight = 0;
    std::uint64_t nontrivial_stabilizer = 0;
    std::uint64_t proper = 0; // Sigma_l(S) != G
    std::uint64_t failure_count = 0;
    std::vector<DgmTrial> failures; // first few
};

/// Random (S, l) over g; sequences up to 2|G| terms, half of them drawn from a small support.
DgmCampaign dgm_random(const GroupSpec& g, std::uint64_t trials, std::uint64_t seed, unsigned jobs = 1);

} // namespace zerosum
