#include "zerosum/bounds.hpp"

#include "zerosum/error.hpp"
#include "zerosum/parallel.hpp"
#include "zerosum/random.hpp"

#include <algorithm>
#include <functional>

namespace zerosum {

namespace {

constexpr std::size_t kept_failures = 16;

/**
 * Depth-first walk over zero-sum free sequences with nondecreasing terms.
 * Level d keeps B_d = Sigma(S_d) u {0}; appending x keeps S zero-sum free iff
 * -x is not in B_d, and then B_{d+1} = B_d u (B_d + x).
 */
class ZeroSumFreeWalk {
public:
    ZeroSumFreeWalk(const GroupSpec& g, std::uint64_t budget)
        : group_(g), n_(g.order()), words_(words_for(n_)), budget_(budget), mult_(n_, 0)
    {
        perm_.resize(static_cast<std::size_t>(n_) * n_);
        neg_.resize(n_);
        for (std::uint32_t x = 0; x < n_; ++x) {
            neg_[x] = g.neg(Element{x}).index;
            for (std::uint32_t y = 0; y < n_; ++y)
                perm_[static_cast<std::size_t>(x) * n_ + y] = g.add(Element{y}, Element{x}).index;
        }
    }

    /// visit(mult, length) at every node; returning false stops descent below that node.
    void run(std::uint32_t max_length, const std::function<bool(std::span<const std::uint32_t>, std::size_t)>& visit)
    {
        levels_.assign(static_cast<std::size_t>(n_ + 1) * words_, 0);
        levels_[0] = 1;
        max_length_ = max_length;
        visit_ = &visit;
        if (visit(mult_, 0) && max_length > 0)
            descend(0, 1);
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool has(const std::uint64_t* row, std::uint32_t x) const { return ((row[x >> 6] >> (x & 63)) & 1U) != 0; }

    void descend(std::size_t depth, std::uint32_t start)
    {
        const std::uint64_t* cur = levels_.data() + depth * words_;
        std::uint64_t* nxt = levels_.data() + (depth + 1) * words_;
        for (std::uint32_t x = start; x < n_; ++x) {
            if (has(cur, neg_[x]))
                continue;
            if (++nodes_ > budget_)
                throw BudgetExceeded("zero-sum free search exceeded " + std::to_string(budget_) + " nodes over " +
                                     group_.name());
            std::copy(cur, cur + words_, nxt);
            const std::uint32_t* shift = perm_.data() + static_cast<std::size_t>(x) * n_;
            for (std::size_t wi = 0; wi < words_; ++wi) {
                std::uint64_t bits = cur[wi];
                while (bits != 0) {
                    const auto y = shift[wi * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
                    nxt[y >> 6] |= std::uint64_t{1} << (y & 63);
                    bits &= bits - 1;
                }
            }
            ++mult_[x];
            if ((*visit_)(mult_, depth + 1) && depth + 1 < max_length_)
                descend(depth + 1, x);
            --mult_[x];
        }
    }

    const GroupSpec& group_;
    std::uint32_t n_;
    std::size_t words_;
    std::uint64_t budget_;
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::uint64_t> levels_;
    Multiplicities mult_;
    std::uint32_t max_length_ = 0;
    std::uint64_t nodes_ = 0;
    const std::function<bool(std::span<const std::uint32_t>, std::size_t)>* visit_ = nullptr;
};

void check_search_size(const GroupSpec& g, const SearchOptions& options)
{
    const bool cyclic = is_cyclic(g);
    const auto cap = cyclic ? options.max_cyclic_order : options.max_noncyclic_order;
    if (g.order() > cap)
        throw BudgetExceeded("zero-sum free search over " + g.name() + " exceeds the " +
                             (cyclic ? std::string("cyclic") : std::string("non-cyclic")) + " order cap " +
                             std::to_string(cap));
}

ElementSet set_from_mask(std::uint32_t n, std::uint64_t mask)
{
    ElementSet s(n);
    for (std::uint32_t i = 0; i < n; ++i)
        if ((mask >> i) & 1U)
            s.insert(Element{i});
    return s;
}

} // namespace

DavenportResult davenport(const GroupSpec& g, const SearchOptions& options)
{
    check_search_size(g, options);
    ZeroSumFreeWalk walk(g, options.node_budget);
    std::size_t best = 0;
    Multiplicities best_mult(g.order(), 0);
    walk.run(g.order(), [&](std::span<const std::uint32_t> mult, std::size_t length) {
        if (length > best) {
            best = length;
            best_mult.assign(mult.begin(), mult.end());
        }
        return true;
    });
    return DavenportResult{static_cast<std::uint32_t>(best + 1), Sequence(g, std::move(best_mult)), walk.nodes()};
}

DavenportUpperReport check_davenport_upper(const GroupSpec& g, const SearchOptions& options)
{
    const auto d = davenport(g, options).value;
    return DavenportUpperReport{d, g.order(), d <= g.order()};
}

std::vector<Sequence> zero_sum_free_of_length(const GroupSpec& g, std::uint32_t length, const SearchOptions& options)
{
    check_search_size(g, options);
    std::optional<OrbitCanonicalizer> canon;
    if (options.up_to_automorphism)
        canon.emplace(g);
    std::vector<Sequence> out;
    ZeroSumFreeWalk walk(g, options.node_budget);
    walk.run(length, [&](std::span<const std::uint32_t> mult, std::size_t len) {
        if (len == length && (!canon || canon->is_canonical(mult)))
            out.emplace_back(g, Multiplicities(mult.begin(), mult.end()));
        return len < length;
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

Prop21Report check_prop21(const GroupSpec& g, const ElementSet& a, const ElementSet& b)
{
    const auto counts = rep_counts(g, a, b);
    Prop21Report r;
    r.size_a = a.size();
    r.size_b = b.size();
    for (auto c : counts)
        r.size_sum += c != 0 ? 1 : 0;

    r.k_sumset = static_cast<long long>(r.size_a + r.size_b) - static_cast<long long>(r.size_sum);
    r.sumset_applicable = r.k_sumset >= 1;
    r.min_rep_on_sumset = UINT64_MAX;
    for (std::uint32_t x = 0; x < counts.size(); ++x) {
        if (counts[x] != 0 && counts[x] < r.min_rep_on_sumset) {
            r.min_rep_on_sumset = counts[x];
            if (r.sumset_applicable && static_cast<long long>(counts[x]) < r.k_sumset && !r.sumset_witness)
                r.sumset_witness = Element{x};
        }
    }
    r.sumset_holds = !r.sumset_applicable || static_cast<long long>(r.min_rep_on_sumset) >= r.k_sumset;

    r.k_group = static_cast<long long>(r.size_a + r.size_b) - static_cast<long long>(g.order());
    r.group_applicable = r.k_group >= 1;
    r.min_rep_on_group = *std::min_element(counts.begin(), counts.end());
    for (std::uint32_t x = 0; x < counts.size() && r.group_applicable; ++x) {
        if (static_cast<long long>(counts[x]) < r.k_group) {
            r.group_witness = Element{x};
            break;
        }
    }
    r.group_holds = !r.group_applicable || static_cast<long long>(r.min_rep_on_group) >= r.k_group;
    return r;
}

Prop21Summary check_prop21_exhaustive(const GroupSpec& g, std::uint32_t max_order)
{
    const auto n = g.order();
    if (n > max_order || n > 30)
        throw BudgetExceeded("exhaustive subset-pair check capped at order " + std::to_string(max_order));
    Prop21Summary out;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<ElementSet> sets;
    sets.reserve(subsets - 1);
    for (std::uint64_t m = 1; m < subsets; ++m)
        sets.push_back(set_from_mask(n, m));
    for (const auto& a : sets) {
        for (const auto& b : sets) {
            const auto r = check_prop21(g, a, b);
            ++out.pairs;
            out.sumset_applicable += r.sumset_applicable ? 1 : 0;
            out.group_applicable += r.group_applicable ? 1 : 0;
            if (!r.holds()) {
                ++out.failures;
                if (out.failing_pairs.size() < kept_failures)
                    out.failing_pairs.emplace_back(a, b);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

bool is_prime(std::uint64_t p)
{
    if (p < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

CauchyDavenportReport check_cauchy_davenport(std::uint32_t p, const std::vector<ElementSet>& sets)
{
    if (!is_prime(p))
        throw UsageError(std::to_string(p) + " is not prime");
    if (sets.empty())
        throw UsageError("Cauchy-Davenport check needs at least one set");
    const auto g = GroupSpec::cyclic(p);
    CauchyDavenportReport r;
    r.p = p;
    r.set_count = sets.size();
    ElementSet total;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].universe() != p)
            throw UsageError("set is not over C" + std::to_string(p));
        if (sets[i].empty())
            throw UsageError("Cauchy-Davenport sets must be nonempty");
        r.size_total += sets[i].size();
        total = i == 0 ? sets[i] : sumset(g, total, sets[i]);
    }
    r.sumset_size = total.size();
    r.bound = std::min<long long>(static_cast<long long>(r.size_total) - static_cast<long long>(r.set_count) + 1, p);
    r.holds = static_cast<long long>(r.sumset_size) >= r.bound;
    return r;
}

CauchyDavenportSummary cauchy_davenport_exhaustive_pairs(std::uint32_t p)
{
    if (!is_prime(p))
        throw UsageError(std::to_string(p) + " is not prime");
    if (p > 13)
        throw BudgetExceeded("exhaustive Cauchy-Davenport pairs capped at p <= 13");
    CauchyDavenportSummary out;
    out.p = p;
    const std::uint64_t subsets = std::uint64_t{1} << p;
    std::vector<ElementSet> sets;
    for (std::uint64_t m = 1; m < subsets; ++m)
        sets.push_back(set_from_mask(p, m));
    for (const auto& a : sets) {
        for (const auto& b : sets) {
            const auto r = check_cauchy_davenport(p, {a, b});
            ++out.cases;
            out.tight += static_cast<long long>(r.sumset_size) == r.bound ? 1 : 0;
            if (!r.holds) {
                ++out.failures;
                if (out.failing.size() < kept_failures)
                    out.failing.push_back({a, b});
            }
        }
    }
    return out;
}

CauchyDavenportSummary cauchy_davenport_random(std::uint32_t p, std::uint64_t trials, std::uint64_t seed,
                                               std::size_t max_sets, unsigned jobs)
{
    if (!is_prime(p))
        throw UsageError(std::to_string(p) + " is not prime");
    if (max_sets < 2)
        throw UsageError("random Cauchy-Davenport tuples need at least 2 sets");

    struct Outcome {
        std::vector<ElementSet> sets;
        CauchyDavenportReport report;
    };
    std::vector<Outcome> outcomes(trials);
    parallel_for(trials, jobs, [&](std::size_t t, unsigned) {
        auto rng = trial_rng(seed, t);
        std::uniform_int_distribution<std::size_t> count_dist(2, max_sets);
        std::uniform_int_distribution<std::uint32_t> size_dist(1, p);
        std::vector<std::uint32_t> pool(p);
        const std::size_t k = count_dist(rng);
        std::vector<ElementSet> sets;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::uint32_t x = 0; x < p; ++x)
                pool[x] = x;
            std::shuffle(pool.begin(), pool.end(), rng);
            const auto size = size_dist(rng);
            ElementSet s(p);
            for (std::uint32_t j = 0; j < size; ++j)
                s.insert(Element{pool[j]});
            sets.push_back(std::move(s));
        }
        outcomes[t].report = check_cauchy_davenport(p, sets);
        outcomes[t].sets = std::move(sets);
    });

    CauchyDavenportSummary out;
    out.p = p;
    for (auto& o : outcomes) {
        ++out.cases;
        out.tight += static_cast<long long>(o.report.sumset_size) == o.report.bound ? 1 : 0;
        if (!o.report.holds) {
            ++out.failures;
            if (out.failing.size() < kept_failures)
                out.failing.push_back(std::move(o.sets));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

DgmReport dgm_check(const Sequence& s, std::size_t length)
{
    if (length < 1 || length > s.length())
        throw UsageError("subsequence length must lie in [1, |S|]");
    const auto& g = s.group();
    const auto table = sums_by_length(s);
    const auto& sums = table.row(length);
    const auto h = stabilizer(g, sums);
    const auto parts = cosets(g, h);
    const auto image = push_map(s, [&](Element x) { return parts.representative[parts.label[x.index]]; });

    DgmReport r;
    r.length = length;
    r.sums_size = sums.size();
    r.stabilizer_order = h.size();
    long long total = 0;
    for (const Element rep : parts.representative) {
        const auto v = image.multiplicity(rep);
        r.coset_multiplicities.push_back(v);
        total += std::min<long long>(static_cast<long long>(length), v);
    }
    r.bound = (total - static_cast<long long>(length) + 1) * static_cast<long long>(h.size());
    r.holds = static_cast<long long>(r.sums_size) >= r.bound;
    return r;
}

DgmCampaign dgm_random(const GroupSpec& g, std::uint64_t trials, std::uint64_t seed, unsigned jobs)
{
    const auto n = g.order();
    std::vector<std::optional<DgmTrial>> outcomes(trials);
    parallel_for(trials, jobs, [&](std::size_t t, unsigned) {
        auto rng = trial_rng(seed, t);
        std::uniform_int_distribution<std::uint32_t> length_dist(1, 2 * n);
        std::uniform_int_distribution<std::uint32_t> elem_dist(0, n - 1);
        const auto len = length_dist(rng);
        Sequence s(g);
        if (t % 2 == 0) {
            for (std::uint32_t i = 0; i < len; ++i)
                s.append(Element{elem_dist(rng)});
        } else {
            std::uniform_int_distribution<std::uint32_t> support_dist(1, std::min<std::uint32_t>(n, 3));
            std::vector<Element> support(support_dist(rng));
            for (auto& e : support)
                e = Element{elem_dist(rng)};
            std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
            for (std::uint32_t i = 0; i < len; ++i)
                s.append(support[pick(rng)]);
        }
        std::uniform_int_distribution<std::size_t> l_dist(1, len);
        const auto l = l_dist(rng);
        auto report = dgm_check(s, l);
        outcomes[t].emplace(DgmTrial{std::move(s), std::move(report)});
    });

    DgmCampaign out;
    for (auto& o : outcomes) {
        ++out.trials;
        out.tight += o->report.tight() ? 1 : 0;
        out.nontrivial_stabilizer += o->report.stabilizer_order > 1 ? 1 : 0;
        out.proper += o->report.sums_size < n ? 1 : 0;
        if (!o->report.holds) {
            ++out.failure_count;
            if (out.failures.size() < kept_failures)
                out.failures.push_back(std::move(*o));
        }
    }
    return out;
}

} // namespace zerosum
