#include "zerosum/classify.hpp"

#include "zerosum/error.hpp"
#include "zerosum/parallel.hpp"

#include <algorithm>
#include <chrono>

namespace zerosum {

std::string_view family_tag(Family f)
{
    switch (f) {
    case Family::CycGPow: return "CYC_GPOW";
    case Family::Cyc2GPow: return "CYC_2GPOW";
    case Family::CycOddSquare: return "CYC_ODD_SQUARE";
    case Family::CycMod4: return "CYC_MOD4";
    case Family::CycEvenHalf: return "CYC_EVEN_HALF";
    case Family::NcGPow: return "NC_GPOW";
    case Family::NcHG: return "NC_HG";
    case Family::NcHQG: return "NC_HQG";
    }
    return "?";
}

std::string_view shape_name(GroupShape s)
{
    switch (s) {
    case GroupShape::Cyclic: return "cyclic";
    case GroupShape::TwoByEven: return "C2xC2m";
    case GroupShape::Other: return "other";
    }
    return "?";
}

ShapeInfo detect_shape(const GroupSpec& g)
{
    const auto n = g.order();
    ShapeInfo info;
    for (Element x : g.elements()) {
        if (g.order_of(x) == n) {
            info.shape = GroupShape::Cyclic;
            info.g = x;
            return info;
        }
    }
    if (n % 2 != 0)
        return info;
    for (Element gen : g.elements()) {
        if (g.order_of(gen) != n / 2)
            continue;
        const auto sub = cyclic_subgroup(g, gen);
        for (Element h : g.elements()) {
            if (g.order_of(h) == 2 && !sub.contains(h)) {
                info.shape = GroupShape::TwoByEven;
                info.g = gen;
                info.h = h;
                return info;
            }
        }
    }
    return info;
}

namespace {

/// num/den when exact; the caller records a note otherwise.
std::optional<long long> exact_quotient(long long num, long long den)
{
    if (num % den != 0)
        return std::nullopt;
    return num / den;
}

Sequence two_terms(const GroupSpec& g, Element a, std::uint32_t ka, Element b, std::uint32_t kb)
{
    Sequence s(g);
    s.append(a, ka);
    s.append(b, kb);
    return s;
}

void add_cyclic(const GroupSpec& G, FamilyCatalog& cat)
{
    const std::uint32_t n = G.order();
    const auto half = n / 2;
    for (Element g : group_generators(G)) {
        // discrete log base g
        std::vector<std::uint32_t> log(n, 0);
        Element cur = G.zero();
        for (std::uint32_t k = 0; k < n; ++k) {
            log[cur.index] = k;
            cur = G.add(cur, g);
        }

        for (Element gp : G.elements()) {
            const std::uint32_t a = log[gp.index];
            cat.instances.push_back({Family::CycGPow, g, gp, std::nullopt, (n - a) % n + 1,
                                     two_terms(G, g, n - 1, gp, 1)});
        }

        const Element g2 = G.scalar_mul(2, g);
        const auto sub2 = cyclic_subgroup(G, g2);
        for (Element gpp : G.elements()) {
            if (sub2.contains(gpp))
                continue;
            cat.instances.push_back({Family::Cyc2GPow, g, gpp, std::nullopt, half, two_terms(G, g2, n - 1, gpp, 1)});
        }

        if (n % 2 == 1) {
            const auto c = exact_quotient(n + 1, 2);
            if (n < 3)
                cat.notes.push_back("CYC_ODD_SQUARE needs n >= 3; skipped for n = " + std::to_string(n));
            else if (!c)
                cat.notes.push_back("CYC_ODD_SQUARE coefficient (n+1)/2 not integral");
            else
                cat.instances.push_back({Family::CycOddSquare, g, G.scalar_mul(*c, g), std::nullopt, (n + 1) / 2,
                                         two_terms(G, g, n - 2, G.scalar_mul(*c, g), 2)});
        }

        if (n % 4 == 2) {
            const auto c = exact_quotient(n + 4, 2);
            if (!c) {
                cat.notes.push_back("CYC_MOD4 coefficient (n+4)/2 not integral");
            } else {
                const Element other = G.scalar_mul(*c, g);
                for (std::uint32_t x = 0; x + 1 <= half; x += 2)
                    cat.instances.push_back(
                        {Family::CycMod4, g, other, x, half, two_terms(G, g2, half + x, other, half - x)});
            }
        }

        if (n % 2 == 0) {
            const auto c = exact_quotient(n + 2, 2);
            if (!c) {
                cat.notes.push_back("CYC_EVEN_HALF coefficient (n+2)/2 not integral");
            } else {
                const Element other = G.scalar_mul(*c, g);
                for (std::uint32_t x = 0; x + 1 <= half; ++x)
                    if ((half - x) % 2 == 1)
                        cat.instances.push_back(
                            {Family::CycEvenHalf, g, other, x, half, two_terms(G, g, half + x, other, half - x)});
            }
        }
    }
}

void add_two_by_even(const GroupSpec& G, FamilyCatalog& cat)
{
    const std::uint32_t n = G.order();
    const auto half = n / 2;
    const auto quarter = exact_quotient(n + 4, 4);
    if (!quarter)
        cat.notes.push_back("NC_HQG coefficient (n+4)/4 not integral; family skipped");
    for (Element g : G.elements()) {
        if (G.order_of(g) != half)
            continue;
        const auto sub = cyclic_subgroup(G, g);
        for (Element gp : G.elements())
            if (!sub.contains(gp))
                cat.instances.push_back({Family::NcGPow, g, gp, std::nullopt, half, two_terms(G, g, n - 1, gp, 1)});
        for (Element h : G.elements()) {
            if (G.order_of(h) != 2 || sub.contains(h))
                continue;
            const Element hg = G.add(h, g);
            for (std::uint32_t x = 1; x + 1 <= half; x += 2) {
                cat.instances.push_back({Family::NcHG, g, h, x, half, two_terms(G, g, half + x, hg, half - x)});
                if (quarter) {
                    // coefficient reduced mod ord(g) by scalar_mul
                    const Element hq = G.add(h, G.scalar_mul(*quarter % half, g));
                    cat.instances.push_back({Family::NcHQG, g, h, x, half, two_terms(G, g, half + x, hq, half - x)});
                }
            }
        }
    }
}

Element sigma_of(const GroupSpec& g, std::span<const std::uint32_t> mult)
{
    Element total = g.zero();
    for (std::uint32_t i = 0; i < mult.size(); ++i)
        if (mult[i] != 0)
            total = g.add(total, g.scalar_mul(mult[i], Element{i}));
    return total;
}

} // namespace

FamilyCatalog enumerate_families(const GroupSpec& g)
{
    FamilyCatalog cat{g, detect_shape(g).shape, {}, {}};
    if (cat.shape == GroupShape::Cyclic)
        add_cyclic(g, cat);
    else if (cat.shape == GroupShape::TwoByEven)
        add_two_by_even(g, cat);
    return cat;
}

std::size_t FamilyIndex::Hash::operator()(const Multiplicities& m) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : m)
        h = (h ^ v) * 0x100000001b3ULL;
    return h;
}

FamilyIndex::FamilyIndex(FamilyCatalog catalog) : catalog_(std::move(catalog))
{
    for (std::size_t i = 0; i < catalog_.instances.size(); ++i) {
        const auto mult = catalog_.instances[i].sequence.multiplicities();
        index_[Multiplicities(mult.begin(), mult.end())].push_back(i);
    }
}

bool FamilyIndex::matches(std::span<const std::uint32_t> mult) const
{
    return index_.find(Multiplicities(mult.begin(), mult.end())) != index_.end();
}

std::vector<FamilyInstance> FamilyIndex::match(const Sequence& s) const
{
    std::vector<FamilyInstance> out;
    const auto mult = s.multiplicities();
    const auto it = index_.find(Multiplicities(mult.begin(), mult.end()));
    if (it != index_.end())
        for (auto i : it->second)
            out.push_back(catalog_.instances[i]);
    return out;
}

std::vector<FamilyInstance> match_family(const FamilyIndex& index, const Sequence& s)
{
    if (!(s.group() == index.catalog().group))
        throw UsageError("sequence and family catalog are over different groups");
    if (s.length() != s.group().order())
        throw UsageError("family matching needs |S| = |G| = " + std::to_string(s.group().order()) + ", got " +
                         std::to_string(s.length()));
    return index.match(s);
}

std::vector<FamilyInstance> match_family(const Sequence& s)
{
    if (s.length() != s.group().order())
        throw UsageError("family matching needs |S| = |G| = " + std::to_string(s.group().order()) + ", got " +
                         std::to_string(s.length()));
    return match_family(FamilyIndex(s.group()), s);
}

std::uint64_t VerificationReport::unmatched() const
{
    return static_cast<std::uint64_t>(std::count_if(mismatches.begin(), mismatches.end(), [](const Mismatch& m) {
        return m.kind == MismatchKind::QualifyingUnmatched;
    }));
}

bool VerificationReport::confirmed() const
{
    return mismatches.empty() && support_violations.empty() && r_violations.empty() && family_failures.empty() &&
           complement_violations == 0 && padding_violations == 0;
}

// ---------------------------------------------------------------------------

namespace {

struct SweepPartial {
    std::uint64_t total = 0;
    std::uint64_t representatives = 0;
    std::uint64_t qualifying = 0;
    std::uint64_t matched = 0;
    std::uint64_t qualifying_weighted = 0;
    std::uint64_t matched_weighted = 0;
    std::map<std::size_t, std::uint64_t> by_r;
    std::vector<Mismatch> mismatches;
    std::vector<SequenceRecord> support_violations;
    std::vector<SequenceRecord> r_violations;
    std::uint64_t tables = 0;
    std::uint64_t complement_violations = 0;
    std::uint64_t padding_checked = 0;
    std::uint64_t padding_violations = 0;
};

/// Slot prefixes that split the multiset space into independent tasks.
std::vector<Multiplicities> sweep_prefixes(std::uint32_t slots, std::uint32_t length)
{
    const std::uint32_t depth = slots >= 3 ? 2 : (slots >= 2 ? 1 : 0);
    std::vector<Multiplicities> out;
    Multiplicities cur;
    auto rec = [&](auto&& self, std::uint32_t remaining) -> void {
        if (cur.size() == depth) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t k = 0; k <= remaining; ++k) {
            cur.push_back(k);
            self(self, remaining - k);
            cur.pop_back();
        }
    };
    rec(rec, length);
    return out;
}

} // namespace

VerificationReport verify_theorem(const GroupSpec& g, const VerifyOptions& options)
{
    const auto start = std::chrono::steady_clock::now();
    const std::uint32_t n = g.order();
    const auto count = multiset_count(n, n);
    if (count > options.budget)
        throw BudgetExceeded("verifying " + g.name() + " needs " + std::to_string(count) +
                             " multisets, over budget " + std::to_string(options.budget));

    std::optional<OrbitCanonicalizer> canon;
    if (options.up_to_automorphism)
        canon.emplace(g);
    const std::uint64_t aut_order = canon ? canon->group_size() : 1;

    const FamilyIndex index(g);
    const auto shape = index.catalog().shape;

    VerificationReport report{.group = g, .shape = shape, .up_to_automorphism = options.up_to_automorphism};
    report.family_instances = index.catalog().instances.size();
    report.family_sequences = index.distinct_sequences();
    report.notes = index.catalog().notes;

    const auto prefixes = sweep_prefixes(n, n);
    std::vector<SweepPartial> partials(prefixes.size());
    const unsigned jobs = std::max(1U, options.jobs);
    std::vector<std::optional<SumsEngine>> engines(jobs);

    parallel_for(prefixes.size(), jobs, [&](std::size_t task, unsigned worker) {
        auto& engine = engines[worker];
        if (!engine)
            engine.emplace(g);
        auto& part = partials[task];
        MultisetCursor cursor(n, n, prefixes[task]);
        while (cursor.next()) {
            const auto mult = cursor.current();
            ++part.total;
            std::uint64_t weight = 1;
            if (canon) {
                std::size_t stab = 0;
                if (!canon->is_canonical(mult, &stab))
                    continue;
                weight = aut_order / stab;
            }
            ++part.representatives;
            engine->compute(mult);
            ++part.tables;
            if (!engine->complement_identity_holds(sigma_of(g, mult)))
                ++part.complement_violations;

            auto lengths = engine->zero_lengths();
            const bool qualifies = lengths.size() == 1;
            const bool matched = index.matches(mult);
            if (!qualifies && !matched)
                continue;

            std::size_t support = 0;
            for (auto m : mult)
                support += m != 0 ? 1 : 0;
            SequenceRecord rec{Multiplicities(mult.begin(), mult.end()), std::move(lengths), support};

            if (!qualifies) {
                part.mismatches.push_back({MismatchKind::MatchedNotQualifying, std::move(rec)});
                continue;
            }
            const std::size_t r = rec.lengths.front();
            ++part.qualifying;
            part.qualifying_weighted += weight;
            part.by_r[r] += weight;

            const Sequence seq(g, rec.mult);
            const auto padding = check_padding_identities(seq, r);
            ++part.padding_checked;
            if (!padding.holds())
                ++part.padding_violations;

            if (support > 2)
                part.support_violations.push_back(rec);
            if (shape != GroupShape::Cyclic && 2 * r != n)
                part.r_violations.push_back(rec);
            if (matched) {
                ++part.matched;
                part.matched_weighted += weight;
            } else {
                part.mismatches.push_back({MismatchKind::QualifyingUnmatched, std::move(rec)});
            }
        }
    });

    for (auto& p : partials) {
        report.total += p.total;
        report.representatives += p.representatives;
        report.qualifying += p.qualifying;
        report.matched += p.matched;
        report.qualifying_weighted += p.qualifying_weighted;
        report.matched_weighted += p.matched_weighted;
        for (const auto& [r, c] : p.by_r)
            report.qualifying_by_r[r] += c;
        report.tables_checked += p.tables;
        report.complement_violations += p.complement_violations;
        report.padding_checked += p.padding_checked;
        report.padding_violations += p.padding_violations;
        std::move(p.mismatches.begin(), p.mismatches.end(), std::back_inserter(report.mismatches));
        std::move(p.support_violations.begin(), p.support_violations.end(),
                  std::back_inserter(report.support_violations));
        std::move(p.r_violations.begin(), p.r_violations.end(), std::back_inserter(report.r_violations));
    }
    std::sort(report.mismatches.begin(), report.mismatches.end(),
              [](const Mismatch& a, const Mismatch& b) { return a.record < b.record; });
    std::sort(report.support_violations.begin(), report.support_violations.end());
    std::sort(report.r_violations.begin(), report.r_violations.end());

    // Converse direction: every catalogued instance must realize its predicted unique r.
    SumsEngine engine(g);
    for (const auto& inst : index.catalog().instances) {
        engine.compute(inst.sequence);
        ++report.tables_checked;
        if (!engine.complement_identity_holds(sigma(inst.sequence)))
            ++report.complement_violations;
        auto lengths = engine.zero_lengths();
        if (lengths.size() != 1 || lengths.front() != inst.r)
            report.family_failures.push_back({inst, std::move(lengths)});
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace zerosum
