#include "zerosum/sums.hpp"

#include "zerosum/error.hpp"

#include <bit>

namespace zerosum {

SumsEngine::SumsEngine(GroupSpec g) : group_(std::move(g)), words_(words_for(group_.order()))
{
    const auto n = group_.order();
    rotate_ = group_.rank() == 1 && n <= 64;
    mask_ = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    translations_.resize(n);
}

const std::vector<std::uint32_t>& SumsEngine::translation(std::uint32_t g)
{
    auto& t = translations_[g];
    if (t.empty()) {
        const auto n = group_.order();
        t.resize(n);
        for (std::uint32_t x = 0; x < n; ++x)
            t[x] = group_.add(Element{x}, Element{g}).index;
    }
    return t;
}

void SumsEngine::shift_into(const std::uint64_t* src, std::uint64_t* dst, std::uint32_t g)
{
    if (rotate_) {
        const std::uint64_t w = src[0];
        if (g == 0) {
            dst[0] |= w;
        } else {
            const auto n = group_.order();
            dst[0] |= ((w << g) | (w >> (n - g))) & mask_;
        }
        return;
    }
    const auto& perm = translation(g);
    for (std::size_t wi = 0; wi < words_; ++wi) {
        std::uint64_t bits = src[wi];
        while (bits != 0) {
            const auto x = static_cast<std::uint32_t>(wi * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
            const auto y = perm[x];
            dst[y >> 6] |= std::uint64_t{1} << (y & 63);
            bits &= bits - 1;
        }
    }
}

void SumsEngine::compute(std::span<const std::uint32_t> mult)
{
    if (mult.size() != group_.order())
        throw UsageError("multiplicity vector size does not match group order");
    std::size_t total = 0;
    for (auto m : mult)
        total += m;
    length_ = total;
    rows_.assign((total + 1) * words_, 0);
    row_ptr(0)[0] = 1; // {0}

    std::size_t filled = 0;
    for (std::uint32_t g = 0; g < mult.size(); ++g) {
        for (std::uint32_t copy = 0; copy < mult[g]; ++copy) {
            for (std::size_t l = filled + 1; l-- > 0;)
                shift_into(row_ptr(l), row_ptr(l + 1), g);
            ++filled;
        }
    }
}

std::size_t SumsEngine::row_size(std::size_t l) const noexcept
{
    std::size_t count = 0;
    const auto* row = row_ptr(l);
    for (std::size_t i = 0; i < words_; ++i)
        count += static_cast<std::size_t>(std::popcount(row[i]));
    return count;
}

ElementSet SumsEngine::row(std::size_t l) const
{
    if (l > length_)
        throw UsageError("row index beyond sequence length");
    ElementSet out(group_.order());
    const auto* row = row_ptr(l);
    for (std::size_t wi = 0; wi < words_; ++wi) {
        std::uint64_t bits = row[wi];
        while (bits != 0) {
            out.insert(Element{static_cast<std::uint32_t>(wi * 64 + static_cast<std::size_t>(std::countr_zero(bits)))});
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::size_t> SumsEngine::zero_lengths() const
{
    std::vector<std::size_t> out;
    for (std::size_t l = 1; l <= length_; ++l)
        if ((row_ptr(l)[0] & 1U) != 0)
            out.push_back(l);
    return out;
}

bool SumsEngine::complement_identity_holds(Element sigma) const
{
    const auto n = group_.order();
    for (std::size_t m = 0; m <= length_; ++m) {
        const std::size_t other = length_ - m;
        if (row_size(m) != row_size(other))
            return false;
        for (std::uint32_t x = 0; x < n; ++x) {
            if (row_contains(m, Element{x}) && !row_contains(other, group_.sub(sigma, Element{x})))
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

SumsByLength::SumsByLength(GroupSpec g, std::vector<ElementSet> rows, Element sigma)
    : group_(std::move(g)), rows_(std::move(rows)), sigma_(sigma)
{
    if (rows_.empty())
        throw UsageError("a sums table has at least row 0");
}

ElementSet SumsByLength::window(std::size_t lo, std::size_t hi) const
{
    if (lo < 1 || lo > hi || hi > max_length())
        throw UsageError("empty or out-of-range length window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "] for sequence of length " + std::to_string(max_length()));
    ElementSet out(group_.order());
    for (std::size_t l = lo; l <= hi; ++l)
        out |= rows_[l];
    return out;
}

ElementSet SumsByLength::all_sums() const
{
    if (max_length() == 0)
        return ElementSet(group_.order());
    return window(1, max_length());
}

bool SumsByLength::complement_identity_holds() const
{
    const std::size_t len = max_length();
    for (std::size_t m = 0; m <= len; ++m)
        if (rows_[m] != reflect(group_, rows_[len - m], sigma_))
            return false;
    return true;
}

SumsByLength sums_by_length(const Sequence& s)
{
    SumsEngine engine(s.group());
    engine.compute(s);
    std::vector<ElementSet> rows;
    rows.reserve(s.length() + 1);
    for (std::size_t l = 0; l <= s.length(); ++l)
        rows.push_back(engine.row(l));
    return SumsByLength(s.group(), std::move(rows), sigma(s));
}

ZeroSumProfile profile_from_lengths(std::vector<std::size_t> lengths)
{
    ZeroSumProfile p;
    p.lengths = std::move(lengths);
    if (p.lengths.size() == 1)
        p.unique_r = p.lengths.front();
    return p;
}

ZeroSumProfile zero_sum_profile(const SumsByLength& table)
{
    std::vector<std::size_t> lengths;
    for (std::size_t l = 1; l <= table.max_length(); ++l)
        if (table.row(l).contains(table.group().zero()))
            lengths.push_back(l);
    return profile_from_lengths(std::move(lengths));
}

ZeroSumProfile zero_sum_profile(const Sequence& s)
{
    SumsEngine engine(s.group());
    engine.compute(s);
    return profile_from_lengths(engine.zero_lengths());
}

ElementSet sigma_window(const Sequence& s, std::size_t lo, std::size_t hi)
{
    return sums_by_length(s).window(lo, hi);
}

std::vector<ElementSet> brute_force_table(const Sequence& s, std::size_t max_terms)
{
    const auto limit = std::min(max_terms, default_brute_force_terms);
    if (s.length() > limit)
        throw BudgetExceeded("brute-force subsequence enumeration capped at " + std::to_string(limit) +
                             " terms, sequence has " + std::to_string(s.length()));
    const auto& g = s.group();
    const auto terms = s.terms();
    const std::size_t k = terms.size();
    std::vector<ElementSet> rows(k + 1, ElementSet(g.order()));

    // Gray-code walk: consecutive subsets differ in exactly one term.
    Element sum = g.zero();
    std::uint64_t subset = 0;
    rows[0].insert(sum);
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        const int bit = std::countr_zero(i);
        const std::uint64_t flip = std::uint64_t{1} << bit;
        if ((subset & flip) != 0)
            sum = g.sub(sum, terms[static_cast<std::size_t>(bit)]);
        else
            sum = g.add(sum, terms[static_cast<std::size_t>(bit)]);
        subset ^= flip;
        rows[static_cast<std::size_t>(std::popcount(subset))].insert(sum);
    }
    return rows;
}

ElementSet brute_force_sums(const Sequence& s, std::size_t l, std::size_t max_terms)
{
    if (l > s.length())
        return ElementSet(s.group().order());
    return brute_force_table(s, max_terms)[l];
}

PaddingCheck check_padding_identities(const Sequence& s, std::size_t r)
{
    PaddingCheck out;
    const auto& g = s.group();
    const std::size_t len = s.length();
    if (r < 1 || r > len)
        throw UsageError("zero-sum length r outside [1, |S|]");
    const auto table = sums_by_length(s);
    const Element zero = g.zero();

    if (r >= 2) {
        out.lower_applicable = true;
        const auto direct = table.window(1, r - 1);
        Sequence padded = s;
        padded.append(zero, static_cast<std::uint32_t>(r - 2));
        const auto via_padding = sums_by_length(padded).row(r - 1);
        out.lower_holds = !direct.contains(zero) && direct == via_padding;
    }
    if (r + 1 <= len) {
        out.upper_applicable = true;
        const auto direct = table.window(r + 1, len);
        Sequence padded = s;
        padded.append(zero, static_cast<std::uint32_t>(len - r - 1));
        const auto padded_table = sums_by_length(padded);
        const auto via_padding = padded_table.row(len);
        const auto via_complement = reflect(g, padded_table.row(len - r - 1), sigma(s));
        out.upper_holds = !direct.contains(zero) && direct == via_padding && via_padding == via_complement;
    }
    return out;
}

} // namespace zerosum
