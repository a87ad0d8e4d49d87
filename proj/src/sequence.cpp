#include "zerosum/sequence.hpp"

#include "zerosum/error.hpp"

#include <algorithm>
#include <numeric>

namespace zerosum {

Sequence::Sequence(GroupSpec group) : group_(std::move(group)), mult_(group_.order(), 0) {}

Sequence::Sequence(GroupSpec group, Multiplicities mult) : group_(std::move(group)), mult_(std::move(mult))
{
    if (mult_.size() != group_.order())
        throw UsageError("multiplicity vector has " + std::to_string(mult_.size()) + " entries, group " +
                         group_.name() + " has " + std::to_string(group_.order()) + " elements");
    length_ = std::accumulate(mult_.begin(), mult_.end(), std::size_t{0});
}

Sequence Sequence::power(const GroupSpec& group, Element g, std::uint32_t k)
{
    Sequence s(group);
    s.append(g, k);
    return s;
}

Sequence Sequence::of(const GroupSpec& group, std::initializer_list<std::pair<Element, std::uint32_t>> atoms)
{
    Sequence s(group);
    for (const auto& [g, k] : atoms)
        s.append(g, k);
    return s;
}

std::uint32_t Sequence::multiplicity(Element g) const
{
    if (!group_.contains(g))
        throw UsageError("element not in " + group_.name());
    return mult_[g.index];
}

ElementSet Sequence::support() const
{
    ElementSet s(group_.order());
    for (std::uint32_t i = 0; i < mult_.size(); ++i)
        if (mult_[i] != 0)
            s.insert(Element{i});
    return s;
}

std::size_t Sequence::support_size() const noexcept
{
    return static_cast<std::size_t>(std::count_if(mult_.begin(), mult_.end(), [](auto m) { return m != 0; }));
}

std::vector<Element> Sequence::terms() const
{
    std::vector<Element> out;
    out.reserve(length_);
    for (std::uint32_t i = 0; i < mult_.size(); ++i)
        out.insert(out.end(), mult_[i], Element{i});
    return out;
}

Sequence& Sequence::append(Element g, std::uint32_t k)
{
    if (!group_.contains(g))
        throw UsageError("element not in " + group_.name());
    mult_[g.index] += k;
    length_ += k;
    return *this;
}

Sequence operator*(const Sequence& s, const Sequence& t)
{
    if (!(s.group_ == t.group_))
        throw UsageError("concatenating sequences over different groups");
    Multiplicities m(s.mult_);
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] += t.mult_[i];
    return Sequence(s.group_, std::move(m));
}

bool operator==(const Sequence& a, const Sequence& b) { return a.group_ == b.group_ && a.mult_ == b.mult_; }

bool operator<(const Sequence& a, const Sequence& b) { return a.mult_ < b.mult_; }

Element sigma(const Sequence& s)
{
    const auto& g = s.group();
    Element total = g.zero();
    const auto mult = s.multiplicities();
    for (std::uint32_t i = 0; i < mult.size(); ++i)
        if (mult[i] != 0)
            total = g.add(total, g.scalar_mul(mult[i], Element{i}));
    return total;
}

std::uint32_t max_multiplicity(const Sequence& s)
{
    const auto mult = s.multiplicities();
    return mult.empty() ? 0 : *std::max_element(mult.begin(), mult.end());
}

bool divides(const Sequence& sub, const Sequence& s)
{
    if (!(sub.group() == s.group()))
        throw UsageError("comparing sequences over different groups");
    const auto a = sub.multiplicities();
    const auto b = s.multiplicities();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Sequence remove(const Sequence& s, const Sequence& sub)
{
    if (!divides(sub, s))
        throw UsageError("cannot remove a sequence that is not a subsequence");
    Multiplicities m(s.multiplicities().begin(), s.multiplicities().end());
    const auto a = sub.multiplicities();
    for (std::size_t i = 0; i < m.size(); ++i)
        m[i] -= a[i];
    return Sequence(s.group(), std::move(m));
}

Sequence push_map(const Sequence& s, const std::function<Element(Element)>& f)
{
    Sequence out(s.group());
    const auto mult = s.multiplicities();
    for (std::uint32_t i = 0; i < mult.size(); ++i)
        if (mult[i] != 0)
            out.append(f(Element{i}), mult[i]);
    return out;
}

Sequence apply(const Automorphism& alpha, const Sequence& s)
{
    return push_map(s, [&](Element e) { return alpha(e); });
}

std::uint64_t multiset_count(std::uint64_t n, std::uint64_t length)
{
    if (n == 0)
        return length == 0 ? 1 : 0;
    // C(n-1+L, L) built incrementally: C(n-1+i, i) = C(n-2+i, i-1) * (n-1+i) / i
    unsigned __int128 c = 1;
    for (std::uint64_t i = 1; i <= length; ++i) {
        c = c * (n - 1 + i) / i;
        if (c > UINT64_MAX)
            return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(c);
}

// ---------------------------------------------------------------------------

OrbitCanonicalizer::OrbitCanonicalizer(const GroupSpec& g, std::uint32_t max_order)
    : OrbitCanonicalizer(zerosum::automorphisms(g, max_order))
{
}

OrbitCanonicalizer::OrbitCanonicalizer(std::vector<Automorphism> auts) : auts_(std::move(auts))
{
    inverse_.reserve(auts_.size());
    for (const auto& a : auts_) {
        std::vector<std::uint32_t> inv(a.image.size());
        for (std::uint32_t x = 0; x < a.image.size(); ++x)
            inv[a.image[x]] = x;
        inverse_.push_back(std::move(inv));
    }
}

bool OrbitCanonicalizer::is_canonical(std::span<const std::uint32_t> mult, std::size_t* stabilizer) const
{
    std::size_t fixed = 0;
    for (const auto& inv : inverse_) {
        // alpha(S) has multiplicity mult[alpha^{-1}(y)] at y.
        int cmp = 0;
        for (std::size_t y = 0; y < mult.size() && cmp == 0; ++y) {
            const auto image = mult[inv[y]];
            if (image < mult[y])
                cmp = -1;
            else if (image > mult[y])
                cmp = 1;
        }
        if (cmp < 0)
            return false;
        if (cmp == 0)
            ++fixed;
    }
    if (stabilizer != nullptr)
        *stabilizer = fixed;
    return true;
}

Multiplicities OrbitCanonicalizer::canonical_form(std::span<const std::uint32_t> mult) const
{
    Multiplicities best(mult.begin(), mult.end());
    Multiplicities img(mult.size());
    for (const auto& inv : inverse_) {
        for (std::size_t y = 0; y < mult.size(); ++y)
            img[y] = mult[inv[y]];
        if (img < best)
            best = img;
    }
    return best;
}

// ---------------------------------------------------------------------------

MultisetCursor::MultisetCursor(std::uint32_t slots, std::uint32_t length, std::span<const std::uint32_t> prefix)
    : mult_(slots, 0), fixed_(prefix.size())
{
    if (prefix.size() > slots)
        throw UsageError("multiset prefix longer than slot count");
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        mult_[i] = prefix[i];
        used += prefix[i];
    }
    if (used > length || (fixed_ == slots && used != length)) {
        done_ = true;
        free_total_ = 0;
        return;
    }
    free_total_ = static_cast<std::uint32_t>(length - used);
}

bool MultisetCursor::next()
{
    if (done_)
        return false;
    const std::size_t m = mult_.size();
    if (!started_) {
        started_ = true;
        if (fixed_ < m)
            mult_[fixed_] = free_total_;
        return true;
    }
    if (m - fixed_ <= 1) {
        done_ = true;
        return false;
    }
    const std::uint32_t tail = mult_[m - 1];
    mult_[m - 1] = 0;
    std::size_t i = m - 1;
    while (i-- > fixed_) {
        if (mult_[i] != 0) {
            --mult_[i];
            mult_[i + 1] = tail + 1;
            return true;
        }
    }
    done_ = true;
    return false;
}

MultisetStream::MultisetStream(GroupSpec g, std::uint32_t length, EnumerationOptions options)
    : group_(std::move(g)), cursor_(group_.order(), length)
{
    if (options.up_to_automorphism)
        canon_.emplace(group_);
}

std::optional<Sequence> MultisetStream::next()
{
    while (cursor_.next()) {
        ++scanned_;
        const auto mult = cursor_.current();
        if (canon_ && !canon_->is_canonical(mult))
            continue;
        return Sequence(group_, Multiplicities(mult.begin(), mult.end()));
    }
    return std::nullopt;
}

MultisetStream enumerate_multisets(const GroupSpec& g, std::uint32_t length, EnumerationOptions options)
{
    const auto count = multiset_count(g.order(), length);
    if (count > options.budget)
        throw BudgetExceeded("enumerating " + std::to_string(count) + " multisets of length " +
                             std::to_string(length) + " over " + g.name() + " exceeds budget " +
                             std::to_string(options.budget));
    return MultisetStream(g, length, options);
}

} // namespace zerosum
