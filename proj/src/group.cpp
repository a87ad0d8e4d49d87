#include "zerosum/group.hpp"

#include "zerosum/error.hpp"

#include <algorithm>
#include <numeric>

namespace zerosum {

struct GroupSpec::Tables {
    std::vector<std::uint32_t> orders;
    std::vector<std::uint32_t> strides;
    std::uint32_t n = 1;
    // Full addition table only for small groups; larger ones add digit-wise.
    std::vector<std::uint32_t> add;
    std::vector<std::uint32_t> neg;

    static constexpr std::uint32_t table_cap = 1024;

    std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const
    {
        std::uint32_t out = 0;
        for (std::size_t i = orders.size(); i-- > 0;) {
            const std::uint32_t m = orders[i];
            const std::uint32_t da = (a / strides[i]) % m;
            const std::uint32_t db = (b / strides[i]) % m;
            out += ((da + db) % m) * strides[i];
        }
        return out;
    }

    std::uint32_t neg_digits(std::uint32_t a) const
    {
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) {
            const std::uint32_t m = orders[i];
            const std::uint32_t d = (a / strides[i]) % m;
            out += ((m - d) % m) * strides[i];
        }
        return out;
    }
};

namespace {

std::shared_ptr<const GroupSpec::Tables> build_tables(std::vector<std::uint32_t> orders)
{
    auto t = std::make_shared<GroupSpec::Tables>();
    std::uint64_t n = 1;
    for (auto m : orders) {
        if (m < 2)
            throw UsageError("cyclic factor order must be at least 2, got " + std::to_string(m));
        n *= m;
        if (n > GroupSpec::max_order)
            throw BudgetExceeded("group order exceeds " + std::to_string(GroupSpec::max_order));
    }
    t->orders = std::move(orders);
    t->n = static_cast<std::uint32_t>(n);
    t->strides.assign(t->orders.size(), 1);
    for (std::size_t i = t->orders.size(); i-- > 1;)
        t->strides[i - 1] = t->strides[i] * t->orders[i];

    t->neg.resize(t->n);
    for (std::uint32_t a = 0; a < t->n; ++a)
        t->neg[a] = t->neg_digits(a);
    if (t->n <= GroupSpec::Tables::table_cap) {
        t->add.resize(static_cast<std::size_t>(t->n) * t->n);
        for (std::uint32_t a = 0; a < t->n; ++a)
            for (std::uint32_t b = 0; b < t->n; ++b)
                t->add[static_cast<std::size_t>(a) * t->n + b] = t->add_digits(a, b);
    }
    return t;
}

} // namespace

GroupSpec::GroupSpec() : tables_(build_tables({})) {}

GroupSpec::GroupSpec(std::vector<std::uint32_t> orders) : tables_(build_tables(std::move(orders))) {}

std::span<const std::uint32_t> GroupSpec::orders() const noexcept { return tables_->orders; }

std::uint32_t GroupSpec::order() const noexcept { return tables_->n; }

void GroupSpec::check(Element e) const
{
    if (e.index >= tables_->n)
        throw UsageError("element index " + std::to_string(e.index) + " invalid for " + name());
}

Element GroupSpec::element(std::uint32_t index) const
{
    check(Element{index});
    return Element{index};
}

Element GroupSpec::element(std::span<const std::uint32_t> coords) const
{
    if (coords.size() != tables_->orders.size())
        throw UsageError("expected " + std::to_string(tables_->orders.size()) + " coordinates for " + name());
    std::uint32_t index = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= tables_->orders[i])
            throw UsageError("coordinate " + std::to_string(coords[i]) + " out of range for factor C" +
                             std::to_string(tables_->orders[i]));
        index += coords[i] * tables_->strides[i];
    }
    return Element{index};
}

std::vector<std::uint32_t> GroupSpec::coords(Element e) const
{
    check(e);
    std::vector<std::uint32_t> out(tables_->orders.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = (e.index / tables_->strides[i]) % tables_->orders[i];
    return out;
}

Element GroupSpec::add(Element a, Element b) const
{
    check(a);
    check(b);
    const auto& t = *tables_;
    if (!t.add.empty())
        return Element{t.add[static_cast<std::size_t>(a.index) * t.n + b.index]};
    return Element{t.add_digits(a.index, b.index)};
}

Element GroupSpec::neg(Element a) const
{
    check(a);
    return Element{tables_->neg[a.index]};
}

Element GroupSpec::scalar_mul(long long k, Element a) const
{
    check(a);
    const auto& t = *tables_;
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < t.orders.size(); ++i) {
        const long long m = t.orders[i];
        const long long d = (a.index / t.strides[i]) % m;
        const long long km = ((k % m) + m) % m;
        out += static_cast<std::uint32_t>((km * d) % m) * t.strides[i];
    }
    return Element{out};
}

std::uint32_t GroupSpec::order_of(Element a) const
{
    const auto c = coords(a);
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::uint64_t m = tables_->orders[i];
        result = std::lcm(result, m / std::gcd<std::uint64_t>(c[i], m));
    }
    return static_cast<std::uint32_t>(result);
}

std::vector<Element> GroupSpec::elements() const
{
    std::vector<Element> out(tables_->n);
    for (std::uint32_t i = 0; i < tables_->n; ++i)
        out[i] = Element{i};
    return out;
}

std::string GroupSpec::name() const
{
    if (tables_->orders.empty())
        return "C1";
    std::string s;
    for (std::size_t i = 0; i < tables_->orders.size(); ++i) {
        if (i != 0)
            s += 'x';
        s += 'C' + std::to_string(tables_->orders[i]);
    }
    return s;
}

bool operator==(const GroupSpec& a, const GroupSpec& b)
{
    return a.tables_ == b.tables_ || a.tables_->orders == b.tables_->orders;
}

// ---------------------------------------------------------------------------

bool is_subgroup(const GroupSpec& g, const ElementSet& s)
{
    if (s.universe() != g.order() || !s.contains(g.zero()))
        return false;
    bool closed = true;
    s.for_each([&](Element a) {
        if (!closed)
            return;
        if (!s.contains(g.neg(a))) {
            closed = false;
            return;
        }
        s.for_each([&](Element b) {
            if (closed && !s.contains(g.add(a, b)))
                closed = false;
        });
    });
    return closed;
}

Subgroup Subgroup::verify(const GroupSpec& g, ElementSet members, std::vector<Element> generators)
{
    if (!is_subgroup(g, members))
        throw UsageError("element set is not a subgroup of " + g.name());
    return Subgroup(std::move(members), std::move(generators));
}

ElementSet translate(const GroupSpec& g, const ElementSet& a, Element by)
{
    ElementSet out(g.order());
    a.for_each([&](Element x) { out.insert(g.add(x, by)); });
    return out;
}

ElementSet sumset(const GroupSpec& g, const ElementSet& a, const ElementSet& b)
{
    if (a.empty() || b.empty())
        throw UsageError("sumset of an empty set");
    ElementSet out(g.order());
    b.for_each([&](Element y) { out |= translate(g, a, y); });
    return out;
}

ElementSet reflect(const GroupSpec& g, const ElementSet& a, Element s)
{
    ElementSet out(g.order());
    a.for_each([&](Element x) { out.insert(g.sub(s, x)); });
    return out;
}

std::vector<std::uint64_t> rep_counts(const GroupSpec& g, const ElementSet& a, const ElementSet& b)
{
    if (a.empty() || b.empty())
        throw UsageError("representation count over an empty set");
    std::vector<std::uint64_t> counts(g.order(), 0);
    a.for_each([&](Element x) { b.for_each([&](Element y) { ++counts[g.add(x, y).index]; }); });
    return counts;
}

std::uint64_t rep_count(const GroupSpec& g, const ElementSet& a, const ElementSet& b, Element x)
{
    if (a.empty() || b.empty())
        throw UsageError("representation count over an empty set");
    std::uint64_t count = 0;
    a.for_each([&](Element y) {
        if (b.contains(g.sub(x, y)))
            ++count;
    });
    return count;
}

Subgroup cyclic_subgroup(const GroupSpec& g, Element a)
{
    ElementSet members(g.order());
    Element cur = g.zero();
    do {
        members.insert(cur);
        cur = g.add(cur, a);
    } while (cur != g.zero());
    return Subgroup::verify(g, std::move(members), {a});
}

Subgroup stabilizer(const GroupSpec& g, const ElementSet& a)
{
    if (a.empty())
        throw UsageError("stabilizer of an empty set");
    ElementSet members(g.order());
    for (Element x : g.elements())
        if (translate(g, a, x) == a)
            members.insert(x);
    return Subgroup::verify(g, std::move(members));
}

CosetPartition cosets(const GroupSpec& g, const Subgroup& h)
{
    if (!is_subgroup(g, h.members()))
        throw UsageError("coset decomposition needs a subgroup");
    constexpr std::uint32_t unassigned = ~std::uint32_t{0};
    CosetPartition p;
    p.label.assign(g.order(), unassigned);
    p.coset_size = h.size();
    for (Element x : g.elements()) {
        if (p.label[x.index] != unassigned)
            continue;
        const auto id = static_cast<std::uint32_t>(p.representative.size());
        p.representative.push_back(x);
        h.members().for_each([&](Element y) { p.label[g.add(x, y).index] = id; });
    }
    return p;
}

std::vector<Automorphism> automorphisms(const GroupSpec& g, std::uint32_t max_order)
{
    const std::uint32_t n = g.order();
    if (n > max_order)
        throw BudgetExceeded("automorphism enumeration capped at order " + std::to_string(max_order) + ", group " +
                             g.name() + " has order " + std::to_string(n));
    const auto orders = g.orders();
    const std::size_t k = orders.size();

    // Candidate images for each basis vector e_i: elements whose order divides orders[i].
    std::vector<std::vector<Element>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (Element y : g.elements())
            if (orders[i] % g.order_of(y) == 0)
                candidates[i].push_back(y);

    std::vector<std::vector<std::uint32_t>> all_coords(n);
    for (Element x : g.elements())
        all_coords[x.index] = g.coords(x);

    std::vector<Automorphism> out;
    std::vector<std::size_t> pick(k, 0);
    std::vector<char> seen(n);
    while (true) {
        Automorphism alpha;
        alpha.image.resize(n);
        std::fill(seen.begin(), seen.end(), 0);
        bool bijective = true;
        for (std::uint32_t x = 0; x < n && bijective; ++x) {
            Element img = g.zero();
            for (std::size_t i = 0; i < k; ++i)
                img = g.add(img, g.scalar_mul(all_coords[x][i], candidates[i][pick[i]]));
            if (seen[img.index])
                bijective = false;
            seen[img.index] = 1;
            alpha.image[x] = img.index;
        }
        if (bijective)
            out.push_back(std::move(alpha));

        std::size_t pos = 0;
        while (pos < k && ++pick[pos] == candidates[pos].size())
            pick[pos++] = 0;
        if (pos == k)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace zerosum

namespace zerosum {

std::vector<Element> group_generators(const GroupSpec& g)
{
    std::vector<Element> out;
    for (Element x : g.elements())
        if (g.order_of(x) == g.order())
            out.push_back(x);
    return out;
}

bool is_cyclic(const GroupSpec& g)
{
    for (Element x : g.elements())
        if (g.order_of(x) == g.order())
            return true;
    return false;
}

} // namespace zerosum
