#include "zerosum/element_set.hpp"

#include "zerosum/error.hpp"

#include <string>

namespace zerosum {

ElementSet::ElementSet(std::uint32_t universe)
    : universe_(universe), words_(words_for(universe), 0)
{
}

ElementSet::ElementSet(std::uint32_t universe, std::initializer_list<std::uint32_t> members)
    : ElementSet(universe)
{
    for (auto m : members)
        insert(Element{m});
}

ElementSet ElementSet::full(std::uint32_t universe)
{
    ElementSet s(universe);
    for (auto& w : s.words_)
        w = ~std::uint64_t{0};
    if (universe % 64 != 0 && !s.words_.empty())
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    return s;
}

std::size_t ElementSet::size() const noexcept
{
    std::size_t total = 0;
    for (auto w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool ElementSet::empty() const noexcept
{
    for (auto w : words_)
        if (w != 0)
            return false;
    return true;
}

void ElementSet::insert(Element e)
{
    if (e.index >= universe_)
        throw UsageError("element index " + std::to_string(e.index) + " outside universe of size " +
                         std::to_string(universe_));
    words_[e.index >> 6] |= std::uint64_t{1} << (e.index & 63);
}

void ElementSet::erase(Element e)
{
    if (e.index < universe_)
        words_[e.index >> 6] &= ~(std::uint64_t{1} << (e.index & 63));
}

void ElementSet::clear() noexcept
{
    for (auto& w : words_)
        w = 0;
}

void ElementSet::check_universe(const ElementSet& other) const
{
    if (universe_ != other.universe_)
        throw UsageError("element sets over different universes");
}

bool ElementSet::is_subset_of(const ElementSet& other) const
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if ((words_[i] & ~other.words_[i]) != 0)
            return false;
    return true;
}

ElementSet& ElementSet::operator|=(const ElementSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other)
{
    check_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

std::vector<Element> ElementSet::elements() const
{
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
}

std::size_t ElementSet::hash() const noexcept
{
    std::size_t h = universe_;
    for (auto w : words_)
        h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ULL;
    return h;
}

} // namespace zerosum
