#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace zerosum {

/// Canonical index of a group element in [0, n), mixed-radix over the factor list.
struct Element {
    std::uint32_t index = 0;

    friend auto operator<=>(const Element&, const Element&) = default;
};

/// Fixed-universe bit-vector of element indices.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::uint32_t universe);
    ElementSet(std::uint32_t universe, std::initializer_list<std::uint32_t> members);

    static ElementSet full(std::uint32_t universe);

    std::uint32_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool contains(Element e) const noexcept
    {
        return e.index < universe_ && ((words_[e.index >> 6] >> (e.index & 63)) & 1U) != 0;
    }
    void insert(Element e);
    void erase(Element e);
    void clear() noexcept;

    bool is_subset_of(const ElementSet& other) const;

    ElementSet& operator|=(const ElementSet& other);
    ElementSet& operator&=(const ElementSet& other);
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    std::vector<Element> elements() const;

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                f(Element{static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(bit))});
                bits &= bits - 1;
            }
        }
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::size_t hash() const noexcept;

private:
    void check_universe(const ElementSet& other) const;

    std::uint32_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t words_for(std::uint32_t universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

} // namespace zerosum
