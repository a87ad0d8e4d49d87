#include "zerosum/format.hpp"

#include "zerosum/error.hpp"

#include <charconv>

namespace zerosum {

namespace {

std::uint64_t parse_uint(std::string_view text, std::string_view what)
{
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw UsageError("malformed " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

} // namespace

GroupSpec parse_group(std::string_view text)
{
    if (text.empty())
        throw UsageError("empty group spec");
    std::vector<std::uint32_t> orders;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find('x', pos);
        const auto factor = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        if (factor.size() < 2 || factor[0] != 'C')
            throw UsageError("malformed group spec '" + std::string(text) + "': expected C<n> factors joined by x");
        const auto m = parse_uint(factor.substr(1), "cyclic factor order");
        if (m < 2)
            throw UsageError("cyclic factor order must be at least 2 in '" + std::string(text) + "'");
        if (m > GroupSpec::max_order)
            throw UsageError("cyclic factor order too large in '" + std::string(text) + "'");
        orders.push_back(static_cast<std::uint32_t>(m));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return GroupSpec(std::move(orders));
}

Sequence parse_sequence(const GroupSpec& g, std::string_view text)
{
    Sequence s(g);
    std::size_t pos = 0;
    while (pos < text.size()) {
        // an atom ends at the first comma outside parentheses
        std::size_t end = pos;
        int depth = 0;
        while (end < text.size() && (depth > 0 || text[end] != ',')) {
            if (text[end] == '(')
                ++depth;
            else if (text[end] == ')')
                --depth;
            ++end;
        }
        const auto atom = text.substr(pos, end - pos);
        if (atom.empty())
            throw UsageError("empty atom in sequence '" + std::string(text) + "'");

        const auto caret = atom.rfind('^');
        const bool has_mult = caret != std::string_view::npos && atom.find(')', caret) == std::string_view::npos;
        const auto elem_text = has_mult ? atom.substr(0, caret) : atom;
        std::uint64_t mult = 1;
        if (has_mult)
            mult = parse_uint(atom.substr(caret + 1), "multiplicity");
        if (mult > GroupSpec::max_order * 64ULL)
            throw UsageError("multiplicity too large in '" + std::string(atom) + "'");

        std::vector<std::uint32_t> coords;
        if (!elem_text.empty() && elem_text.front() == '(') {
            if (elem_text.back() != ')')
                throw UsageError("unbalanced parentheses in '" + std::string(atom) + "'");
            auto inner = elem_text.substr(1, elem_text.size() - 2);
            std::size_t p = 0;
            while (true) {
                const auto comma = inner.find(',', p);
                const auto part = inner.substr(p, comma == std::string_view::npos ? std::string_view::npos : comma - p);
                const auto v = parse_uint(part, "coordinate");
                if (v > GroupSpec::max_order)
                    throw UsageError("coordinate out of range in '" + std::string(atom) + "'");
                coords.push_back(static_cast<std::uint32_t>(v));
                if (comma == std::string_view::npos)
                    break;
                p = comma + 1;
            }
        } else {
            if (g.rank() > 1)
                throw UsageError("element '" + std::string(elem_text) + "' must be a coordinate tuple over " +
                                 g.name());
            const auto v = parse_uint(elem_text, "element");
            if (v >= g.order())
                throw UsageError("element " + std::string(elem_text) + " out of range for " + g.name());
            coords.push_back(static_cast<std::uint32_t>(v));
        }
        Element e;
        if (g.rank() == 0) {
            if (coords.size() != 1 || coords[0] != 0)
                throw UsageError("the trivial group has only the element 0");
            e = g.zero();
        } else {
            e = g.element(coords);
        }
        s.append(e, static_cast<std::uint32_t>(mult));

        pos = end;
        if (pos < text.size()) {
            ++pos; // comma
            if (pos == text.size())
                throw UsageError("trailing comma in sequence '" + std::string(text) + "'");
        }
    }
    return s;
}

std::string render_element(const GroupSpec& g, Element e)
{
    if (g.rank() <= 1)
        return std::to_string(e.index);
    const auto c = g.coords(e);
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(c[i]);
    }
    return out + ")";
}

std::string render_sequence(const GroupSpec& g, std::span<const std::uint32_t> mult)
{
    std::string out;
    for (std::uint32_t i = 0; i < mult.size(); ++i) {
        if (mult[i] == 0)
            continue;
        if (!out.empty())
            out += ',';
        out += render_element(g, Element{i});
        if (mult[i] != 1)
            out += '^' + std::to_string(mult[i]);
    }
    return out;
}

nlohmann::json element_json(const GroupSpec& g, Element e)
{
    if (g.rank() <= 1)
        return e.index;
    return render_element(g, e);
}

} // namespace zerosum
