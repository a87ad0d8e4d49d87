#pragma once

#include "zerosum/sequence.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace zerosum {

/// `C<n>` factors joined by `x`: "C12", "C2xC4", "C2xC2xC2". Factors must be >= 2.
GroupSpec parse_group(std::string_view text);

/// Comma-separated `element[^mult]` atoms: "1^11,5" over C12, "(1,0)^3,(0,1)^5" over C2xC4.
/// The empty string is the empty sequence.
Sequence parse_sequence(const GroupSpec& g, std::string_view text);

/// Plain integer for one factor, "(a,b,...)" otherwise.
std::string render_element(const GroupSpec& g, Element e);
/// Inverse of parse_sequence, atoms in index order, "^1" omitted.
std::string render_sequence(const GroupSpec& g, std::span<const std::uint32_t> mult);
inline std::string render_sequence(const Sequence& s) { return render_sequence(s.group(), s.multiplicities()); }

/// JSON number for one factor, tuple string otherwise.
nlohmann::json element_json(const GroupSpec& g, Element e);

} // namespace zerosum
