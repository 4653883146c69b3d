#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpk/poly.hpp"

namespace dpk {

/// Parses integer literals, ring variables, `+ - * ^` and parentheses.
/// Over an extension field the symbol `t` (when not a ring variable)
/// denotes the field generator. Throws ParseError with a byte position.
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);

/// Line-oriented polynomial data: a header `p=<prime> vars=a,b,...`
/// followed by `name = <expression>` lines. Blank lines and lines starting
/// with `#` are ignored.
struct PolyData {
    RingPtr ring;
    std::vector<std::pair<std::string, MultiPoly>> entries;

    /// Throws ArgumentError when absent.
    const MultiPoly& get(const std::string& name) const;
    bool has(const std::string& name) const noexcept;
};

PolyData parse_poly_data(std::istream& in);
PolyData parse_poly_data(std::string_view text);
std::string format_poly_data(const PolyData& data);

}  // namespace dpk
