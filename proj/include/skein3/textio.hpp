#pragma once

#include <string>
#include <vector>

#include "skein3/braid_word.hpp"
#include "skein3/errors.hpp"
#include "skein3/half_laurent.hpp"
#include "skein3/tlink.hpp"

namespace skein3 {

/// Machine serialization of a polynomial: "h:c,h:c,..." with h the exponent
/// numerator in half units, ascending; the zero polynomial is the empty
/// string.  Round-trips exactly.
inline std::string serialize_poly(const HalfLaurent& p) {
    std::string s;
    for (const auto& [h, c] : p.terms()) {
        if (!s.empty()) s += ",";
        s += std::to_string(h) + ":" + c.str();
    }
    return s;
}

inline HalfLaurent parse_poly(const std::string& text) {
    HalfLaurent p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t colon = text.find(':', pos);
        if (colon == std::string::npos) throw SyntaxError("polynomial: expected 'halves:coeff' pairs");
        std::size_t comma = text.find(',', colon);
        if (comma == std::string::npos) comma = text.size();
        const int h = std::stoi(text.substr(pos, colon - pos));
        const Int c(text.substr(colon + 1, comma - colon - 1));
        p += HalfLaurent::term(h, c);
        pos = comma + (comma < text.size() ? 1 : 0);
    }
    return p;
}

/// Human rendering: terms by ascending exponent, "t^k" for integers,
/// "t^(k/2)" for half exponents.
inline std::string render_poly(const HalfLaurent& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [h, c] : p.terms()) {
        const bool neg = c < 0;
        const Int mag = abs(c);
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        first = false;
        std::string var;
        if (h == 0)
            var = "";
        else if (h == 2)
            var = "t";
        else if (h % 2 == 0)
            var = "t^" + std::to_string(h / 2);
        else
            var = "t^(" + std::to_string(h) + "/2)";
        if (var.empty())
            s += mag.str();
        else
            s += (mag == 1 ? "" : mag.str() + "*") + var;
    }
    return s;
}

/// Braid rendering in the parser grammar (round-trips through parse_braid).
inline std::string render_braid(const BraidWord& b) {
    std::string s = "B" + std::to_string(b.strands()) + ":";
    for (const Letter& l : b.letters()) {
        s += " s" + std::to_string(l.index);
        if (l.exponent != 1) s += "^" + std::to_string(l.exponent);
    }
    return s;
}

/// Canonical-form literal "beta(x,y,z)".
inline CanonicalForm3 parse_canonical(const std::string& text) {
    int x, y, z;
    if (std::sscanf(text.c_str(), "beta(%d,%d,%d)", &x, &y, &z) != 3)
        throw SyntaxError("canonical form: expected beta(x,y,z)");
    return CanonicalForm3{x, y, z};
}

} // namespace skein3
