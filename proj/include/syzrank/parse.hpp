#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "syzrank/point.hpp"
#include "syzrank/polynomial.hpp"

namespace syzrank {

// Input errors with the byte offset of the offending token.
struct parse_error : std::invalid_argument {
    std::size_t offset;
    parse_error(const std::string& what, std::size_t off)
        : std::invalid_argument(what + " at offset " + std::to_string(off)), offset(off) {}
};

// Grammar: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := ('-'|'+')* primary ('^' INT)?, primary := NUMBER | IDENT | '(' expr ')'.
// NUMBER is INT or INT/INT. No implicit multiplication.
Polynomial<RationalField> parse_polynomial(const std::string& text,
                                           const RingPtr<RationalField>& ring);

struct ParsedPoint {
    PointKind kind = PointKind::Affine;
    std::vector<Rational> coords;
};

// "[a : b : c]" is projective (must be nonzero); "(a, b, c)" is affine/Cox.
ParsedPoint parse_point(const std::string& text);

template <typename F>
Polynomial<F> convert_coefficients(const Polynomial<RationalField>& f, const RingPtr<F>& ring) {
    if (ring->arity() != f.ring()->arity())
        throw std::invalid_argument("convert_coefficients: arity mismatch");
    std::vector<typename Polynomial<F>::Term> terms;
    for (const auto& t : f.terms())
        terms.push_back({t.mono, ring->field().from_rational(t.coeff)});
    return Polynomial<F>::from_terms(ring, std::move(terms));
}

// Canonical text form; parse_polynomial(serialize_polynomial(f)) == f.
template <typename F>
std::string serialize_polynomial(const Polynomial<F>& f) {
    const F& K = f.ring()->field();
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string c = K.to_string(t.coeff);
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;

        std::vector<std::string> parts;
        if (mag != "1" || t.mono.degree() == 0) parts.push_back(mag);
        for (std::size_t i = 0; i < f.ring()->arity(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (!e) continue;
            std::string p = f.ring()->variable(i);
            if (e > 1) p += "^" + std::to_string(e);
            parts.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += "*";
            out += parts[i];
        }
    }
    return out;
}

}  // namespace syzrank
