#pragma once

#include <cstddef>
#include <stdexcept>

#include "syzrank/monomial.hpp"

namespace syzrank {

// Term orders on monomials. NegGrevlex is the local order used for
// standard bases (germs at the origin); the others are global.
// Block(k) eliminates the first k variables: it compares the leading
// block by grevlex first, then the tail block.
struct MonomialOrder {
    enum class Kind { Grevlex, Lex, NegGrevlex, Block };

    Kind kind = Kind::Grevlex;
    std::size_t block = 0;  // Block only: size of the eliminated leading block

    static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder neg_grevlex() { return {Kind::NegGrevlex, 0}; }
    static MonomialOrder block_elim(std::size_t k) { return {Kind::Block, k}; }

    bool is_global() const { return kind != Kind::NegGrevlex; }
    bool operator==(const MonomialOrder& o) const = default;
};

namespace detail {

// grevlex on an index range [lo, hi): higher degree wins; on ties the
// smaller exponent at the last differing position wins.
inline int cmp_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                             std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.exponent(i);
        db += b.exponent(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.arity(); ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
    return 0;
}

}  // namespace detail

// Returns -1, 0, 1 for a < b, a == b, a > b under ord.
inline int compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
    if (a.arity() != b.arity()) throw std::invalid_argument("order: arity mismatch");
    switch (ord.kind) {
        case MonomialOrder::Kind::Grevlex:
            return detail::cmp_grevlex_range(a, b, 0, a.arity());
        case MonomialOrder::Kind::Lex:
            return detail::cmp_lex(a, b);
        case MonomialOrder::Kind::NegGrevlex: {
            // lower total degree is larger; ties broken as in grevlex
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? -1 : 1;
            return detail::cmp_grevlex_range(a, b, 0, a.arity());
        }
        case MonomialOrder::Kind::Block: {
            if (ord.block > a.arity()) throw std::invalid_argument("order: bad block size");
            int c = detail::cmp_grevlex_range(a, b, 0, ord.block);
            if (c != 0) return c;
            return detail::cmp_grevlex_range(a, b, ord.block, a.arity());
        }
    }
    throw std::logic_error("unreachable");
}

// Position-over-term order on (monomial, component) pairs: a lower
// component index always wins, components tie-break by the base order.
struct ModuleOrder {
    MonomialOrder base;

    static ModuleOrder pot(MonomialOrder base) { return {base}; }
    bool operator==(const ModuleOrder& o) const = default;
};

inline int compare(const Monomial& ma, std::size_t ca, const Monomial& mb, std::size_t cb,
                   const ModuleOrder& ord) {
    if (ca != cb) return ca > cb ? -1 : 1;
    return compare(ma, mb, ord.base);
}

}  // namespace syzrank
