#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzrank/errors.hpp"
#include "syzrank/groebner.hpp"
#include "syzrank/matrix.hpp"
#include "syzrank/point.hpp"
#include "syzrank/polynomial.hpp"

namespace syzrank {

struct LocalGermInvariants {
    ExtendedNat mu;
    ExtendedNat tau;
    std::string method;
};

struct TruncationResult {
    bool stable = false;
    std::uint64_t value = 0;
    std::uint32_t n_stable = 0;
};

namespace localdetail {

template <typename F>
bool vanishes_at_origin(const Polynomial<F>& g) {
    const F& K = g.ring()->field();
    std::vector<typename F::Element> origin(g.ring()->arity(), K.zero());
    return K.is_zero(g.evaluate(origin));
}

template <typename F>
std::vector<Polynomial<F>> jacobian_germ(const Polynomial<F>& g) {
    std::vector<Polynomial<F>> out;
    out.reserve(g.ring()->arity());
    for (std::size_t i = 0; i < g.ring()->arity(); ++i) out.push_back(g.partial(i));
    return out;
}

template <typename F>
ExtendedNat local_quotient_dimension(std::vector<Polynomial<F>> gens) {
    std::erase_if(gens, [](const Polynomial<F>& p) { return p.is_zero(); });
    if (gens.empty()) return ExtendedNat::inf();
    auto sb = standard_basis(gens, MonomialOrder::neg_grevlex());
    return quotient_dimension(sb);
}

}  // namespace localdetail

// Milnor number of the germ of g at the origin.
template <typename F>
ExtendedNat milnor(const Polynomial<F>& g) {
    if (!localdetail::vanishes_at_origin(g))
        throw std::invalid_argument("milnor: germ must vanish at the origin");
    return localdetail::local_quotient_dimension(localdetail::jacobian_germ(g));
}

// Tjurina number of the germ of g at the origin.
template <typename F>
ExtendedNat tjurina(const Polynomial<F>& g) {
    if (!localdetail::vanishes_at_origin(g))
        throw std::invalid_argument("tjurina: germ must vanish at the origin");
    auto gens = localdetail::jacobian_germ(g);
    gens.push_back(g);
    return localdetail::local_quotient_dimension(std::move(gens));
}

// Independent check of the local quotient dimension: the corank of K[x]/(I + m^N)
// stabilizes at the local dimension once m^N lands inside I locally, and a
// single plateau is already conclusive (Nakayama).
template <typename F>
TruncationResult truncation_oracle(const std::vector<Polynomial<F>>& gens, std::uint32_t n_cap) {
    if (gens.empty()) throw std::invalid_argument("truncation_oracle: empty generator list");
    RingPtr<F> R = gens.front().ring();
    const F& K = R->field();
    for (const auto& g : gens) {
        if (!g.ring()->same_structure(*R))
            throw std::invalid_argument("truncation_oracle: mixed rings");
        if (!localdetail::vanishes_at_origin(g))
            throw std::invalid_argument("truncation_oracle: generators must vanish at the origin");
    }
    const std::size_t n = R->arity();

    TruncationResult res;
    std::uint64_t prev = 0;
    bool have_prev = false;
    for (std::uint32_t N = 2; N <= n_cap; ++N) {
        std::vector<Monomial> basis;
        std::map<std::vector<std::uint32_t>, std::size_t> index;
        for (std::uint32_t d = 0; d < N; ++d)
            for (auto& m : monomials_of_degree(n, d)) {
                index.emplace(m.exponents(), basis.size());
                basis.push_back(std::move(m));
            }
        std::vector<std::vector<typename F::Element>> rows;
        for (const auto& g : gens) {
            for (const auto& m : basis) {
                std::vector<typename F::Element> row(basis.size(), K.zero());
                bool any = false;
                for (const auto& t : g.terms()) {
                    Monomial prod = t.mono.mul(m, R->exponent_limit());
                    if (prod.degree() >= N) continue;
                    row[index.at(prod.exponents())] = t.coeff;
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
        }
        Mat<typename F::Element> A(rows.size(), basis.size(), K.zero());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j) A(i, j) = rows[i][j];
        std::uint64_t corank = basis.size() - rank(K, A);
        if (have_prev && corank == prev) {
            res.stable = true;
            res.value = corank;
            res.n_stable = N;
            return res;
        }
        prev = corank;
        have_prev = true;
    }
    return res;
}

// Dehomogenizes f in the chart of the leading coordinate of p and moves the
// image of p to the origin.
template <typename F>
Polynomial<F> germ_at(const Polynomial<F>& f, const Point<F>& p) {
    RingPtr<F> R = f.ring();
    const F& K = R->field();
    if (p.coords.size() != R->arity()) throw std::invalid_argument("germ_at: arity mismatch");
    Point<F> q = normalize_projective(K, p);
    std::size_t chart = leading_coordinate(K, q);
    Polynomial<F> g = f.dehomogenize(chart);
    std::vector<typename F::Element> shift;
    shift.reserve(q.coords.size() - 1);
    for (std::size_t i = 0; i < q.coords.size(); ++i)
        if (i != chart) shift.push_back(q.coords[i]);
    return g.translate(shift);
}

// Runs both methods on a singular germ and insists they agree.
template <typename F>
LocalGermInvariants local_germ_invariants(const Polynomial<F>& g) {
    ExtendedNat mu = milnor(g);
    ExtendedNat tau = tjurina(g);
    if (mu.finite != tau.finite)
        throw internal_inconsistency("local invariants: milnor/tjurina finiteness mismatch");
    if (mu.finite && tau.value > mu.value)
        throw internal_inconsistency("local invariants: tjurina exceeds milnor");
    if (mu.finite) {
        long d = std::max<long>(g.total_degree(), 2);
        std::uint32_t cap = static_cast<std::uint32_t>(2 * d * d + 3);
        auto jac = localdetail::jacobian_germ(g);
        auto mu_check = truncation_oracle(jac, cap);
        auto with_g = jac;
        with_g.push_back(g);
        auto tau_check = truncation_oracle(with_g, cap);
        if (!mu_check.stable || mu_check.value != mu.value)
            throw internal_inconsistency("local invariants: milnor methods disagree");
        if (!tau_check.stable || tau_check.value != tau.value)
            throw internal_inconsistency("local invariants: tjurina methods disagree");
    }
    return LocalGermInvariants{mu, tau, "standard-basis"};
}

// Local invariants of the projective hypersurface V(f) at a singular point p.
template <typename F>
LocalGermInvariants invariants_at(const Polynomial<F>& f, const Point<F>& p) {
    RingPtr<F> R = f.ring();
    const F& K = R->field();
    if (p.coords.size() != R->arity())
        throw std::invalid_argument("invariants_at: arity mismatch");
    std::vector<typename F::Element> coords = p.coords;
    if (!K.is_zero(f.evaluate(coords)))
        throw std::invalid_argument("invariants_at: point not on the hypersurface");
    for (std::size_t i = 0; i < R->arity(); ++i)
        if (!K.is_zero(f.partial(i).evaluate(coords)))
            throw std::invalid_argument("invariants_at: point not singular");
    return local_germ_invariants(germ_at(f, p));
}

}  // namespace syzrank
