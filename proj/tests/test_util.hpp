#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "syzrank/polynomial.hpp"

namespace testutil {

// Builds a polynomial from (exponent vector, integer coefficient) pairs.
template <typename F>
syzrank::Polynomial<F> mk(const syzrank::RingPtr<F>& R,
                          std::vector<std::pair<std::vector<std::uint32_t>, long>> ts) {
    std::vector<typename syzrank::Polynomial<F>::Term> terms;
    for (auto& [e, c] : ts)
        terms.push_back({syzrank::Monomial(std::move(e)), R->field().from_int(c)});
    return syzrank::Polynomial<F>::from_terms(R, std::move(terms));
}

// Random polynomial with coefficients in [-9, 9] \ {0}.
template <typename F>
syzrank::Polynomial<F> random_poly(const syzrank::RingPtr<F>& R, std::mt19937& rng,
                                   std::uint32_t max_deg, std::size_t max_terms) {
    std::uniform_int_distribution<std::uint32_t> dg(0, max_deg);
    std::uniform_int_distribution<long> dc(-9, 9);
    std::uniform_int_distribution<std::size_t> dt(1, max_terms);
    std::vector<typename syzrank::Polynomial<F>::Term> terms;
    std::size_t count = dt(rng);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::uint32_t> exps(R->arity());
        for (auto& e : exps) e = dg(rng);
        long c = dc(rng);
        if (c == 0) c = 1;
        terms.push_back({syzrank::Monomial(std::move(exps)), R->field().from_int(c)});
    }
    return syzrank::Polynomial<F>::from_terms(R, std::move(terms));
}

// Random nonzero homogeneous polynomial of total degree exactly d.
template <typename F>
syzrank::Polynomial<F> random_homogeneous(const syzrank::RingPtr<F>& R, std::mt19937& rng,
                                          std::uint32_t d, std::size_t max_terms) {
    std::uniform_int_distribution<long> dc(-9, 9);
    std::uniform_int_distribution<std::size_t> dt(1, max_terms);
    std::uniform_int_distribution<std::size_t> dv(0, R->arity() - 1);
    std::vector<typename syzrank::Polynomial<F>::Term> terms;
    std::size_t count = dt(rng);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::uint32_t> exps(R->arity(), 0);
        for (std::uint32_t k = 0; k < d; ++k) exps[dv(rng)] += 1;
        long c = dc(rng);
        if (c == 0) c = 1;
        terms.push_back({syzrank::Monomial(std::move(exps)), R->field().from_int(c)});
    }
    auto f = syzrank::Polynomial<F>::from_terms(R, std::move(terms));
    if (f.is_zero()) return random_homogeneous(R, rng, d, max_terms);
    return f;
}

}  // namespace testutil
