#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzrank/groebner.hpp"
#include "syzrank/local_invariants.hpp"
#include "syzrank/polynomial.hpp"
#include "syzrank/projective.hpp"
#include "syzrank/syzygy.hpp"

namespace syzrank {

// Ideal of Z_f in the product of two projective spaces, written in the
// original x-block plus a fresh u-block.
template <typename F>
struct BigradedIdeal {
    RingPtr<F> ring;
    std::size_t block = 0;
    std::vector<Polynomial<F>> generators;
};

// One generator per syzygy column: the pairing of the column with the
// u-block. Zero columns contribute nothing.
template <typename F>
BigradedIdeal<F> zf_ideal(const SyzygyMatrix<F>& M) {
    RingPtr<F> R = M.ring;
    const std::size_t m = R->arity();
    if (M.rows() != m)
        throw std::invalid_argument("zf_ideal: row count must match the variable count");

    std::string prefix = "u";
    for (bool clash = true; clash;) {
        clash = false;
        for (std::size_t i = 0; i < m; ++i) {
            std::string cand = prefix + "_" + std::to_string(i);
            for (std::size_t j = 0; j < m; ++j)
                if (R->variable(j) == cand) clash = true;
        }
        if (clash) prefix += "u";
    }
    std::vector<std::string> vars(R->variables());
    std::vector<std::size_t> ximage;
    for (std::size_t i = 0; i < m; ++i) ximage.push_back(i);
    for (std::size_t i = 0; i < m; ++i) vars.push_back(prefix + "_" + std::to_string(i));

    BigradedIdeal<F> Z;
    Z.ring = make_ring(R->field(), vars);
    Z.block = m;
    for (const auto& col : M.columns) {
        Polynomial<F> g = Polynomial<F>::zero(Z.ring);
        for (std::size_t i = 0; i < m; ++i) {
            if (col.components[i].is_zero()) continue;
            g = g + map_variables(col.components[i], Z.ring, ximage) *
                        Polynomial<F>::variable(Z.ring, m + i);
        }
        if (!g.is_zero()) Z.generators.push_back(std::move(g));
    }
    return Z;
}

// Global SEH test: the incidence quadric must vanish on Z_f cut down to D.
// Bilinearity makes the affine-cone radical test sufficient.
template <typename F>
bool global_seh_check(const Polynomial<F>& f) {
    auto M = first_syzygies(jacobian(f));
    auto Z = zf_ideal(M);
    const std::size_t m = Z.block;

    Polynomial<F> quadric = Polynomial<F>::zero(Z.ring);
    for (std::size_t i = 0; i < m; ++i)
        quadric = quadric +
                  Polynomial<F>::variable(Z.ring, i) * Polynomial<F>::variable(Z.ring, m + i);

    std::vector<std::size_t> ximage;
    for (std::size_t i = 0; i < m; ++i) ximage.push_back(i);
    auto gens = Z.generators;
    gens.push_back(map_variables(f, Z.ring, ximage));
    return radical_membership(quadric, gens);
}

// Sum of mu - tau over the singular points of a plane curve.
template <typename F>
long discrepancy_sum(const Polynomial<F>& f, const std::vector<Point<F>>& singular_points) {
    if (f.ring()->arity() != 3)
        throw std::invalid_argument("discrepancy_sum: plane curves only");
    long total = 0;
    for (const auto& p : singular_points) {
        auto inv = invariants_at(f, p);
        if (!inv.mu.finite)
            throw std::invalid_argument("discrepancy_sum: non-isolated singularity");
        total += static_cast<long>(inv.mu.value) - static_cast<long>(inv.tau.value);
    }
    return total;
}

}  // namespace syzrank
