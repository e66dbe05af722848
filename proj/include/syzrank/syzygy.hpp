#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "syzrank/groebner.hpp"
#include "syzrank/matrix.hpp"
#include "syzrank/point.hpp"

namespace syzrank {

// Columns generate ker(R^k -> R, e_i -> g_i) for the stored generators.
template <typename F>
struct SyzygyMatrix {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> generators;
    std::vector<ModuleElement<F>> columns;
    std::vector<std::optional<DegreeVector>> column_degrees;

    std::size_t rows() const { return generators.size(); }
    std::size_t cols() const { return columns.size(); }
};

// M'_f together with the Euler column(s): M_f = [base | euler].
template <typename F>
struct AugmentedSyzygyMatrix {
    SyzygyMatrix<F> base;
    std::vector<ModuleElement<F>> euler_columns;
    std::vector<DegreeVector> euler_degrees;
};

namespace syzdetail {

template <typename F>
std::optional<DegreeVector> column_degree(const ModuleElement<F>& col,
                                          const std::vector<Polynomial<F>>& gens) {
    const RingPtr<F>& R = col.ring();
    if (R->standard_graded()) {
        // entry-degree convention: all nonzero entries share a total degree
        std::optional<DegreeVector> d;
        for (const auto& a : col.components) {
            if (a.is_zero()) continue;
            auto da = a.homogeneous_degree();
            if (!da) return std::nullopt;
            if (d && *d != *da) return std::nullopt;
            d = da;
        }
        return d;
    }
    // Pic grading: record the relation degree deg(a_i) + deg(g_i)
    std::optional<DegreeVector> gamma;
    for (std::size_t i = 0; i < col.components.size(); ++i) {
        const auto& a = col.components[i];
        if (a.is_zero()) continue;
        auto da = a.homogeneous_degree();
        auto dg = gens[i].homogeneous_degree();
        if (!da || !dg) return std::nullopt;
        DegreeVector g(da->size());
        for (std::size_t k = 0; k < g.size(); ++k) g[k] = (*da)[k] + (*dg)[k];
        if (gamma && *gamma != g) return std::nullopt;
        gamma = g;
    }
    return gamma;
}

template <typename F>
std::string column_text(const ModuleElement<F>& col) {
    std::ostringstream os;
    for (const auto& c : col.components) os << c.to_string() << ";";
    return os.str();
}

}  // namespace syzdetail

template <typename F>
SyzygyMatrix<F> first_syzygies(const std::vector<Polynomial<F>>& gens) {
    if (gens.empty()) throw std::invalid_argument("first_syzygies: empty generator list");
    const RingPtr<F>& R = gens.front().ring();
    const F& K = R->field();
    const std::size_t k = gens.size();

    // Groebner basis of {(g_i, e_i)} in R^{1+k} under POT elimination of
    // component 0; elements with zero 0-th component project to syzygies.
    std::vector<ModuleElement<F>> lifted;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Polynomial<F>> comps(1 + k, Polynomial<F>::zero(R));
        comps[0] = gens[i];
        comps[1 + i] = Polynomial<F>::constant(R, K.one());
        lifted.push_back(make_module_element(std::move(comps)));
    }
    auto basis = buchberger(lifted, ModuleOrder::pot(MonomialOrder::grevlex()));

    SyzygyMatrix<F> M;
    M.ring = R;
    M.generators = gens;
    for (const auto& e : basis.elements) {
        if (!e.components[0].is_zero()) continue;
        std::vector<Polynomial<F>> col(e.components.begin() + 1, e.components.end());
        // exactness check: the column annihilates the generators
        Polynomial<F> sum = Polynomial<F>::zero(R);
        for (std::size_t i = 0; i < k; ++i) sum = sum + col[i] * gens[i];
        if (!sum.is_zero()) throw std::logic_error("syzygy column fails exactness");
        M.columns.push_back(ModuleElement<F>{std::move(col)});
    }
    for (const auto& c : M.columns) M.column_degrees.push_back(syzdetail::column_degree(c, gens));

    // deterministic column order: (degree, serialized text)
    std::vector<std::size_t> idx(M.columns.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::vector<std::string> texts;
    for (const auto& c : M.columns) texts.push_back(syzdetail::column_text(c));
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        DegreeVector da = M.column_degrees[a].value_or(DegreeVector{});
        DegreeVector db = M.column_degrees[b].value_or(DegreeVector{});
        if (da != db) return da < db;
        return texts[a] < texts[b];
    });
    SyzygyMatrix<F> out;
    out.ring = R;
    out.generators = gens;
    for (auto i : idx) {
        out.columns.push_back(std::move(M.columns[i]));
        out.column_degrees.push_back(std::move(M.column_degrees[i]));
    }
    return out;
}

template <typename F>
Mat<typename F::Element> evaluate_matrix(const SyzygyMatrix<F>& M, const Point<F>& P) {
    const F& K = M.ring->field();
    if (P.coords.size() != M.ring->arity())
        throw std::invalid_argument("evaluate_matrix: arity mismatch");
    if (P.kind != PointKind::Affine && is_zero_vector(K, P.coords))
        throw std::invalid_argument("zero representative for a projective point");
    Mat<typename F::Element> A(M.rows(), M.cols(), K.zero());
    for (std::size_t j = 0; j < M.cols(); ++j)
        for (std::size_t i = 0; i < M.rows(); ++i)
            A(i, j) = M.columns[j].components[i].evaluate(P.coords);
    return A;
}

template <typename F>
Mat<typename F::Element> evaluate_matrix(const AugmentedSyzygyMatrix<F>& M, const Point<F>& P) {
    const F& K = M.base.ring->field();
    Mat<typename F::Element> base = evaluate_matrix(M.base, P);
    Mat<typename F::Element> A(base.rows(), base.cols() + M.euler_columns.size(), K.zero());
    for (std::size_t i = 0; i < base.rows(); ++i)
        for (std::size_t j = 0; j < base.cols(); ++j) A(i, j) = base(i, j);
    for (std::size_t j = 0; j < M.euler_columns.size(); ++j)
        for (std::size_t i = 0; i < base.rows(); ++i)
            A(i, base.cols() + j) = M.euler_columns[j].components[i].evaluate(P.coords);
    return A;
}

struct OracleRank {
    std::size_t rank = 0;
    bool stable = false;
    std::uint32_t cap_used = 0;
};

// Independent cross-check: for each slice e, solve the exact linear system
// "sum a_i g_i = 0 in total degree e + max deg(g_i)" (so deg a_i adjusts per
// generator), evaluate the nullspace columns at P, and accumulate the rank.
// Stable when the rank did not grow in the last two degree increments.
template <typename F>
OracleRank bounded_degree_syzygy_oracle(const std::vector<Polynomial<F>>& gens, const Point<F>& P,
                                        std::uint32_t degree_cap) {
    if (gens.empty()) throw std::invalid_argument("oracle: empty generator list");
    const RingPtr<F>& R = gens.front().ring();
    const F& K = R->field();
    const std::size_t n = R->arity(), k = gens.size();
    if (!R->standard_graded()) throw std::invalid_argument("oracle: standard grading only");
    std::vector<std::uint32_t> d(k);
    std::uint32_t maxd = 0;
    for (std::size_t i = 0; i < k; ++i) {
        auto di = gens[i].homogeneous_degree();
        if (!di) throw std::invalid_argument("oracle: inhomogeneous input");
        d[i] = static_cast<std::uint32_t>((*di)[0]);
        maxd = std::max(maxd, d[i]);
    }

    std::vector<std::vector<typename F::Element>> accumulated;
    std::vector<std::size_t> rank_history;
    for (std::uint32_t e = 0; e <= degree_cap; ++e) {
        const std::uint32_t target = e + maxd;
        auto rows_mono = monomials_of_degree(n, target);
        std::map<std::vector<std::uint32_t>, std::size_t> row_index;
        for (std::size_t r = 0; r < rows_mono.size(); ++r)
            row_index[rows_mono[r].exponents()] = r;

        std::vector<std::vector<Monomial>> cols_mono(k);
        std::vector<std::size_t> offset(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) {
            cols_mono[i] = monomials_of_degree(n, target - d[i]);
            offset[i + 1] = offset[i] + cols_mono[i].size();
        }

        Mat<typename F::Element> A(rows_mono.size(), offset[k], K.zero());
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t m = 0; m < cols_mono[i].size(); ++m)
                for (const auto& t : gens[i].terms()) {
                    Monomial prod = cols_mono[i][m].mul(t.mono, R->exponent_limit());
                    std::size_t r = row_index.at(prod.exponents());
                    std::size_t c = offset[i] + m;
                    A(r, c) = K.add(A(r, c), t.coeff);
                }
        for (const auto& v : nullspace(K, A)) {
            std::vector<typename F::Element> col(k, K.zero());
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t m = 0; m < cols_mono[i].size(); ++m) {
                    const auto& c = v[offset[i] + m];
                    if (K.is_zero(c)) continue;
                    typename F::Element mv = K.one();
                    for (std::size_t x = 0; x < n; ++x)
                        mv = K.mul(mv, Polynomial<F>::power(K, P.coords[x],
                                                            cols_mono[i][m].exponent(x)));
                    col[i] = K.add(col[i], K.mul(c, mv));
                }
            accumulated.push_back(std::move(col));
        }
        Mat<typename F::Element> span(k, accumulated.size(), K.zero());
        for (std::size_t j = 0; j < accumulated.size(); ++j)
            for (std::size_t i = 0; i < k; ++i) span(i, j) = accumulated[j][i];
        rank_history.push_back(rank(K, span));
    }
    OracleRank out;
    out.rank = rank_history.back();
    out.cap_used = degree_cap;
    out.stable = rank_history.size() >= 3 &&
                 rank_history[rank_history.size() - 2] == out.rank &&
                 rank_history[rank_history.size() - 3] == out.rank;
    return out;
}

}  // namespace syzrank
