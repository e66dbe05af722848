#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzrank/errors.hpp"
#include "syzrank/groebner.hpp"
#include "syzrank/local_invariants.hpp"
#include "syzrank/matrix.hpp"
#include "syzrank/point.hpp"
#include "syzrank/polynomial.hpp"
#include "syzrank/syzygy.hpp"

namespace syzrank {

enum class PointStatus { NotOnD, Smooth, Singular };

inline std::string to_string(PointStatus s) {
    switch (s) {
        case PointStatus::NotOnD: return "NOT_ON_D";
        case PointStatus::Smooth: return "SMOOTH";
        case PointStatus::Singular: return "SINGULAR";
    }
    return "?";
}

struct IsolatedRefinement {
    bool quasi_homogeneous = false;
    ExtendedNat mu;
    ExtendedNat tau;
};

struct AffineLogRanks {
    std::size_t rk_j = 0;
    std::size_t rk_jprime = 0;
};

struct OracleReport {
    std::size_t rk_j = 0;
    std::size_t rk_jprime = 0;
    bool agrees = false;
};

template <typename F>
struct PointReport {
    Point<F> point;
    PointStatus status = PointStatus::NotOnD;
    std::size_t rk_Mprime = 0;
    std::size_t rk_M = 0;
    bool seh = false;
    std::optional<IsolatedRefinement> refinement;
    std::string refinement_note;
    std::optional<OracleReport> oracle;
};

struct ReducednessCheck {
    bool ok = true;
    std::size_t dimension = 0;
};

template <typename F>
std::vector<Polynomial<F>> jacobian(const Polynomial<F>& f) {
    auto hd = f.homogeneous_degree();
    if (f.is_zero() || !hd || (*hd)[0] < 1)
        throw std::invalid_argument("jacobian: f must be homogeneous of degree >= 1");
    std::vector<Polynomial<F>> out;
    out.reserve(f.ring()->arity());
    for (std::size_t i = 0; i < f.ring()->arity(); ++i) out.push_back(f.partial(i));
    return out;
}

// M'_f = first syzygies of the jacobian, M_f = [M'_f | (x_0,...,x_n)].
// The Euler identity is recomputed here; failure means our arithmetic broke.
template <typename F>
AugmentedSyzygyMatrix<F> build_matrices(const Polynomial<F>& f) {
    RingPtr<F> R = f.ring();
    const F& K = R->field();
    if (!R->standard_graded())
        throw std::invalid_argument("build_matrices: standard-graded ring expected");
    auto jac = jacobian(f);
    long d = f.total_degree();

    AugmentedSyzygyMatrix<F> M;
    M.base = first_syzygies(jac);

    std::vector<Polynomial<F>> euler;
    Polynomial<F> pairing = Polynomial<F>::zero(R);
    for (std::size_t i = 0; i < R->arity(); ++i) {
        euler.push_back(Polynomial<F>::variable(R, i));
        pairing = pairing + euler.back() * jac[i];
    }
    if (!(pairing == f.scaled(K.from_int(d))))
        throw internal_inconsistency("Euler identity failed");
    M.euler_columns.push_back(make_module_element(std::move(euler)));
    M.euler_degrees.push_back(DegreeVector{1});
    return M;
}

template <typename F>
ReducednessCheck reducedness_warning(const Polynomial<F>& f) {
    auto gens = jacobian(f);
    gens.push_back(f);
    auto gb = buchberger(gens, MonomialOrder::grevlex());
    ReducednessCheck rc;
    rc.dimension = leading_ideal_dimension(gb);
    rc.ok = rc.dimension + 1 < f.ring()->arity();
    return rc;
}

// Log ranks of a germ vanishing at the origin, read off the syzygies of
// (g_{y_1},...,g_{y_n}, g). The last row holds the multiplier b of
// delta(g) = -b g.
template <typename F>
AffineLogRanks affine_log_ranks_at_origin(const Polynomial<F>& g) {
    RingPtr<F> A = g.ring();
    const F& K = A->field();
    std::vector<Polynomial<F>> gens;
    for (std::size_t i = 0; i < A->arity(); ++i) gens.push_back(g.partial(i));
    gens.push_back(g);
    auto S = first_syzygies(gens);
    Point<F> origin{PointKind::Affine, std::vector<typename F::Element>(A->arity(), K.zero())};
    auto M = evaluate_matrix(S, origin);
    Mat<typename F::Element> top(A->arity(), M.cols(), K.zero());
    for (std::size_t i = 0; i < top.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) top(i, j) = M(i, j);
    AffineLogRanks out;
    out.rk_jprime = rank(K, M);
    out.rk_j = rank(K, top);
    return out;
}

// Same oracle in a chosen chart: dehomogenize there and move p to the origin.
template <typename F>
AffineLogRanks affine_log_ranks_in_chart(const Polynomial<F>& f, const Point<F>& p,
                                         std::size_t chart) {
    RingPtr<F> R = f.ring();
    const F& K = R->field();
    if (p.coords.size() != R->arity())
        throw std::invalid_argument("oracle: arity mismatch");
    if (chart >= R->arity() || K.is_zero(p.coords[chart]))
        throw std::invalid_argument("oracle: chart coordinate must be nonzero at p");
    Point<F> q = p;
    auto inv = K.inv(p.coords[chart]);
    for (auto& c : q.coords) c = K.mul(c, inv);
    Polynomial<F> g = f.dehomogenize(chart);
    std::vector<typename F::Element> shift;
    for (std::size_t i = 0; i < q.coords.size(); ++i)
        if (i != chart) shift.push_back(q.coords[i]);
    return affine_log_ranks_at_origin(g.translate(shift));
}

template <typename F>
class ProjectiveHypersurface {
public:
    explicit ProjectiveHypersurface(Polynomial<F> f)
        : f_(std::move(f)), ring_(f_.ring()), jac_(jacobian(f_)) {
        d_ = f_.total_degree();
        matrices_ = build_matrices(f_);
        reduced_ = syzrank::reducedness_warning(f_);
    }

    const Polynomial<F>& poly() const { return f_; }
    const RingPtr<F>& ring() const { return ring_; }
    long degree() const { return d_; }
    std::size_t n() const { return ring_->arity() - 1; }
    const std::vector<Polynomial<F>>& jacobian_generators() const { return jac_; }
    const AugmentedSyzygyMatrix<F>& matrices() const { return matrices_; }
    const ReducednessCheck& reducedness_warning() const { return reduced_; }

    PointStatus point_status(const Point<F>& p) const {
        const F& K = ring_->field();
        if (p.coords.size() != ring_->arity())
            throw std::invalid_argument("point_status: arity mismatch");
        if (is_zero_vector(K, p.coords))
            throw std::invalid_argument("zero representative for a projective point");
        if (!K.is_zero(f_.evaluate(p.coords))) return PointStatus::NotOnD;
        for (const auto& q : jac_)
            if (!K.is_zero(q.evaluate(p.coords))) return PointStatus::Smooth;
        return PointStatus::Singular;
    }

    PointReport<F> classify(const Point<F>& p, bool with_oracle = false) const {
        PointStatus st = point_status(p);
        if (st == PointStatus::NotOnD)
            throw std::invalid_argument("classify: point not on the hypersurface");
        const F& K = ring_->field();
        PointReport<F> rep;
        rep.point = p;
        rep.status = st;
        rep.rk_Mprime = rank(K, evaluate_matrix(matrices_.base, p));
        rep.rk_M = rank(K, evaluate_matrix(matrices_, p));
        if (rep.rk_M != rep.rk_Mprime && rep.rk_M != rep.rk_Mprime + 1)
            throw internal_inconsistency("classify: rank gap outside {0,1}");
        rep.seh = rep.rk_Mprime == rep.rk_M;
        if (st == PointStatus::Smooth && (rep.rk_Mprime != n() || !rep.seh))
            throw internal_inconsistency("classify: smooth-point rank contract violated");
        if (with_oracle) {
            auto lr = affine_log_rank_oracle(p);
            OracleReport o;
            o.rk_j = lr.rk_j;
            o.rk_jprime = lr.rk_jprime;
            o.agrees = lr.rk_jprime == rep.rk_Mprime && lr.rk_j + 1 == rep.rk_M;
            rep.oracle = o;
        }
        return rep;
    }

    // Saito refinement at an isolated singular point. Non-isolated points get
    // the base report back with a note instead of an error.
    PointReport<F> classify_isolated(const Point<F>& p, bool with_oracle = false) const {
        PointReport<F> rep = classify(p, with_oracle);
        if (rep.status != PointStatus::Singular)
            throw std::invalid_argument("classify_isolated: point must be singular");
        auto inv = invariants_at(f_, p);
        if (!inv.tau.finite) {
            rep.refinement_note = "non-isolated singularity, refinement refused";
            return rep;
        }
        if (rep.rk_M != 1)
            throw internal_inconsistency("isolated singular point must have rk M = 1");
        IsolatedRefinement r;
        r.quasi_homogeneous = rep.rk_Mprime == 1;
        r.mu = inv.mu;
        r.tau = inv.tau;
        if (r.quasi_homogeneous != (inv.mu == inv.tau))
            throw internal_inconsistency("quasi-homogeneity cross-check failed");
        rep.refinement = r;
        return rep;
    }

    // Chart oracle in the leading-coordinate chart of p.
    AffineLogRanks affine_log_rank_oracle(const Point<F>& p) const {
        const F& K = ring_->field();
        if (point_status(p) == PointStatus::NotOnD)
            throw std::invalid_argument("oracle: point not on the hypersurface");
        return affine_log_ranks_in_chart(f_, p, leading_coordinate(K, p));
    }

private:
    Polynomial<F> f_;
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> jac_;
    long d_ = 0;
    AugmentedSyzygyMatrix<F> matrices_;
    ReducednessCheck reduced_;
};

}  // namespace syzrank
