#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzrank/errors.hpp"
#include "syzrank/local_invariants.hpp"
#include "syzrank/matrix.hpp"
#include "syzrank/point.hpp"
#include "syzrank/polynomial.hpp"
#include "syzrank/projective.hpp"
#include "syzrank/snf.hpp"
#include "syzrank/syzygy.hpp"

namespace syzrank {

struct Fan {
    std::vector<std::vector<long>> rays;
    std::vector<std::vector<std::size_t>> max_cones;
    bool asserted_complete = false;
};

struct PicData {
    std::size_t r = 0;
    std::vector<DegreeVector> degrees;
    std::vector<std::size_t> basis_rays;
    bool completeness_warning = false;
};

namespace toricdetail {

inline long to_long(const Integer& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("fan: degree entry out of range");
    return v.get_si();
}

// Surfaces: the maximal cones must be exactly the consecutive pairs of the
// rays in cyclic angular order, with every gap under pi.
inline void check_surface_complete(const Fan& fan) {
    const std::size_t s = fan.rays.size();
    auto half = [](const std::vector<long>& v) {
        return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1;
    };
    auto cross = [](const std::vector<long>& a, const std::vector<long>& b) -> Integer {
        return Integer(a[0]) * b[1] - Integer(a[1]) * b[0];
    };
    std::vector<std::size_t> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        int hi = half(fan.rays[i]), hj = half(fan.rays[j]);
        if (hi != hj) return hi < hj;
        return cross(fan.rays[i], fan.rays[j]) > 0;
    });
    std::set<std::pair<std::size_t, std::size_t>> cones;
    for (const auto& c : fan.max_cones)
        if (!cones.emplace(std::min(c[0], c[1]), std::max(c[0], c[1])).second)
            throw std::invalid_argument("fan: duplicate maximal cone");
    std::set<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t t = 0; t < s; ++t) {
        std::size_t i = order[t], j = order[(t + 1) % s];
        if (cross(fan.rays[i], fan.rays[j]) <= 0)
            throw std::invalid_argument("fan: rays do not tile the plane");
        expected.emplace(std::min(i, j), std::max(i, j));
    }
    if (cones != expected)
        throw std::invalid_argument("fan: maximal cones are not the cyclic tiling of the plane");
}

inline void check_line_complete(const Fan& fan) {
    if (fan.rays.size() != 2 || fan.rays[0][0] + fan.rays[1][0] != 0)
        throw std::invalid_argument("fan: a complete 1-dimensional fan has rays +1 and -1");
    std::set<std::size_t> seen;
    for (const auto& c : fan.max_cones) seen.insert(c[0]);
    if (fan.max_cones.size() != 2 || seen.size() != 2)
        throw std::invalid_argument("fan: a complete 1-dimensional fan has two maximal cones");
}

}  // namespace toricdetail

// Checks smoothness/completeness hypotheses and computes the Pic grading as
// the cokernel of the ray matrix, normalized so the rays outside the first
// maximal cone carry standard-basis degrees.
inline PicData validate_fan(const Fan& fan) {
    const std::size_t s = fan.rays.size();
    if (s == 0) throw std::invalid_argument("fan: no rays");
    const std::size_t n = fan.rays.front().size();
    if (n == 0) throw std::invalid_argument("fan: zero-dimensional lattice");
    for (const auto& ray : fan.rays) {
        if (ray.size() != n) throw std::invalid_argument("fan: ray dimension mismatch");
        Integer g = 0;
        for (long e : ray) g = gcd(g, Integer(e));
        if (g != 1) throw std::invalid_argument("fan: ray not primitive");
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (fan.rays[i] == fan.rays[j]) throw std::invalid_argument("fan: duplicate ray");
    if (s < n + 1) throw std::invalid_argument("fan: needs s = r + n with r >= 1");
    if (fan.max_cones.empty()) throw std::invalid_argument("fan: no maximal cones");
    for (const auto& c : fan.max_cones) {
        if (c.size() != n) throw std::invalid_argument("fan: maximal cones must have n rays");
        std::set<std::size_t> distinct(c.begin(), c.end());
        if (distinct.size() != n || *distinct.rbegin() >= s)
            throw std::invalid_argument("fan: bad cone indices");
        Mat<Integer> Mc(n, n, 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) Mc(a, b) = fan.rays[c[a]][b];
        Integer dt = det(Mc);
        if (dt != 1 && dt != -1) throw std::invalid_argument("fan: non-unimodular cone");
    }

    PicData pic;
    if (n == 1) {
        toricdetail::check_line_complete(fan);
    } else if (n == 2) {
        toricdetail::check_surface_complete(fan);
    } else {
        if (!fan.asserted_complete)
            throw std::invalid_argument("fan: completeness must be asserted for n >= 3");
        pic.completeness_warning = true;
    }

    Mat<Integer> B(s, n, 0);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j) B(i, j) = fan.rays[i][j];
    auto snf = smith_normal_form(B);
    for (std::size_t i = 0; i < n; ++i) {
        const Integer& d = snf.D(i, i);
        if (d == 0) throw std::invalid_argument("fan: rays do not span");
        if (d != 1 && d != -1)
            throw std::invalid_argument("fan: torsion in the divisor class group");
    }
    const std::size_t r = s - n;
    Mat<Integer> Phi(r, s, 0);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t rho = 0; rho < s; ++rho) Phi(k, rho) = snf.U(n + k, rho);

    std::set<std::size_t> first(fan.max_cones.front().begin(), fan.max_cones.front().end());
    std::vector<std::size_t> comp;
    for (std::size_t rho = 0; rho < s; ++rho)
        if (!first.count(rho)) comp.push_back(rho);
    Mat<Integer> C(r, r, 0);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t t = 0; t < r; ++t) C(k, t) = Phi(k, comp[t]);
    Mat<Integer> Cinv(r, r, 0);
    try {
        Cinv = inverse_unimodular(C);
    } catch (const std::exception&) {
        throw std::invalid_argument("fan: basis-ray classes do not generate Pic");
    }
    Mat<Integer> Phin = matmul_exact(Cinv, Phi);

    pic.r = r;
    pic.basis_rays = comp;
    for (std::size_t rho = 0; rho < s; ++rho) {
        DegreeVector d(r);
        for (std::size_t k = 0; k < r; ++k) d[k] = toricdetail::to_long(Phin(k, rho));
        pic.degrees.push_back(std::move(d));
    }
    return pic;
}

inline Fan fan_projective(std::size_t n) {
    if (n < 1) throw std::invalid_argument("fan_projective: n >= 1");
    Fan f;
    f.asserted_complete = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long> e(n, 0);
        e[i] = 1;
        f.rays.push_back(std::move(e));
    }
    f.rays.push_back(std::vector<long>(n, -1));
    for (std::size_t omit = 0; omit <= n; ++omit) {
        std::vector<std::size_t> cone;
        for (std::size_t i = 0; i <= n; ++i)
            if (i != omit) cone.push_back(i);
        f.max_cones.push_back(std::move(cone));
    }
    return f;
}

inline Fan fan_product(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("fan_product: factors need dimension >= 1");
    const std::size_t n = a + b;
    Fan f;
    f.asserted_complete = true;
    auto block_ray = [&](std::size_t offset, std::size_t dim, std::size_t i) {
        std::vector<long> e(n, 0);
        if (i < dim)
            e[offset + i] = 1;
        else
            for (std::size_t j = 0; j < dim; ++j) e[offset + j] = -1;
        return e;
    };
    for (std::size_t i = 0; i <= a; ++i) f.rays.push_back(block_ray(0, a, i));
    for (std::size_t i = 0; i <= b; ++i) f.rays.push_back(block_ray(a, b, i));
    for (std::size_t j1 = 0; j1 <= a; ++j1)
        for (std::size_t j2 = 0; j2 <= b; ++j2) {
            std::vector<std::size_t> cone;
            for (std::size_t i = 0; i <= a; ++i)
                if (i != j1) cone.push_back(i);
            for (std::size_t i = 0; i <= b; ++i)
                if (i != j2) cone.push_back(a + 1 + i);
            f.max_cones.push_back(std::move(cone));
        }
    return f;
}

inline Fan fan_hirzebruch(long a) {
    if (a < 0) throw std::invalid_argument("fan_hirzebruch: a >= 0");
    Fan f;
    f.asserted_complete = true;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {a, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return f;
}

// True iff some maximal cone has all its complementary coordinates nonzero.
template <typename F>
bool irrelevant_check(const F& K, const Point<F>& P, const Fan& fan) {
    if (P.coords.size() != fan.rays.size())
        throw std::invalid_argument("irrelevant_check: arity mismatch");
    for (const auto& cone : fan.max_cones) {
        std::set<std::size_t> in(cone.begin(), cone.end());
        bool ok = true;
        for (std::size_t rho = 0; rho < P.coords.size() && ok; ++rho)
            if (!in.count(rho) && K.is_zero(P.coords[rho])) ok = false;
        if (ok) return true;
    }
    return false;
}

template <typename F>
struct ToricPointReport {
    Point<F> point;
    PointStatus status = PointStatus::NotOnD;
    std::size_t rk_Mprime = 0;
    std::size_t rk_M = 0;
    std::size_t defect = 0;
    bool seh = false;
};

template <typename F>
class ToricHypersurface {
public:
    ToricHypersurface(Fan fan, PicData pic, Polynomial<F> f)
        : fan_(std::move(fan)), pic_(std::move(pic)), f_(std::move(f)), ring_(f_.ring()) {
        const F& K = ring_->field();
        if (ring_->arity() != fan_.rays.size())
            throw std::invalid_argument("toric: Cox ring arity must match the ray count");
        const auto* pg = ring_->pic_grading();
        if (!pg || pg->rank != pic_.r || pg->variable_degrees != pic_.degrees)
            throw std::invalid_argument("toric: ring grading does not match the fan");
        auto hd = f_.homogeneous_degree();
        if (f_.is_zero() || !hd)
            throw std::invalid_argument("toric: f must be Pic-homogeneous and nonzero");
        alpha_ = *hd;
        if (std::all_of(alpha_.begin(), alpha_.end(), [](long v) { return v == 0; }))
            throw std::invalid_argument("toric: the class of D must be nonzero in Pic");
        for (std::size_t rho = 0; rho < ring_->arity(); ++rho) jac_.push_back(f_.partial(rho));
        matrices_.base = first_syzygies(jac_);
        for (std::size_t k = 0; k < pic_.r; ++k) {
            std::vector<Polynomial<F>> col;
            Polynomial<F> pairing = Polynomial<F>::zero(ring_);
            for (std::size_t rho = 0; rho < ring_->arity(); ++rho) {
                long w = pic_.degrees[rho][k];
                auto entry = w == 0 ? Polynomial<F>::zero(ring_)
                                    : Polynomial<F>::variable(ring_, rho).scaled(K.from_int(w));
                pairing = pairing + entry * jac_[rho];
                col.push_back(std::move(entry));
            }
            if (!(pairing == f_.scaled(K.from_int(alpha_[k]))))
                throw internal_inconsistency("generalized Euler relation failed");
            matrices_.euler_columns.push_back(make_module_element(std::move(col)));
            matrices_.euler_degrees.push_back(alpha_);
        }
    }

    const Fan& fan() const { return fan_; }
    const PicData& pic() const { return pic_; }
    const Polynomial<F>& poly() const { return f_; }
    const RingPtr<F>& ring() const { return ring_; }
    const DegreeVector& alpha() const { return alpha_; }
    std::size_t picard_rank() const { return pic_.r; }
    const std::vector<Polynomial<F>>& jacobian_generators() const { return jac_; }
    const AugmentedSyzygyMatrix<F>& matrices() const { return matrices_; }

    PointStatus point_status(const Point<F>& P) const {
        validate_point(P);
        const F& K = ring_->field();
        if (!K.is_zero(f_.evaluate(P.coords))) return PointStatus::NotOnD;
        for (const auto& q : jac_)
            if (!K.is_zero(q.evaluate(P.coords))) return PointStatus::Smooth;
        return PointStatus::Singular;
    }

    // Left kernel of M'_f(P), pushed through kappa(P) into Pic coordinates
    // and reduced modulo the class of D.
    std::size_t logarithmic_defect(const Point<F>& P) const {
        validate_point(P);
        const F& K = ring_->field();
        if (!K.is_zero(f_.evaluate(P.coords)))
            throw std::invalid_argument("toric: point not on the hypersurface");
        auto A = evaluate_matrix(matrices_.base, P);
        auto lk = left_kernel(K, A);
        const std::size_t r = pic_.r;
        Mat<typename F::Element> img(lk.size() + 1, r, K.zero());
        for (std::size_t i = 0; i < lk.size(); ++i)
            for (std::size_t k = 0; k < r; ++k) {
                auto acc = K.zero();
                for (std::size_t rho = 0; rho < ring_->arity(); ++rho) {
                    long w = pic_.degrees[rho][k];
                    if (w == 0) continue;
                    acc = K.add(acc, K.mul(K.from_int(w), K.mul(P.coords[rho], lk[i][rho])));
                }
                img(i, k) = acc;
            }
        Mat<typename F::Element> arow(1, r, K.zero());
        for (std::size_t k = 0; k < r; ++k) {
            arow(0, k) = K.from_int(alpha_[k]);
            img(lk.size(), k) = arow(0, k);
        }
        return rank(K, img) - rank(K, arow);
    }

    ToricPointReport<F> classify(const Point<F>& P) const {
        PointStatus st = point_status(P);
        if (st == PointStatus::NotOnD)
            throw std::invalid_argument("classify: point not on the hypersurface");
        const F& K = ring_->field();
        ToricPointReport<F> rep;
        rep.point = P;
        rep.status = st;
        rep.rk_Mprime = rank(K, evaluate_matrix(matrices_.base, P));
        rep.rk_M = rank(K, evaluate_matrix(matrices_, P));
        rep.defect = logarithmic_defect(P);
        if (rep.rk_Mprime + rep.defect > rep.rk_M)
            throw internal_inconsistency("toric: rk M' + defect exceeds rk M");
        rep.seh = rep.rk_Mprime + rep.defect == rep.rk_M;
        if (st == PointStatus::Smooth && !rep.seh)
            throw internal_inconsistency("toric: smooth point must be SEH");
        if (st == PointStatus::Singular) {
            if (tjurina(torus_chart_germ(P)).finite && rep.rk_M != pic_.r)
                throw internal_inconsistency(
                    "toric: isolated singular point must have rk M = Picard rank");
        }
        return rep;
    }

    // Rescales P by the torus so the coordinates outside a usable chart cone
    // become 1, specializes those variables away, and moves P to the origin.
    Polynomial<F> torus_chart_germ(const Point<F>& P) const {
        validate_point(P);
        const F& K = ring_->field();
        const std::size_t s = ring_->arity(), r = pic_.r;
        std::vector<std::size_t> comp;
        bool found = false;
        for (const auto& cone : fan_.max_cones) {
            std::set<std::size_t> in(cone.begin(), cone.end());
            std::vector<std::size_t> cand;
            bool ok = true;
            for (std::size_t rho = 0; rho < s && ok; ++rho) {
                if (in.count(rho)) continue;
                if (K.is_zero(P.coords[rho]))
                    ok = false;
                else
                    cand.push_back(rho);
            }
            if (ok) {
                comp = std::move(cand);
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("toric: point lies in the irrelevant locus");

        Mat<Integer> C(r, r, 0);
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t t = 0; t < r; ++t) C(k, t) = pic_.degrees[comp[t]][k];
        Mat<Integer> Cinv(r, r, 0);
        try {
            Cinv = inverse_unimodular(C);
        } catch (const std::exception&) {
            throw std::invalid_argument("toric: chart classes do not form a Pic basis");
        }
        std::vector<typename F::Element> t(r, K.one());
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t i = 0; i < r; ++i)
                t[k] = K.mul(t[k], elt_pow(K, K.inv(P.coords[comp[i]]),
                                           toricdetail::to_long(Cinv(i, k))));
        std::vector<std::optional<typename F::Element>> assign(s);
        std::vector<typename F::Element> chart;
        std::set<std::size_t> comp_set(comp.begin(), comp.end());
        for (std::size_t rho = 0; rho < s; ++rho) {
            auto v = P.coords[rho];
            for (std::size_t k = 0; k < r; ++k)
                v = K.mul(v, elt_pow(K, t[k], pic_.degrees[rho][k]));
            if (comp_set.count(rho)) {
                if (!K.is_one(v))
                    throw internal_inconsistency("toric: chart rescaling failed");
                assign[rho] = K.one();
            } else {
                chart.push_back(v);
            }
        }
        return f_.specialize(assign).translate(chart);
    }

    AffineLogRanks torus_chart_oracle(const Point<F>& P) const {
        return affine_log_ranks_at_origin(torus_chart_germ(P));
    }

private:
    static typename F::Element elt_pow(const F& K, typename F::Element x, long e) {
        if (e < 0) {
            x = K.inv(x);
            e = -e;
        }
        return Polynomial<F>::power(K, x, static_cast<std::uint32_t>(e));
    }

    void validate_point(const Point<F>& P) const {
        if (P.coords.size() != ring_->arity())
            throw std::invalid_argument("toric: point arity mismatch");
        if (!irrelevant_check(ring_->field(), P, fan_))
            throw std::invalid_argument("toric: point lies in the irrelevant locus");
    }

    Fan fan_;
    PicData pic_;
    Polynomial<F> f_;
    RingPtr<F> ring_;
    std::vector<Polynomial<F>> jac_;
    DegreeVector alpha_;
    AugmentedSyzygyMatrix<F> matrices_;
};

template <typename F>
std::vector<ModuleElement<F>> euler_columns(const ToricHypersurface<F>& hyp) {
    return hyp.matrices().euler_columns;
}

template <typename F>
AugmentedSyzygyMatrix<F> toric_matrices(const ToricHypersurface<F>& hyp) {
    return hyp.matrices();
}

}  // namespace syzrank
