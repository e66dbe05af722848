#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "syzrank/monomial.hpp"
#include "syzrank/order.hpp"
#include "syzrank/ring.hpp"

namespace syzrank {

// Multivariate polynomial over the ring's field. Terms are stored in a
// canonical form: strictly descending grevlex, no zero coefficients.
// Computations that need another term order re-sort internally.
template <typename F>
class Polynomial {
public:
    using Elt = typename F::Element;

    struct Term {
        Monomial mono;
        Elt coeff;
        bool operator==(const Term& o) const {
            return mono == o.mono;  // coefficient compared via field in Polynomial::operator==
        }
    };

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<F> ring, Elt c) {
        Polynomial p(ring);
        if (!ring->field().is_zero(c))
            p.terms_.push_back({Monomial::one(ring->arity()), std::move(c)});
        return p;
    }

    static Polynomial variable(RingPtr<F> ring, std::size_t i, std::uint32_t e = 1) {
        Polynomial p(ring);
        if (e == 0) return constant(ring, ring->field().one());
        p.terms_.push_back({Monomial::variable(ring->arity(), i, e), ring->field().one()});
        return p;
    }

    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term> raw) {
        const F& K = ring->field();
        std::map<Monomial, Elt, MonoGreater> acc{MonoGreater{}};
        for (auto& t : raw) {
            if (t.mono.arity() != ring->arity())
                throw std::invalid_argument("term arity mismatch");
            auto [it, fresh] = acc.try_emplace(t.mono, t.coeff);
            if (!fresh) it->second = K.add(it->second, t.coeff);
        }
        Polynomial p(ring);
        for (auto& [m, c] : acc)
            if (!K.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const Polynomial& o) const {
        if (!compatible(o)) return false;
        if (terms_.size() != o.terms_.size()) return false;
        const F& K = field();
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (!(terms_[i].mono == o.terms_[i].mono)) return false;
            if (!K.equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
        }
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.require_compatible(b);
        const F& K = a.field();
        Polynomial r(a.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = compare(a.terms_[i].mono, b.terms_[j].mono, MonomialOrder::grevlex());
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Elt s = K.add(a.terms_[i].coeff, b.terms_[j].coeff);
                if (!K.is_zero(s)) r.terms_.push_back({a.terms_[i].mono, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_compatible(b);
        const F& K = a.field();
        const std::uint64_t limit = a.ring_->exponent_limit();
        std::map<Monomial, Elt, MonoGreater> acc{MonoGreater{}};
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Monomial m = ta.mono.mul(tb.mono, limit);
                Elt c = K.mul(ta.coeff, tb.coeff);
                auto [it, fresh] = acc.try_emplace(std::move(m), c);
                if (!fresh) it->second = K.add(it->second, c);
            }
        }
        Polynomial r(a.ring_);
        for (auto& [m, c] : acc)
            if (!K.is_zero(c)) r.terms_.push_back({m, c});
        return r;
    }

    Polynomial scaled(const Elt& c) const {
        const F& K = field();
        Polynomial r(ring_);
        if (K.is_zero(c)) return r;
        r.terms_ = terms_;
        for (auto& t : r.terms_) t.coeff = K.mul(t.coeff, c);
        return r;
    }

    Polynomial times_monomial(const Monomial& m, const Elt& c) const {
        const F& K = field();
        Polynomial r(ring_);
        if (K.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            r.terms_.push_back({t.mono.mul(m, ring_->exponent_limit()), K.mul(t.coeff, c)});
        return r;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = constant(ring_, field().one());
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    Polynomial partial(std::size_t i) const {
        if (i >= ring_->arity()) throw std::invalid_argument("partial: variable out of range");
        const F& K = field();
        std::vector<Term> out;
        for (const auto& t : terms_) {
            std::uint32_t e = t.mono.exponent(i);
            if (e == 0) continue;
            auto exps = t.mono.exponents();
            exps[i] = e - 1;
            out.push_back({Monomial(std::move(exps)), K.mul(t.coeff, K.from_int(long(e)))});
        }
        // exponents only decrease, so grevlex descending order is preserved
        // except for merged positions; re-canonicalize to stay safe
        return from_terms(ring_, std::move(out));
    }

    Elt evaluate(const std::vector<Elt>& x) const {
        if (x.size() != ring_->arity()) throw std::invalid_argument("evaluate: arity mismatch");
        const F& K = field();
        Elt acc = K.zero();
        for (const auto& t : terms_) {
            Elt v = t.coeff;
            for (std::size_t i = 0; i < x.size(); ++i) {
                std::uint32_t e = t.mono.exponent(i);
                if (e) v = K.mul(v, power(K, x[i], e));
            }
            acc = K.add(acc, v);
        }
        return acc;
    }

    // total degree; -1 for the zero polynomial
    long total_degree() const {
        long d = -1;
        for (const auto& t : terms_) d = std::max(d, long(t.mono.degree()));
        return d;
    }

    DegreeVector term_degree(const Monomial& m) const {
        if (const auto* pic = ring_->pic_grading()) {
            DegreeVector d(pic->rank, 0);
            for (std::size_t i = 0; i < m.arity(); ++i)
                for (std::size_t k = 0; k < pic->rank; ++k)
                    d[k] += long(m.exponent(i)) * pic->variable_degrees[i][k];
            return d;
        }
        return DegreeVector{long(m.degree())};
    }

    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    // the common degree vector of all terms, if there is one (nullopt for 0)
    std::optional<DegreeVector> homogeneous_degree() const {
        if (is_zero()) return std::nullopt;
        DegreeVector d = term_degree(terms_.front().mono);
        for (const auto& t : terms_)
            if (term_degree(t.mono) != d) return std::nullopt;
        return d;
    }

    // Substitutes constants for the given variables and drops them from the
    // ring. The result lives in a standard-graded ring on the kept variables.
    Polynomial specialize(const std::vector<std::optional<Elt>>& assign) const {
        if (assign.size() != ring_->arity())
            throw std::invalid_argument("specialize: arity mismatch");
        const F& K = field();
        std::vector<std::string> kept;
        std::vector<std::size_t> kept_idx;
        for (std::size_t i = 0; i < assign.size(); ++i) {
            if (!assign[i]) {
                kept.push_back(ring_->variable(i));
                kept_idx.push_back(i);
            }
        }
        if (kept.empty()) throw std::invalid_argument("specialize: no variables left");
        auto sub = std::make_shared<const Ring<F>>(K, std::move(kept), Grading(StandardGrading{}),
                                                   ring_->exponent_limit());
        std::vector<typename Polynomial<F>::Term> out;
        for (const auto& t : terms_) {
            Elt c = t.coeff;
            std::vector<std::uint32_t> exps(kept_idx.size());
            for (std::size_t k = 0; k < kept_idx.size(); ++k) exps[k] = t.mono.exponent(kept_idx[k]);
            for (std::size_t i = 0; i < assign.size(); ++i) {
                if (!assign[i]) continue;
                std::uint32_t e = t.mono.exponent(i);
                if (e) c = K.mul(c, power(K, *assign[i], e));
            }
            out.push_back({Monomial(std::move(exps)), std::move(c)});
        }
        return Polynomial::from_terms(std::move(sub), std::move(out));
    }

    // chart x_i = 1 of a projective hypersurface
    Polynomial dehomogenize(std::size_t i) const {
        std::vector<std::optional<Elt>> assign(ring_->arity());
        assign.at(i) = field().one();
        return specialize(assign);
    }

    // x_i -> x_i + q_i
    Polynomial translate(const std::vector<Elt>& q) const {
        if (q.size() != ring_->arity()) throw std::invalid_argument("translate: arity mismatch");
        Polynomial r = zero(ring_);
        for (const auto& t : terms_) {
            Polynomial prod = constant(ring_, t.coeff);
            for (std::size_t i = 0; i < q.size(); ++i) {
                std::uint32_t e = t.mono.exponent(i);
                if (!e) continue;
                Polynomial lin = variable(ring_, i) + constant(ring_, q[i]);
                prod = prod * lin.pow(e);
            }
            r = r + prod;
        }
        return r;
    }

    // x_i -> sum_j A[i][j] x_j (same ring)
    Polynomial substitute_linear(const std::vector<std::vector<Elt>>& A) const {
        const std::size_t n = ring_->arity();
        if (A.size() != n) throw std::invalid_argument("substitute_linear: shape mismatch");
        for (const auto& row : A)
            if (row.size() != n) throw std::invalid_argument("substitute_linear: shape mismatch");
        Polynomial r = zero(ring_);
        std::vector<Polynomial> images;
        images.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Polynomial li = zero(ring_);
            for (std::size_t j = 0; j < n; ++j)
                li = li + variable(ring_, j).scaled(A[i][j]);
            images.push_back(std::move(li));
        }
        for (const auto& t : terms_) {
            Polynomial prod = constant(ring_, t.coeff);
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t e = t.mono.exponent(i);
                if (e) prod = prod * images[i].pow(e);
            }
            r = r + prod;
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        const F& K = field();
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            std::string c = K.to_string(t.coeff);
            bool negative = !c.empty() && c.front() == '-';
            std::string mag = negative ? c.substr(1) : c;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            std::string m = mono_string(t.mono);
            if (m.empty()) {
                os << mag;
            } else if (mag == "1") {
                os << m;
            } else {
                os << mag << "*" << m;
            }
        }
        return os.str();
    }

    static Elt power(const F& K, Elt base, std::uint32_t e) {
        Elt r = K.one();
        while (e > 0) {
            if (e & 1) r = K.mul(r, base);
            e >>= 1;
            if (e) base = K.mul(base, base);
        }
        return r;
    }

private:
    struct MonoGreater {
        bool operator()(const Monomial& a, const Monomial& b) const {
            return compare(a, b, MonomialOrder::grevlex()) > 0;
        }
    };

    bool compatible(const Polynomial& o) const {
        return ring_ == o.ring_ || (ring_ && o.ring_ && ring_->same_structure(*o.ring_));
    }
    void require_compatible(const Polynomial& o) const {
        if (!compatible(o)) throw std::invalid_argument("polynomials from different rings");
    }

    std::string mono_string(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < m.arity(); ++i) {
            std::uint32_t e = m.exponent(i);
            if (!e) continue;
            if (!first) os << "*";
            first = false;
            os << ring_->variable(i);
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

    RingPtr<F> ring_;
    std::vector<Term> terms_;
};

// Transports f into another ring; variable i of the source becomes
// variable image_of_var[i] of the target.
template <typename F>
Polynomial<F> map_variables(const Polynomial<F>& f, RingPtr<F> target,
                            const std::vector<std::size_t>& image_of_var) {
    if (image_of_var.size() != f.ring()->arity())
        throw std::invalid_argument("map_variables: arity mismatch");
    std::vector<typename Polynomial<F>::Term> out;
    out.reserve(f.term_count());
    for (const auto& t : f.terms()) {
        std::vector<std::uint32_t> exps(target->arity(), 0);
        for (std::size_t i = 0; i < image_of_var.size(); ++i) {
            std::uint32_t e = t.mono.exponent(i);
            if (!e) continue;
            std::size_t j = image_of_var[i];
            if (j >= target->arity()) throw std::invalid_argument("map_variables: bad image");
            if (exps[j] != 0) throw std::invalid_argument("map_variables: collision");
            exps[j] = e;
        }
        out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial<F>::from_terms(std::move(target), std::move(out));
}

}  // namespace syzrank
