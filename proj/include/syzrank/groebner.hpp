#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "syzrank/polynomial.hpp"

namespace syzrank {

// A natural number or infinity, for quotient dimensions and mu/tau.
struct ExtendedNat {
    bool finite = true;
    std::uint64_t value = 0;

    static ExtendedNat inf() { return {false, 0}; }
    static ExtendedNat of(std::uint64_t v) { return {true, v}; }
    bool operator==(const ExtendedNat& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    std::string to_string() const { return finite ? std::to_string(value) : "INFINITE"; }
};

// Element of a free module R^rank.
template <typename F>
struct ModuleElement {
    std::vector<Polynomial<F>> components;

    std::size_t rank() const { return components.size(); }
    const RingPtr<F>& ring() const { return components.at(0).ring(); }
    bool is_zero() const {
        for (const auto& c : components)
            if (!c.is_zero()) return false;
        return true;
    }
    bool operator==(const ModuleElement& o) const { return components == o.components; }
};

template <typename F>
ModuleElement<F> make_module_element(std::vector<Polynomial<F>> comps) {
    if (comps.empty()) throw std::invalid_argument("module element needs rank >= 1");
    for (const auto& c : comps)
        if (!c.ring() || !c.ring()->same_structure(*comps.front().ring()))
            throw std::invalid_argument("module element components from different rings");
    return ModuleElement<F>{std::move(comps)};
}

namespace gbdetail {

template <typename F>
struct VTerm {
    std::uint32_t comp;
    Monomial mono;
    typename F::Element coeff;
};

// Terms sorted strictly descending under the active module order.
template <typename F>
using VPoly = std::vector<VTerm<F>>;

template <typename F>
int vcompare(const VTerm<F>& a, const VTerm<F>& b, const ModuleOrder& ord) {
    return compare(a.mono, a.comp, b.mono, b.comp, ord);
}

template <typename F>
VPoly<F> from_element(const ModuleElement<F>& e, const ModuleOrder& ord) {
    VPoly<F> v;
    for (std::size_t c = 0; c < e.components.size(); ++c)
        for (const auto& t : e.components[c].terms())
            v.push_back({static_cast<std::uint32_t>(c), t.mono, t.coeff});
    std::sort(v.begin(), v.end(),
              [&](const VTerm<F>& a, const VTerm<F>& b) { return vcompare(a, b, ord) > 0; });
    return v;
}

template <typename F>
ModuleElement<F> to_element(const RingPtr<F>& ring, std::size_t rank, const VPoly<F>& v) {
    std::vector<std::vector<typename Polynomial<F>::Term>> buckets(rank);
    for (const auto& t : v) buckets.at(t.comp).push_back({t.mono, t.coeff});
    std::vector<Polynomial<F>> comps;
    comps.reserve(rank);
    for (auto& b : buckets) comps.push_back(Polynomial<F>::from_terms(ring, std::move(b)));
    return ModuleElement<F>{std::move(comps)};
}

// h - c * x^m * g, both sorted; multiplication by a monomial preserves
// the order of terms, so this is a linear merge.
template <typename F>
VPoly<F> subtract_scaled(const F& K, const VPoly<F>& h, const typename F::Element& c,
                         const Monomial& m, const VPoly<F>& g, const ModuleOrder& ord,
                         std::uint64_t limit) {
    VPoly<F> out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < h.size() && j < g.size()) {
        VTerm<F> gt{g[j].comp, g[j].mono.mul(m, limit), K.mul(c, g[j].coeff)};
        int cmp = vcompare(h[i], gt, ord);
        if (cmp > 0) {
            out.push_back(h[i++]);
        } else if (cmp < 0) {
            gt.coeff = K.neg(gt.coeff);
            out.push_back(std::move(gt));
            ++j;
        } else {
            auto s = K.sub(h[i].coeff, gt.coeff);
            if (!K.is_zero(s)) out.push_back({h[i].comp, h[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < h.size(); ++i) out.push_back(h[i]);
    for (; j < g.size(); ++j)
        out.push_back({g[j].comp, g[j].mono.mul(m, limit), K.neg(K.mul(c, g[j].coeff))});
    return out;
}

template <typename F>
void make_monic(const F& K, VPoly<F>& v) {
    if (v.empty() || K.is_one(v.front().coeff)) return;
    auto inv = K.inv(v.front().coeff);
    for (auto& t : v) t.coeff = K.mul(t.coeff, inv);
}

// Over Q: primitive integer coefficients with positive leading one.
// Over other fields: monic. Keeps coefficient growth in check.
template <typename F>
void normalize_coeffs(const F& K, VPoly<F>& v) {
    if (v.empty()) return;
    if constexpr (std::is_same_v<F, RationalField>) {
        Integer den = 1, num = 0;
        for (const auto& t : v) den = lcm(den, t.coeff.get_den());
        std::vector<Integer> scaled(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rational q = v[i].coeff * Rational(den);
            scaled[i] = q.get_num();
            num = gcd(num, scaled[i]);
        }
        if (num == 0) return;
        if (scaled.front() < 0) num = -num;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rational q(scaled[i], num);
            q.canonicalize();
            v[i].coeff = q;
        }
    } else {
        make_monic(K, v);
    }
}

// Full normal form under a global order: every remainder term is
// divisible by no leading term of the basis. Reducers are scanned in
// basis order, which keeps the computation deterministic.
template <typename F>
VPoly<F> normal_form_v(const F& K, VPoly<F> h, const std::vector<VPoly<F>>& basis,
                       const ModuleOrder& ord, std::uint64_t limit) {
    VPoly<F> out;
    while (!h.empty()) {
        const VTerm<F>& lead = h.front();
        const VPoly<F>* red = nullptr;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (g.front().comp == lead.comp && g.front().mono.divides(lead.mono)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.push_back(lead);
            h.erase(h.begin());
            continue;
        }
        auto c = K.div(lead.coeff, red->front().coeff);
        Monomial m = lead.mono.quotient(red->front().mono);
        h = subtract_scaled(K, h, c, m, *red, ord, limit);
    }
    return out;
}

template <typename F>
std::uint64_t ecart(const VPoly<F>& v) {
    std::uint64_t maxdeg = 0;
    for (const auto& t : v) maxdeg = std::max(maxdeg, t.mono.degree());
    return maxdeg - v.front().mono.degree();
}

// Mora weak normal form (local orders): reduce the lead with the reducer
// of minimal ecart, recycling intermediate results as extra reducers.
template <typename F>
VPoly<F> mora_normal_form_v(const F& K, VPoly<F> h, const std::vector<VPoly<F>>& basis,
                            const ModuleOrder& ord, std::uint64_t limit) {
    std::vector<VPoly<F>> pool = basis;
    while (!h.empty()) {
        const VTerm<F>& lead = h.front();
        std::size_t red = pool.size();
        std::uint64_t best = 0;
        for (std::size_t k = 0; k < pool.size(); ++k) {
            const VPoly<F>& g = pool[k];
            if (g.empty()) continue;
            if (g.front().comp != lead.comp || !g.front().mono.divides(lead.mono)) continue;
            std::uint64_t e = ecart(g);
            if (red == pool.size() || e < best) {
                red = k;
                best = e;
            }
        }
        if (red == pool.size()) return h;
        if (best > ecart(h)) pool.push_back(h);
        auto c = K.div(h.front().coeff, pool[red].front().coeff);
        Monomial m = h.front().mono.quotient(pool[red].front().mono);
        h = subtract_scaled(K, h, c, m, pool[red], ord, limit);
        normalize_coeffs(K, h);
    }
    return h;
}

template <typename F>
VPoly<F> s_vector(const F& K, const VPoly<F>& a, const VPoly<F>& b, const ModuleOrder& ord,
                  std::uint64_t limit) {
    const VTerm<F>&la = a.front(), &lb = b.front();
    Monomial l = la.mono.lcm(lb.mono);
    // lc(b) * (l/lm(a)) * a - lc(a) * (l/lm(b)) * b
    VPoly<F> left;
    left.reserve(a.size());
    Monomial ma = l.quotient(la.mono);
    for (const auto& t : a) left.push_back({t.comp, t.mono.mul(ma, limit), K.mul(t.coeff, lb.coeff)});
    VPoly<F> s = subtract_scaled(K, left, la.coeff, l.quotient(lb.mono), b, ord, limit);
    normalize_coeffs(K, s);
    return s;
}

struct Pair {
    std::uint64_t lcm_deg;
    std::size_t i, j;
    Monomial lcm;
    bool coprime;

    bool operator<(const Pair& o) const {
        if (lcm_deg != o.lcm_deg) return lcm_deg < o.lcm_deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

// Gebauer-Moller pair update for a new element h = G[t]. The coprime
// (product) criterion is only sound for ideals, so it is switched off
// when rank > 1.
template <typename F>
void update_pairs(std::set<Pair>& B, const std::vector<VPoly<F>>& G, std::size_t t,
                  bool use_coprime) {
    const auto& lh = G[t].front();
    std::vector<Pair> C;
    for (std::size_t i = 0; i < t; ++i) {
        if (G[i].empty() || G[i].front().comp != lh.comp) continue;
        Monomial l = G[i].front().mono.lcm(lh.mono);
        bool cop = use_coprime && G[i].front().mono.coprime(lh.mono);
        C.push_back(Pair{l.degree(), i, t, std::move(l), cop});
    }
    // phase 1: drop a new pair when another candidate's lcm properly
    // divides its lcm; among equal lcms keep the first (coprime pairs
    // survive here so they can still eliminate, then die in phase 2)
    std::vector<Pair> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
        bool keep = true;
        if (!C[k].coprime) {
            for (std::size_t m = 0; m < C.size(); ++m) {
                if (m == k || !C[m].lcm.divides(C[k].lcm)) continue;
                if (!(C[m].lcm == C[k].lcm) || m < k) {
                    keep = false;
                    break;
                }
            }
        }
        if (keep) D.push_back(C[k]);
    }
    // phase 2: discard coprime pairs (Buchberger's first criterion)
    std::vector<Pair> E;
    for (auto& p : D)
        if (!p.coprime) E.push_back(std::move(p));
    // phase 3: prune old pairs via the chain criterion
    for (auto it = B.begin(); it != B.end();) {
        const Pair& p = *it;
        const auto& li = G[p.i].front();
        bool prune = li.comp == lh.comp && lh.mono.divides(p.lcm) &&
                     !(G[p.i].front().mono.lcm(lh.mono) == p.lcm) &&
                     !(G[p.j].front().mono.lcm(lh.mono) == p.lcm);
        it = prune ? B.erase(it) : ++it;
    }
    for (auto& p : E) B.insert(std::move(p));
}

}  // namespace gbdetail

// Groebner basis (global order) or Mora standard basis (local order) of
// an ideal or a submodule of a free module.
template <typename F>
struct GroebnerBasis {
    RingPtr<F> ring;
    std::size_t rank = 1;
    ModuleOrder order;
    bool local = false;
    bool reduced = false;
    std::vector<ModuleElement<F>> elements;

    // leading (component, monomial) of each element under `order`
    std::vector<std::pair<std::uint32_t, Monomial>> leads;

    std::vector<Polynomial<F>> ideal_generators() const {
        if (rank != 1) throw std::logic_error("not an ideal basis");
        std::vector<Polynomial<F>> out;
        out.reserve(elements.size());
        for (const auto& e : elements) out.push_back(e.components[0]);
        return out;
    }
};

namespace gbdetail {

template <typename F>
GroebnerBasis<F> run_buchberger(const RingPtr<F>& ring, std::size_t rank,
                                std::vector<VPoly<F>> G, const ModuleOrder& ord, bool local) {
    const F& K = ring->field();
    const std::uint64_t limit = ring->exponent_limit();
    const bool use_coprime = rank == 1;

    std::erase_if(G, [](const VPoly<F>& v) { return v.empty(); });
    for (auto& g : G) normalize_coeffs(K, g);

    std::set<Pair> pairs;
    for (std::size_t t = 0; t < G.size(); ++t) update_pairs(pairs, G, t, use_coprime);

    while (!pairs.empty()) {
        Pair p = *pairs.begin();
        pairs.erase(pairs.begin());
        VPoly<F> s = s_vector(K, G[p.i], G[p.j], ord, limit);
        VPoly<F> h = local ? mora_normal_form_v(K, std::move(s), G, ord, limit)
                           : normal_form_v(K, std::move(s), G, ord, limit);
        if (h.empty()) continue;
        normalize_coeffs(K, h);
        G.push_back(std::move(h));
        update_pairs(pairs, G, G.size() - 1, use_coprime);
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j]) continue;
            const auto&li = G[i].front(), &lj = G[j].front();
            if (li.comp != lj.comp || !lj.mono.divides(li.mono)) continue;
            if (!(lj.mono == li.mono) || j < i) keep[i] = false;
        }
    }
    std::vector<VPoly<F>> kept;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) kept.push_back(std::move(G[i]));

    // inter-reduce tails (global orders only; standard bases stay unreduced)
    bool reduced = false;
    if (!local) {
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<VPoly<F>> others;
            for (std::size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            kept[i] = normal_form_v(K, std::move(kept[i]), others, ord, limit);
            normalize_coeffs(K, kept[i]);
        }
        reduced = true;
    }
    for (auto& g : kept) make_monic(K, g);
    std::sort(kept.begin(), kept.end(), [&](const VPoly<F>& a, const VPoly<F>& b) {
        return vcompare(a.front(), b.front(), ord) < 0;
    });

    GroebnerBasis<F> out;
    out.ring = ring;
    out.rank = rank;
    out.order = ord;
    out.local = local;
    out.reduced = reduced;
    for (const auto& g : kept) {
        out.elements.push_back(to_element(ring, rank, g));
        out.leads.emplace_back(g.front().comp, g.front().mono);
    }
    return out;
}

template <typename F>
std::vector<VPoly<F>> to_vpolys(const std::vector<ModuleElement<F>>& gens,
                                const ModuleOrder& ord) {
    std::vector<VPoly<F>> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(from_element(g, ord));
    return v;
}

template <typename F>
std::vector<VPoly<F>> to_vpolys(const std::vector<Polynomial<F>>& gens, const ModuleOrder& ord) {
    std::vector<VPoly<F>> v;
    v.reserve(gens.size());
    for (const auto& g : gens) v.push_back(from_element(ModuleElement<F>{{g}}, ord));
    return v;
}

}  // namespace gbdetail

template <typename F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                          const MonomialOrder& ord) {
    if (!ord.is_global()) throw std::invalid_argument("normal_form needs a global order");
    ModuleOrder mo = ModuleOrder::pot(ord);
    auto h = gbdetail::normal_form_v(f.ring()->field(),
                                     gbdetail::from_element(ModuleElement<F>{{f}}, mo),
                                     gbdetail::to_vpolys(basis, mo), mo,
                                     f.ring()->exponent_limit());
    return gbdetail::to_element(f.ring(), 1, h).components[0];
}

template <typename F>
ModuleElement<F> normal_form(const ModuleElement<F>& f, const std::vector<ModuleElement<F>>& basis,
                             const MonomialOrder& ord) {
    if (!ord.is_global()) throw std::invalid_argument("normal_form needs a global order");
    ModuleOrder mo = ModuleOrder::pot(ord);
    auto h = gbdetail::normal_form_v(f.ring()->field(), gbdetail::from_element(f, mo),
                                     gbdetail::to_vpolys(basis, mo), mo,
                                     f.ring()->exponent_limit());
    return gbdetail::to_element(f.ring(), f.rank(), h);
}

template <typename F>
Polynomial<F> mora_normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis,
                               const MonomialOrder& ord) {
    if (ord.is_global()) throw std::invalid_argument("mora_normal_form needs a local order");
    ModuleOrder mo = ModuleOrder::pot(ord);
    auto h = gbdetail::mora_normal_form_v(f.ring()->field(),
                                          gbdetail::from_element(ModuleElement<F>{{f}}, mo),
                                          gbdetail::to_vpolys(basis, mo), mo,
                                          f.ring()->exponent_limit());
    return gbdetail::to_element(f.ring(), 1, h).components[0];
}

template <typename F>
GroebnerBasis<F> buchberger(const std::vector<Polynomial<F>>& gens, const MonomialOrder& ord) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    if (!ord.is_global()) throw std::invalid_argument("buchberger needs a global order");
    ModuleOrder mo = ModuleOrder::pot(ord);
    return gbdetail::run_buchberger(gens.front().ring(), std::size_t{1},
                                    gbdetail::to_vpolys(gens, mo), mo, false);
}

template <typename F>
GroebnerBasis<F> buchberger(const std::vector<ModuleElement<F>>& gens, const ModuleOrder& ord) {
    if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
    if (!ord.base.is_global()) throw std::invalid_argument("buchberger needs a global order");
    return gbdetail::run_buchberger(gens.front().ring(), gens.front().rank(),
                                    gbdetail::to_vpolys(gens, ord), ord, false);
}

template <typename F>
GroebnerBasis<F> standard_basis(const std::vector<Polynomial<F>>& gens, const MonomialOrder& ord) {
    if (gens.empty()) throw std::invalid_argument("standard_basis: empty generator list");
    if (ord.is_global()) throw std::invalid_argument("standard_basis needs a local order");
    ModuleOrder mo = ModuleOrder::pot(ord);
    return gbdetail::run_buchberger(gens.front().ring(), std::size_t{1},
                                    gbdetail::to_vpolys(gens, mo), mo, true);
}

// Re-reduces every S-pair to zero: the defining certificate.
template <typename F>
bool certify(const GroebnerBasis<F>& basis) {
    const F& K = basis.ring->field();
    const std::uint64_t limit = basis.ring->exponent_limit();
    auto G = gbdetail::to_vpolys(basis.elements, basis.order);
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i + 1; j < G.size(); ++j) {
            if (G[i].front().comp != G[j].front().comp) continue;
            auto s = gbdetail::s_vector(K, G[i], G[j], basis.order, limit);
            auto h = basis.local
                         ? gbdetail::mora_normal_form_v(K, std::move(s), G, basis.order, limit)
                         : gbdetail::normal_form_v(K, std::move(s), G, basis.order, limit);
            if (!h.empty()) return false;
        }
    }
    return true;
}

// Number of monomials (per component) outside the leading-term ideal.
template <typename F>
ExtendedNat quotient_dimension(const GroebnerBasis<F>& basis) {
    const std::size_t n = basis.ring->arity();
    std::uint64_t total = 0;
    for (std::uint32_t c = 0; c < basis.rank; ++c) {
        std::vector<Monomial> leads;
        bool unit = false;
        for (const auto& [comp, m] : basis.leads) {
            if (comp != c) continue;
            if (m.is_one()) unit = true;
            leads.push_back(m);
        }
        if (unit) continue;               // unit component: nothing survives
        if (leads.empty()) return ExtendedNat::inf();  // free component
        // finite iff a pure power of every variable appears among the leads
        std::vector<std::uint32_t> box(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            std::uint32_t best = 0;
            for (const auto& m : leads) {
                if (m.exponent(i) == 0 || m.degree() != m.exponent(i)) continue;
                if (best == 0 || m.exponent(i) < best) best = m.exponent(i);
            }
            if (best == 0) return ExtendedNat::inf();
            box[i] = best;
        }
        std::uint64_t bound = 1;
        for (auto b : box) {
            bound *= b;
            if (bound > 10'000'000ull)
                throw std::overflow_error("quotient dimension enumeration too large");
        }
        std::vector<std::uint32_t> exps(n, 0);
        std::uint64_t count = 0;
        // enumerate the box, counting monomials no lead divides
        for (;;) {
            Monomial m{std::vector<std::uint32_t>(exps)};
            bool divisible = false;
            for (const auto& l : leads)
                if (l.divides(m)) {
                    divisible = true;
                    break;
                }
            if (!divisible) ++count;
            std::size_t i = 0;
            while (i < n) {
                if (++exps[i] < box[i]) break;
                exps[i] = 0;
                ++i;
            }
            if (i == n) break;
        }
        total += count;
    }
    return ExtendedNat::of(total);
}

// Krull dimension of the leading-term ideal's variety: the largest
// variable subset meeting no leading monomial's support.
template <typename F>
std::size_t leading_ideal_dimension(const GroebnerBasis<F>& basis) {
    if (basis.rank != 1) throw std::invalid_argument("leading_ideal_dimension: ideal basis only");
    if (basis.local) throw std::invalid_argument("leading_ideal_dimension: global basis only");
    const std::size_t n = basis.ring->arity();
    if (n > 24) throw std::overflow_error("leading_ideal_dimension: too many variables");
    std::vector<std::uint32_t> supports;
    for (const auto& [comp, m] : basis.leads) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (m.exponent(i)) s |= (1u << i);
        supports.push_back(s);
    }
    std::size_t best = 0;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
        bool ok = true;
        for (auto s : supports)
            if ((s & ~S) == 0) {  // support contained in S
                ok = false;
                break;
            }
        if (ok) best = std::max<std::size_t>(best, std::popcount(S));
    }
    return best;
}

// True iff g vanishes on V(gens): Rabinowitsch trick, 1 in (gens, 1 - t*g).
template <typename F>
bool radical_membership(const Polynomial<F>& g, const std::vector<Polynomial<F>>& gens) {
    if (gens.empty()) throw std::invalid_argument("radical_membership: empty generator list");
    RingPtr<F> ring = gens.front().ring();
    const F& K = ring->field();
    std::string fresh = "t";
    for (;;) {
        bool clash = false;
        for (const auto& v : ring->variables())
            if (v == fresh) clash = true;
        if (!clash) break;
        fresh += "_";
    }
    std::vector<std::string> vars = ring->variables();
    vars.push_back(fresh);
    auto ext = std::make_shared<const Ring<F>>(K, std::move(vars), Grading(StandardGrading{}),
                                               ring->exponent_limit());
    std::vector<std::size_t> embed(ring->arity());
    for (std::size_t i = 0; i < embed.size(); ++i) embed[i] = i;
    std::vector<Polynomial<F>> lifted;
    for (const auto& h : gens) lifted.push_back(map_variables(h, ext, embed));
    Polynomial<F> t = Polynomial<F>::variable(ext, ext->arity() - 1);
    Polynomial<F> one = Polynomial<F>::constant(ext, K.one());
    lifted.push_back(one - t * map_variables(g, ext, embed));
    auto basis = buchberger(lifted, MonomialOrder::grevlex());
    for (const auto& [comp, m] : basis.leads)
        if (m.is_one()) return true;
    return false;
}

}  // namespace syzrank
