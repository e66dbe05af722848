#include "syzrank/job.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

#include "syzrank/errors.hpp"
#include "syzrank/fanio.hpp"
#include "syzrank/incidence.hpp"
#include "syzrank/parse.hpp"
#include "syzrank/projective.hpp"
#include "syzrank/toric.hpp"

namespace syzrank {
namespace {

using QF = RationalField;
using QPoly = Polynomial<QF>;

// ---- rational roots of a univariate polynomial ----

// coefficients ascending by exponent, c.back() != 0 unless constant zero
struct UniPoly {
    std::vector<Rational> c;
    std::size_t degree() const { return c.size() - 1; }
};

Rational eval_uni(const UniPoly& u, const Rational& r) {
    Rational acc(0);
    for (std::size_t i = u.c.size(); i-- > 0;) acc = acc * r + u.c[i];
    return acc;
}

UniPoly divide_linear(const UniPoly& u, const Rational& r) {
    UniPoly q;
    q.c.assign(u.c.size() - 1, Rational(0));
    Rational carry(0);
    for (std::size_t i = u.c.size() - 1; i-- > 0;) {
        carry = u.c[i + 1] + carry * r;
        q.c[i] = carry;
    }
    return q;
}

std::vector<Integer> bounded_divisors(const Integer& n0, unsigned long cap) {
    Integer n = abs(n0);
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n && cmp(d, cap) <= 0; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        Integer e = n / d;
        if (e != d && cmp(e, cap) <= 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Distinct rational roots; `split` reports whether the polynomial factors
// completely into rational linear factors over the candidate height cap.
std::vector<Rational> rational_roots(UniPoly u, unsigned long cap, bool& split) {
    std::vector<Rational> roots;
    while (u.c.size() > 1 && u.c.front() == 0) {
        u.c.erase(u.c.begin());
        if (roots.empty()) roots.emplace_back(0);
    }
    std::set<Rational> candidates;
    if (u.c.size() > 1) {
        Integer lcm_den(1);
        for (const auto& q : u.c) lcm_den = lcm(lcm_den, q.get_den());
        std::vector<Integer> a;
        for (const auto& q : u.c) {
            Rational scaled = q * Rational(lcm_den);
            a.push_back(scaled.get_num());
        }
        for (const Integer& p : bounded_divisors(a.front(), cap))
            for (const Integer& q : bounded_divisors(a.back(), cap)) {
                Rational r(p, q);
                r.canonicalize();
                candidates.insert(r);
                candidates.insert(Rational(-r));
            }
    }
    for (;;) {
        if (u.degree() == 0) {
            split = true;
            return roots;
        }
        if (u.degree() == 1) {
            Rational r = -u.c[0] / u.c[1];
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            split = true;
            return roots;
        }
        bool divided = false;
        for (const auto& r : candidates) {
            if (eval_uni(u, r) != 0) continue;
            u = divide_linear(u, r);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            divided = true;
            break;
        }
        if (!divided) {
            split = false;
            return roots;
        }
    }
}

// ---- rational points of a 0-dimensional affine ideal ----

bool pure_in_last_variable(const QPoly& g) {
    std::size_t k = g.ring()->arity();
    for (const auto& t : g.terms())
        for (std::size_t i = 0; i + 1 < k; ++i)
            if (t.mono.exponent(i)) return false;
    return true;
}

UniPoly extract_univariate(const QPoly& g) {
    std::size_t last = g.ring()->arity() - 1;
    std::uint32_t deg = 0;
    for (const auto& t : g.terms()) deg = std::max(deg, t.mono.exponent(last));
    UniPoly u;
    u.c.assign(deg + 1, Rational(0));
    for (const auto& t : g.terms()) u.c[t.mono.exponent(last)] += t.coeff;
    return u;
}

void enumerate_points(const std::vector<QPoly>& gens, unsigned long cap,
                      std::vector<Rational>& tail, std::vector<std::vector<Rational>>& out,
                      bool& complete) {
    const auto& ring = gens.front().ring();
    std::size_t k = ring->arity();
    auto gb = buchberger(gens, MonomialOrder::lex());

    const QPoly* uni = nullptr;
    for (const auto& el : gb.elements) {
        const QPoly& g = el.components.front();
        if (!g.is_zero() && g.total_degree() == 0) return;  // unit ideal, no solutions
        if (!uni && !g.is_zero() && pure_in_last_variable(g)) uni = &g;
    }
    if (!uni)
        throw internal_inconsistency("singular-point search: slice is not zero-dimensional");

    bool split = true;
    auto roots = rational_roots(extract_univariate(*uni), cap, split);
    if (!split) complete = false;

    for (const auto& r : roots) {
        if (k == 1) {
            std::vector<Rational> sol;
            sol.push_back(r);
            for (std::size_t i = tail.size(); i-- > 0;) sol.push_back(tail[i]);
            out.push_back(std::move(sol));
            continue;
        }
        std::vector<std::optional<Rational>> assign(k);
        assign[k - 1] = r;
        std::vector<QPoly> sub;
        for (const auto& g : gens) {
            auto h = g.specialize(assign);
            if (!h.is_zero()) sub.push_back(std::move(h));
        }
        if (sub.empty())
            throw internal_inconsistency("singular-point search: slice is not zero-dimensional");
        tail.push_back(r);
        enumerate_points(sub, cap, tail, out, complete);
        tail.pop_back();
    }
}

}  // namespace

SingularSearch find_rational_singular_points(const Polynomial<RationalField>& f,
                                             unsigned long height_cap) {
    SingularSearch res;
    auto jac = jacobian(f);
    auto gb = buchberger(jac, MonomialOrder::grevlex());
    // V(jac f) is a cone; affine dimension >= 2 means the projectivized
    // singular locus is positive-dimensional.
    if (leading_ideal_dimension(gb) >= 2) {
        res.positive_dimensional = true;
        res.complete = false;
        return res;
    }
    const QF K;
    std::size_t n1 = f.ring()->arity();
    for (std::size_t i = 0; i < n1; ++i) {
        // chart x_i = 1, stratified by x_j = 0 for j < i
        RingPtr<QF> chart_ring = f.dehomogenize(i).ring();
        std::vector<QPoly> gens;
        for (const auto& g : jac) {
            if (g.is_zero()) continue;
            auto h = g.dehomogenize(i);
            if (!h.is_zero()) gens.push_back(std::move(h));
        }
        for (std::size_t j = 0; j < i; ++j)
            gens.push_back(QPoly::variable(chart_ring, j));
        if (gens.empty()) continue;
        std::vector<std::vector<Rational>> sols;
        std::vector<Rational> tail;
        enumerate_points(gens, height_cap, tail, sols, res.complete);
        for (auto& sol : sols) {
            Point<QF> P{PointKind::Projective, {}};
            for (std::size_t j = 0; j < n1; ++j) {
                if (j == i)
                    P.coords.push_back(K.one());
                else
                    P.coords.push_back(sol[j < i ? j : j - 1]);
            }
            res.points.push_back(std::move(P));
        }
    }
    return res;
}

namespace {

// ---- job orchestration ----

struct AmbientSpec {
    bool toric = false;
    std::size_t n = 0;  // projective dimension when !toric
    Fan fan;
    PicData pic;
    std::string echo;
};

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

AmbientSpec parse_ambient(const JobConfig& cfg) {
    AmbientSpec amb;
    amb.echo = cfg.ambient;
    if (cfg.ambient.rfind("pn:", 0) == 0) {
        std::string tail = cfg.ambient.substr(3);
        try {
            std::size_t used = 0;
            unsigned long n = std::stoul(tail, &used);
            if (used != tail.size() || n < 1 || n > 16)
                throw std::invalid_argument("bad dimension");
            amb.n = n;
        } catch (const std::exception&) {
            throw std::invalid_argument("ambient: expected pn:<n> with 1 <= n <= 16");
        }
        return amb;
    }
    if (cfg.ambient.rfind("toric:", 0) == 0) {
        amb.toric = true;
        amb.fan = load_fan_file(cfg.ambient.substr(6));
        amb.pic = validate_fan(amb.fan);
        return amb;
    }
    throw std::invalid_argument("ambient must be pn:<n> or toric:<file>");
}

void validate_vars(const JobConfig& cfg, const AmbientSpec& amb) {
    std::set<std::string> seen;
    for (const auto& v : cfg.vars) {
        if (!valid_identifier(v))
            throw std::invalid_argument("variable '" + v + "' is not an identifier");
        if (!seen.insert(v).second)
            throw std::invalid_argument("duplicate variable '" + v + "'");
    }
    std::size_t want = amb.toric ? amb.fan.rays.size() : amb.n + 1;
    if (cfg.vars.size() != want)
        throw std::invalid_argument("expected " + std::to_string(want) + " variables, got " +
                                    std::to_string(cfg.vars.size()));
}

std::size_t thread_budget(std::size_t work) {
    std::size_t n = 1;
    if (const char* s = std::getenv("SYZRANK_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end && *end == '\0' && v > 1) n = static_cast<std::size_t>(v);
    }
    n = std::min<std::size_t>(n, 64);
    return std::max<std::size_t>(1, std::min(n, work));
}

// Runs fn(i) for i in [0, count), in input order per slot, possibly in parallel.
template <typename Fn>
void for_each_index(std::size_t count, Fn&& fn) {
    std::size_t workers = thread_budget(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

std::string extended_string(const ExtendedNat& v) { return v.to_string(); }

template <typename F>
bool same_projective_point(const F& K, const Point<F>& a, const Point<F>& b) {
    if (a.coords.size() != b.coords.size()) return false;
    auto na = normalize_projective(K, a), nb = normalize_projective(K, b);
    for (std::size_t i = 0; i < na.coords.size(); ++i)
        if (!K.equal(na.coords[i], nb.coords[i])) return false;
    return true;
}

template <typename F>
RunReport run_typed(const JobConfig& cfg, const AmbientSpec& amb, const F& K) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.ambient = amb.echo;
    rep.field = K.name();
    rep.vars = cfg.vars;

    RingPtr<F> ring =
        amb.toric ? make_cox_ring(K, cfg.vars, amb.pic.degrees) : make_ring(K, cfg.vars);
    RingPtr<QF> qring = amb.toric ? make_cox_ring(QF{}, cfg.vars, amb.pic.degrees)
                                  : make_ring(QF{}, cfg.vars);
    Polynomial<F> f = convert_coefficients<F>(parse_polynomial(cfg.poly, qring), ring);
    rep.poly = serialize_polynomial(f);

    std::vector<Point<F>> pts;
    for (const auto& text : cfg.points) {
        auto pp = parse_point(text);
        if (!amb.toric && pp.kind != PointKind::Projective)
            throw std::invalid_argument("projective ambient expects [a : b : ...] points");
        if (amb.toric && pp.kind != PointKind::Affine)
            throw std::invalid_argument("toric ambient expects (a, b, ...) Cox points");
        if (pp.coords.size() != ring->arity())
            throw std::invalid_argument("point arity mismatch: " + text);
        Point<F> P{amb.toric ? PointKind::Cox : PointKind::Projective, {}};
        for (const auto& q : pp.coords) P.coords.push_back(K.from_rational(q));
        pts.push_back(std::move(P));
    }

    if (amb.toric) {
        ToricHypersurface<F> T(amb.fan, amb.pic, f);
        rep.picard_rank = T.picard_rank();
        rep.completeness_warning = amb.pic.completeness_warning;
        rep.points.resize(pts.size());
        for_each_index(pts.size(), [&](std::size_t i) {
            PointRecord rec;
            rec.point = point_string(K, pts[i]);
            auto st = T.point_status(pts[i]);
            rec.status = to_string(st);
            if (st != PointStatus::NotOnD) {
                auto r = T.classify(pts[i]);
                rec.rk_Mprime = r.rk_Mprime;
                rec.rk_M = r.rk_M;
                rec.defect = r.defect;
                rec.seh = r.seh;
                if (cfg.run_oracles) {
                    auto orc = T.torus_chart_oracle(pts[i]);
                    rec.oracle =
                        OracleRecord{orc.rk_j, orc.rk_jprime,
                                     (orc.rk_jprime == orc.rk_j + 1) == r.seh};
                }
            }
            rep.points[i] = std::move(rec);
        });
    } else {
        ProjectiveHypersurface<F> D(f);
        rep.reduced_ok = D.reducedness_warning().ok;
        rep.singular_locus_dimension = D.reducedness_warning().dimension;

        if (cfg.find_singular) {
            if constexpr (std::is_same_v<F, QF>) {
                auto found = find_rational_singular_points(f, cfg.root_height_cap);
                FindSingularRecord fsr;
                fsr.complete = found.complete;
                fsr.positive_dimensional = found.positive_dimensional;
                for (const auto& P : found.points) {
                    fsr.points.push_back(point_string(K, P));
                    bool known = false;
                    for (const auto& have : pts)
                        if (same_projective_point(K, have, P)) known = true;
                    if (!known) pts.push_back(P);
                }
                rep.find_singular = std::move(fsr);
            } else {
                throw std::invalid_argument("--find-singular requires --field q");
            }
        }

        rep.points.resize(pts.size());
        for_each_index(pts.size(), [&](std::size_t i) {
            PointRecord rec;
            rec.point = point_string(K, pts[i]);
            auto st = D.point_status(pts[i]);
            rec.status = to_string(st);
            if (st != PointStatus::NotOnD) {
                auto r = (cfg.refine_isolated && st == PointStatus::Singular)
                             ? D.classify_isolated(pts[i], cfg.run_oracles)
                             : D.classify(pts[i], cfg.run_oracles);
                rec.rk_Mprime = r.rk_Mprime;
                rec.rk_M = r.rk_M;
                rec.seh = r.seh;
                if (r.refinement) {
                    rec.quasi_homogeneous = r.refinement->quasi_homogeneous;
                    rec.mu = extended_string(r.refinement->mu);
                    rec.tau = extended_string(r.refinement->tau);
                }
                if (!r.refinement_note.empty()) rec.refinement_note = r.refinement_note;
                if (r.oracle)
                    rec.oracle = OracleRecord{r.oracle->rk_j, r.oracle->rk_jprime,
                                              r.oracle->agrees};
            }
            rep.points[i] = std::move(rec);
        });

        if (cfg.global_check) rep.global_seh = global_seh_check(f);
    }

    if (cfg.run_oracles) {
        bool all = true;
        for (const auto& rec : rep.points)
            if (rec.oracle && !rec.oracle->agrees) all = false;
        rep.oracles_agree = all;
    }

    auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

}  // namespace

RunOutcome run_job(const JobConfig& cfg) {
    RunOutcome out;
    try {
        if (cfg.format != "text" && cfg.format != "machine")
            throw std::invalid_argument("format must be text or machine");
        AmbientSpec amb = parse_ambient(cfg);
        validate_vars(cfg, amb);
        if (amb.toric && (cfg.global_check || cfg.find_singular || cfg.refine_isolated))
            throw std::invalid_argument(
                "--global-check, --find-singular and --refine-isolated require a projective "
                "ambient");

        RunReport rep;
        if (cfg.field == "q") {
            rep = run_typed(cfg, amb, QF{});
        } else if (cfg.field.rfind("fp:", 0) == 0) {
            unsigned long p = 0;
            try {
                std::size_t used = 0;
                p = std::stoul(cfg.field.substr(3), &used);
                if (used != cfg.field.size() - 3) throw std::invalid_argument("bad prime");
            } catch (const std::exception&) {
                throw std::invalid_argument("field must be q or fp:<prime>");
            }
            rep = run_typed(cfg, amb, PrimeField(p));
        } else {
            throw std::invalid_argument("field must be q or fp:<prime>");
        }
        out.output = cfg.format == "machine" ? render_machine(rep) : render_text(rep);
    } catch (const internal_inconsistency& e) {
        out.exit_code = 3;
        out.error = std::string("internal inconsistency: ") + e.what() + "\n";
    } catch (const std::invalid_argument& e) {
        out.exit_code = 2;
        out.error = std::string("input error: ") + e.what() + "\n";
    } catch (const std::domain_error& e) {
        out.exit_code = 2;
        out.error = std::string("input error: ") + e.what() + "\n";
    } catch (const std::overflow_error& e) {
        out.exit_code = 2;
        out.error = std::string("input error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        out.exit_code = 3;
        out.error = std::string("internal error: ") + e.what() + "\n";
    }
    return out;
}

}  // namespace syzrank
