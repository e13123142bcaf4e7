#include "thomas/alg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace thomas {

namespace {

using Cx = std::complex<double>;

Rational rand_rational(std::mt19937& g, bool nonzero) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 8);
    for (;;) {
        int n = num(g);
        if (nonzero && n == 0) continue;
        return make_rational(n, den(g));
    }
}

Cx horner(const std::vector<Cx>& c, Cx x) {
    Cx v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

Cx horner_derivative(const std::vector<Cx>& c, Cx x) {
    Cx v = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) v = v * x + c[i] * static_cast<double>(i);
    return v;
}

// Durand-Kerner iteration; c[i] is the coefficient of x^i, c.back() != 0
std::vector<Cx> poly_roots(std::vector<Cx> c) {
    std::size_t d = c.size() - 1;
    Cx lead = c[d];
    for (auto& z : c) z /= lead;
    double scale = 1.0;
    for (const auto& z : c) scale = std::max(scale, std::abs(z));
    std::vector<Cx> r(d);
    Cx seed(0.4, 0.9);
    Cx acc = 1.0;
    for (std::size_t k = 0; k < d; ++k) {
        acc *= seed;
        r[k] = acc * scale;
    }
    for (int it = 0; it < 600; ++it) {
        double worst = 0.0;
        for (std::size_t k = 0; k < d; ++k) {
            Cx den = 1.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != k) den *= r[k] - r[j];
            if (std::abs(den) < 1e-300) den = 1e-300;
            Cx delta = horner(c, r[k]) / den;
            r[k] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14 * scale) break;
    }
    return r;
}

Cx newton_polish(const std::vector<Cx>& c, Cx z) {
    for (int it = 0; it < 40; ++it) {
        Cx f = horner(c, z);
        Cx fp = horner_derivative(c, z);
        if (std::abs(fp) < 1e-290) break;
        Cx step = f / fp;
        z -= step;
        if (std::abs(step) < 1e-16 * (1.0 + std::abs(z))) break;
    }
    return z;
}

struct OrderedMember {
    const Poly* p;
    bool is_eq;
    VarId leader;
};

// Reduction chains can blow coefficients up to hundreds of digits; double
// evaluation of such members cancels catastrophically. Coordinates are kept in
// high-precision complex form and every root is polished there, so the rounded
// double point still satisfies the small-coefficient inputs.
constexpr int kHpBits = 768;

struct HC {
    mpf_class re{0, kHpBits};
    mpf_class im{0, kHpBits};
};

HC hc_from(const Rational& r) {
    HC z;
    z.re = mpf_class(r, kHpBits);
    return z;
}

HC hc_from(Cx c) {
    HC z;
    z.re = mpf_class(c.real(), kHpBits);
    z.im = mpf_class(c.imag(), kHpBits);
    return z;
}

Cx to_cx(const HC& z) { return Cx(z.re.get_d(), z.im.get_d()); }

HC hc_add(const HC& a, const HC& b) {
    HC r;
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}

HC hc_sub(const HC& a, const HC& b) {
    HC r;
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}

HC hc_mul(const HC& a, const HC& b) {
    HC r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}

HC hc_div(const HC& a, const HC& b) {
    mpf_class den = b.re * b.re + b.im * b.im;
    HC r;
    r.re = (a.re * b.re + a.im * b.im) / den;
    r.im = (a.im * b.re - a.re * b.im) / den;
    return r;
}

mpf_class hc_abs_sq(const HC& z) { return z.re * z.re + z.im * z.im; }

HC eval_hp(const Poly& p, const std::map<VarId, HC>& point) {
    HC s;
    for (const auto& t : p.terms()) {
        HC m = hc_from(t.coeff);
        for (const auto& [v, e] : t.mon.factors) {
            auto it = point.find(v);
            HC base = it == point.end() ? HC{} : it->second;
            for (std::uint32_t k = 0; k < e; ++k) m = hc_mul(m, base);
        }
        s = hc_add(s, m);
    }
    return s;
}

HC horner_hp(const std::vector<HC>& c, const HC& x) {
    HC v;
    for (std::size_t i = c.size(); i-- > 0;) v = hc_add(hc_mul(v, x), c[i]);
    return v;
}

HC horner_hp_derivative(const std::vector<HC>& c, const HC& x) {
    HC v;
    for (std::size_t i = c.size(); i-- > 1;) {
        HC ci = c[i];
        ci.re *= static_cast<double>(i);
        ci.im *= static_cast<double>(i);
        v = hc_add(hc_mul(v, x), ci);
    }
    return v;
}

HC newton_hp(const std::vector<HC>& c, HC z) {
    for (int it = 0; it < 80; ++it) {
        HC fp = horner_hp_derivative(c, z);
        if (hc_abs_sq(fp) == 0) break;
        HC step = hc_div(horner_hp(c, z), fp);
        z = hc_sub(z, step);
        mpf_class done = (mpf_class(1, kHpBits) + hc_abs_sq(z)) * 1e-80;
        if (hc_abs_sq(step) < done) break;
    }
    return z;
}

// sum of |coeff| * |monomial| over all terms; the natural scale of p at the
// point, used to keep residual tests meaningful for huge-coefficient output
double eval_scale(const Poly& p, const std::map<VarId, Cx>& point) {
    double s = 0.0;
    for (const auto& t : p.terms()) {
        double m = std::abs(t.coeff.get_d());
        for (const auto& [v, e] : t.mon.factors) {
            auto it = point.find(v);
            double base = it == point.end() ? 0.0 : std::abs(it->second);
            for (std::uint32_t k = 0; k < e; ++k) m *= base;
        }
        s += m;
    }
    return s;
}

double relative_value(const Poly& p, const std::map<VarId, Cx>& point) {
    return std::abs(p.eval(point)) / std::max(1.0, eval_scale(p, point));
}

} // namespace

std::vector<SamplePoint> sample_solutions(const SimpleAlgSystem& S, Context& ctx,
                                          const VarOrder& ord, std::size_t count,
                                          unsigned seed) {
    std::set<VarId> leaders;
    std::vector<OrderedMember> members;
    for (std::size_t i = 0; i < S.equations.size(); ++i) {
        members.push_back({&S.equations[i], true, S.eq_leaders[i]});
        leaders.insert(S.eq_leaders[i]);
    }
    for (std::size_t i = 0; i < S.inequations.size(); ++i) {
        members.push_back({&S.inequations[i], false, S.ineq_leaders[i]});
        leaders.insert(S.ineq_leaders[i]);
    }
    std::sort(members.begin(), members.end(),
              [&](const OrderedMember& a, const OrderedMember& b) {
                  return ord.less(a.leader, b.leader);
              });
    std::set<VarId> free_vars;
    for (const OrderedMember& m : members)
        for (VarId v : m.p->vars())
            if (!leaders.count(v)) free_vars.insert(v);

    std::vector<SamplePoint> out;
    for (std::size_t k = 0; k < count; ++k) {
        std::seed_seq sq{seed, static_cast<unsigned>(k)};
        std::mt19937 g(sq);
        bool found = false;
        for (int attempt = 0; attempt < 200 && !found; ++attempt) {
            SamplePoint pt;
            pt.all_exact = true;
            std::map<VarId, HC> hp;
            for (VarId v : free_vars) {
                Rational r = rand_rational(g, ctx.info(v).kind == VarKind::KConst);
                pt.exact[v] = r;
                pt.coords[v] = Cx(to_double(r), 0.0);
                hp[v] = hc_from(r);
            }
            bool ok = true;
            for (const OrderedMember& m : members) {
                VarId x = m.leader;
                int d = m.p->degree(x);
                std::vector<Poly> cp = m.p->coeffs_in(x);
                std::vector<HC> hc(cp.size());
                std::vector<Cx> c(cp.size());
                double cmax = 0.0;
                for (std::size_t i = 0; i < cp.size(); ++i) {
                    hc[i] = eval_hp(cp[i], hp);
                    c[i] = to_cx(hc[i]);
                    cmax = std::max(cmax, std::abs(c[i]));
                }
                if (m.is_eq) {
                    if (std::abs(c.back()) < 1e-10 * std::max(1.0, cmax)) {
                        ok = false;
                        break;
                    }
                    if (d == 1) {
                        bool exact_done = false;
                        if (pt.all_exact) {
                            auto e0 = cp[0].eval_exact(pt.exact);
                            auto e1 = cp[1].eval_exact(pt.exact);
                            if (e0 && e1 && *e1 != 0) {
                                Rational root = -(*e0) / (*e1);
                                pt.exact[x] = root;
                                pt.coords[x] = Cx(to_double(root), 0.0);
                                hp[x] = hc_from(root);
                                exact_done = true;
                            }
                        }
                        if (!exact_done) {
                            HC z = hc_div(hc_sub(HC{}, hc[0]), hc[1]);
                            hp[x] = z;
                            pt.coords[x] = to_cx(z);
                            pt.all_exact = false;
                        }
                    } else {
                        auto roots = poly_roots(c);
                        std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
                        HC z = newton_hp(hc, hc_from(newton_polish(c, roots[pick(g)])));
                        hp[x] = z;
                        pt.coords[x] = to_cx(z);
                        pt.all_exact = false;
                    }
                } else {
                    bool placed = false;
                    for (int t = 0; t < 60 && !placed; ++t) {
                        Rational cand = rand_rational(g, false);
                        Cx z(to_double(cand), 0.0);
                        double mag = 0.0, zp = 1.0;
                        for (const Cx& ci : c) {
                            mag += std::abs(ci) * zp;
                            zp *= std::abs(z);
                        }
                        if (std::abs(horner(c, z)) <= 1e-8 * std::max(1.0, mag)) continue;
                        pt.coords[x] = z;
                        pt.exact[x] = cand;
                        hp[x] = hc_from(cand);
                        placed = true;
                    }
                    if (!placed) { ok = false; break; }
                }
            }
            if (!ok) continue;
            Residual res = residual_at(S.as_alg_system(), pt);
            if (res.worst_eq < 1e-10 && res.min_ineq > 1e-8) {
                if (!pt.all_exact) pt.exact.clear();
                out.push_back(std::move(pt));
                found = true;
            }
        }
        if (!found) throw ResourceLimitError("sampling failed to place a point");
    }
    return out;
}

Residual residual_at(const AlgSystem& S, const SamplePoint& pt) {
    Residual r;
    for (const Poly& p : S.equations)
        r.worst_eq = std::max(r.worst_eq, relative_value(p, pt.coords));
    r.min_ineq = 1.0;
    for (const Poly& q : S.inequations)
        r.min_ineq = std::min(r.min_ineq, relative_value(q, pt.coords));
    return r;
}

} // namespace thomas
