#include "thomas/poly_ops.hpp"

#include <cassert>

namespace thomas {

PseudoDiv pseudo_divide(const Poly& p1, const Poly& p2, VarId x) {
    assert(!p2.is_zero());
    int d2 = p2.degree(x);
    Poly i2 = p2.initial(x);
    PseudoDiv out;
    out.rem = p1;
    out.multiplier = Poly::constant(Rational(1));
    while (!out.rem.is_zero()) {
        int d = out.rem.degree(x);
        if (d < d2) break;
        Poly lc = out.rem.coeff_of(x, d);
        Poly shift = Poly::var(x, (std::uint32_t)(d - d2));
        out.rem = i2 * out.rem - lc * shift * p2;
        out.quo = i2 * out.quo + lc * shift;
        out.multiplier = out.multiplier * i2;
        out.power += 1;
        assert(out.rem.degree(x) < d || out.rem.is_zero());
    }
    return out;
}

Poly prem(const Poly& p1, const Poly& p2, VarId x) { return pseudo_divide(p1, p2, x).rem; }
Poly pquo(const Poly& p1, const Poly& p2, VarId x) { return pseudo_divide(p1, p2, x).quo; }

// remainder scaled to the full multiplier init(B)^(deg A - deg B + 1),
// as the subresultant divisions require
static Poly prem_full(const Poly& A, const Poly& B, VarId x) {
    int dA = A.degree(x), dB = B.degree(x);
    if (dB > 0 && A.degree(x) < dB) return A; // caller avoids this
    PseudoDiv pd = pseudo_divide(A, B, x);
    int want = dA - dB + 1;
    if (pd.power < want) {
        Poly extra = B.initial(x).pow((std::uint32_t)(want - pd.power));
        return pd.rem * extra;
    }
    return pd.rem;
}

std::vector<Poly> subresultant_prs(const Poly& A0, const Poly& B0, VarId x) {
    assert(!A0.is_zero() && !B0.is_zero());
    assert(A0.degree(x) >= B0.degree(x));
    std::vector<Poly> prs{A0, B0};
    Poly A = A0, B = B0;
    Poly g = Poly::constant(Rational(1));
    Poly h = Poly::constant(Rational(1));
    while (true) {
        int d = A.degree(x) - B.degree(x);
        if (B.degree(x) == 0) break;
        Poly R = prem_full(A, B, x);
        if (R.is_zero()) break;
        A = B;
        Poly denom = g * h.pow((std::uint32_t)d);
        auto next = Poly::divide_exact(R, denom);
        assert(next.has_value());
        B = *next;
        prs.push_back(B);
        g = A.initial(x);
        if (d > 0) {
            auto hn = Poly::divide_exact(g.pow((std::uint32_t)d), h.pow((std::uint32_t)(d - 1)));
            assert(hn.has_value());
            h = *hn;
        }
    }
    return prs;
}

Poly content_wrt(const Poly& p, VarId x) {
    Poly c;
    for (const Poly& q : p.coeffs_in(x)) {
        if (q.is_zero()) continue;
        c = gcd_poly(c, q);
        if (c.is_rational()) break;
    }
    return c.is_zero() ? Poly::constant(Rational(1)) : c;
}

Poly primitive_part(const Poly& p, VarId x) {
    if (p.is_zero()) return p;
    Poly c = content_wrt(p, x);
    auto q = Poly::divide_exact(p, c);
    assert(q.has_value());
    return q->unit_normalized();
}

Poly gcd_poly(const Poly& p, const Poly& q) {
    if (p.is_zero()) return q.unit_normalized();
    if (q.is_zero()) return p.unit_normalized();
    if (p.is_rational() || q.is_rational()) return Poly::constant(Rational(1));
    VarId x = std::max(*p.top_var_by_id(), *q.top_var_by_id());
    if (!p.contains(x)) return gcd_poly(p, content_wrt(q, x));
    if (!q.contains(x)) return gcd_poly(content_wrt(p, x), q);
    Poly cp = content_wrt(p, x), cq = content_wrt(q, x);
    Poly pp = *Poly::divide_exact(p, cp), qq = *Poly::divide_exact(q, cq);
    Poly c = gcd_poly(cp, cq);
    std::vector<Poly> prs = pp.degree(x) >= qq.degree(x) ? subresultant_prs(pp, qq, x)
                                                         : subresultant_prs(qq, pp, x);
    Poly g = prs.back();
    if (g.degree(x) == 0) return c.unit_normalized();
    return (c * primitive_part(g, x)).unit_normalized();
}

Poly lcm_poly(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    auto l = Poly::divide_exact(p * q, gcd_poly(p, q));
    assert(l.has_value());
    return l->unit_normalized();
}

Poly strip_coeff_content(const Poly& p, const Context& ctx) {
    if (p.is_zero() || p.is_rational()) return p;
    auto mless = [](const Monomial& a, const Monomial& b) { return monomial_cmp(a, b) < 0; };
    std::map<Monomial, Poly, decltype(mless)> groups(mless);
    for (const auto& t : p.terms()) {
        Monomial proper, coef;
        for (const auto& [v, e] : t.mon.factors)
            (ctx.is_coeff(v) ? coef : proper).factors.emplace_back(v, e);
        Poly piece;
        piece.add_term(coef, t.coeff);
        Poly& slot = groups[proper];
        slot = slot + piece;
    }
    Poly content;
    for (const auto& [mon, g] : groups) {
        content = content.is_zero() ? g : gcd_poly(content, g);
        if (content.is_rational()) return p;
    }
    if (content.is_rational()) return p;
    return Poly::divide_exact(p, content).value().unit_normalized();
}

Poly resultant(const Poly& p, const Poly& q, VarId x) {
    int m = p.degree(x), n = q.degree(x);
    if (p.is_zero() || q.is_zero()) return Poly();
    if (m == 0) return p.pow((std::uint32_t)n);
    if (n == 0) return q.pow((std::uint32_t)m);
    std::vector<Poly> pc = p.coeffs_in(x), qc = q.coeffs_in(x);
    std::size_t N = (std::size_t)(m + n);
    std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) M[(std::size_t)r][(std::size_t)(r + j)] = pc[(std::size_t)(m - j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) M[(std::size_t)(n + r)][(std::size_t)(r + j)] = qc[(std::size_t)(n - j)];

    // fraction-free determinant; divisions are exact over the coefficient ring
    int sign = 1;
    Poly prev = Poly::constant(Rational(1));
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < N && M[s][k].is_zero()) ++s;
            if (s == N) return Poly();
            std::swap(M[k], M[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j) {
                Poly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                auto d = Poly::divide_exact(num, prev);
                assert(d.has_value());
                M[i][j] = *d;
            }
            M[i][k] = Poly();
        }
        prev = M[k][k];
    }
    Poly det = M[N - 1][N - 1];
    return sign < 0 ? -det : det;
}

Poly discriminant(const Poly& p, VarId x) {
    int d = p.degree(x);
    if (d <= 1) return Poly::constant(Rational(1));
    Poly res = resultant(p, p.derivative(x), x);
    auto q = Poly::divide_exact(res, p.initial(x));
    assert(q.has_value());
    int sgn = ((long)d * (d - 1) / 2) % 2 == 0 ? 1 : -1;
    return sgn < 0 ? -*q : *q;
}

Poly square_free_part(const Poly& p, VarId x) {
    if (p.degree(x) == 0) return p.unit_normalized();
    Poly pp = primitive_part(p, x);
    Poly dp = pp.derivative(x);
    if (dp.is_zero()) return pp.unit_normalized();
    std::vector<Poly> prs = subresultant_prs(pp, dp, x);
    Poly g = prs.back();
    if (g.degree(x) == 0) return pp.unit_normalized();
    g = primitive_part(g, x);
    auto r = Poly::divide_exact(pp, g); // Gauss: primitive gcd divides in the ring
    assert(r.has_value());
    return r->unit_normalized();
}

} // namespace thomas
