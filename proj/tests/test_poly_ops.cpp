#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thomas/poly_ops.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace thomas;

namespace {

// registration order c, b, a, y, x; VarId order doubles as variable order
struct Vars {
    Context ctx;
    VarId y, a, b, c, x;

    Vars() {
        c = ctx.add_algvar("c");
        b = ctx.add_algvar("b");
        a = ctx.add_algvar("a");
        y = ctx.add_algvar("y");
        x = ctx.add_algvar("x");
    }
};

Poly P(VarId v) { return Poly::var(v); }

// classical Euclidean algorithm over Q[x] for univariate inputs; monic result
Poly euclid_gcd_univariate(Poly p, Poly q, VarId x) {
    auto monic = [&](const Poly& f) {
        if (f.is_zero()) return f;
        Rational lead = f.coeff_of(x, f.degree(x)).rational_value();
        return f.times(1 / lead);
    };
    while (!q.is_zero()) {
        // remainder of p by monic q
        Poly m = monic(q);
        Poly r = p;
        while (!r.is_zero() && r.degree(x) >= m.degree(x)) {
            Rational lc = r.coeff_of(x, r.degree(x)).rational_value();
            Poly t = P(x).pow(static_cast<std::uint32_t>(r.degree(x) - m.degree(x)))
                         .times(lc);
            r = r - t * m;
        }
        p = q;
        q = r;
    }
    return monic(p);
}

// Sylvester matrix determinant by Laplace expansion; rows hold the shifted
// coefficient sequences of p (deg q rows) then q (deg p rows).
Poly sylvester_det(const Poly& p, const Poly& q, VarId x) {
    int m = p.degree(x), n = q.degree(x);
    std::size_t N = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Poly>> M(N, std::vector<Poly>(N));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = p.coeff_of(x, m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = q.coeff_of(x, n - k);

    std::function<Poly(std::vector<std::vector<Poly>>)> det =
        [&](std::vector<std::vector<Poly>> A) -> Poly {
        if (A.size() == 1) return A[0][0];
        Poly acc;
        for (std::size_t i = 0; i < A.size(); ++i) {
            if (A[i][0].is_zero()) continue;
            std::vector<std::vector<Poly>> sub;
            for (std::size_t r = 0; r < A.size(); ++r) {
                if (r == i) continue;
                sub.push_back(std::vector<Poly>(A[r].begin() + 1, A[r].end()));
            }
            Poly minor = A[i][0] * det(std::move(sub));
            acc = (i % 2 == 0) ? acc + minor : acc - minor;
        }
        return acc;
    };
    return det(std::move(M));
}

Poly random_poly_in(std::mt19937& rng, VarId x, int maxdeg) {
    std::uniform_int_distribution<int> coeff(-4, 4), deg(0, maxdeg);
    Poly p;
    for (int t = 0; t <= maxdeg; ++t) {
        int c = coeff(rng);
        if (c != 0) p = p + P(x).pow(static_cast<std::uint32_t>(deg(rng))).times(c);
    }
    return p;
}

} // namespace

TEST_CASE("pseudo-division worked examples") {
    Vars V;
    Poly x = P(V.x), y = P(V.y);

    auto d1 = pseudo_divide(x * x, x.times(2) - y, V.x);
    CHECK(d1.quo == x.times(2) + y);
    CHECK(d1.rem == y * y);
    CHECK(d1.multiplier == Poly::constant(4));

    auto d2 = pseudo_divide(x, x, V.x);
    CHECK(d2.quo == Poly::constant(1));
    CHECK(d2.rem.is_zero());
    CHECK(d2.multiplier == Poly::constant(1));

    auto d3 = pseudo_divide(y, x, V.x);
    CHECK(d3.quo.is_zero());
    CHECK(d3.rem == y);
    CHECK(d3.multiplier == Poly::constant(1));
}

TEST_CASE("pseudo-division identity on random inputs") {
    Vars V;
    std::mt19937 rng(7);
    for (int it = 0; it < 60; ++it) {
        Poly p1 = random_poly_in(rng, V.x, 4);
        Poly p2 = random_poly_in(rng, V.x, 2);
        if (p2.is_zero() || p2.degree(V.x) == 0) continue;
        // mix in a parameter so initials are non-trivial
        if (it % 2) p2 = p2 + P(V.a) * P(V.x).pow(static_cast<std::uint32_t>(p2.degree(V.x)));
        auto d = pseudo_divide(p1, p2, V.x);
        CHECK(d.multiplier * p1 == d.quo * p2 + d.rem);
        CHECK(d.rem.degree(V.x) < p2.degree(V.x));
        CHECK(d.multiplier == p2.initial(V.x).pow(static_cast<std::uint32_t>(d.power)));
        CHECK(d.power <= std::max(0, p1.degree(V.x) - p2.degree(V.x) + 1));
        CHECK(prem(p1, p2, V.x) == d.rem);
        CHECK(pquo(p1, p2, V.x) == d.quo);
    }
}

TEST_CASE("gcd worked examples") {
    Vars V;
    Poly x = P(V.x);
    CHECK(gcd_poly(x * x - Poly::constant(1), x - Poly::constant(1)) ==
          x - Poly::constant(1));
    CHECK(gcd_poly(x * x + Poly::constant(1), x) == Poly::constant(1));
    CHECK(gcd_poly(x.pow(3), x.pow(3)) == x.pow(3));
    // multivariate: common factor x + y
    Poly f = (x + P(V.y)) * (x - P(V.y));
    Poly g = (x + P(V.y)) * x;
    CHECK(gcd_poly(f, g) == x + P(V.y));
    CHECK(lcm_poly(f, g) * gcd_poly(f, g) == (f * g).unit_normalized());
}

TEST_CASE("gcd matches Euclid over Q[x] on random univariate pairs") {
    Vars V;
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        Poly g = random_poly_in(rng, V.x, 2);
        Poly h1 = random_poly_in(rng, V.x, 2);
        Poly h2 = random_poly_in(rng, V.x, 2);
        Poly p = g * h1, q = g * h2;
        if (p.is_zero() || q.is_zero()) continue;
        Poly expect = euclid_gcd_univariate(p, q, V.x);
        CHECK(gcd_poly(p, q) == expect.unit_normalized());
    }
}

TEST_CASE("subresultant remainder sequence") {
    Vars V;
    Poly A = P(V.x).pow(4) - Poly::constant(1);
    Poly B = P(V.x).pow(2) - Poly::constant(1);
    auto prs = subresultant_prs(A, B, V.x);
    REQUIRE(prs.size() >= 2);
    CHECK(prs.front() == A);
    CHECK(prs[1] == B);
    CHECK(prem(A, prs.back(), V.x).is_zero());
    CHECK(prem(B, prs.back(), V.x).is_zero());
    for (std::size_t i = 2; i < prs.size(); ++i)
        CHECK(prs[i].degree(V.x) < prs[i - 1].degree(V.x));
}

TEST_CASE("resultant and discriminant worked examples") {
    Vars V;
    Poly x = P(V.x), a = P(V.a), b = P(V.b), c = P(V.c);

    Poly quad = a * x * x + b * x + c;
    CHECK(discriminant(quad, V.x) == b * b - (a * c).times(4));
    CHECK(discriminant(x * x - Poly::constant(1), V.x) == Poly::constant(4));
    CHECK(discriminant(x - P(V.y), V.x) == Poly::constant(1));
    // degree-0 argument follows Res(c, q) = c^deg(q)
    CHECK(resultant(b, x * x + Poly::constant(1), V.x) == b * b);
}

TEST_CASE("resultant matches the Sylvester determinant") {
    Vars V;
    std::mt19937 rng(13);
    for (int it = 0; it < 30; ++it) {
        Poly p = random_poly_in(rng, V.x, 3);
        Poly q = random_poly_in(rng, V.x, 2);
        if (it % 3 == 0) p = p + P(V.a) * P(V.x); // parametric coefficient
        if (p.degree(V.x) < 1 || q.degree(V.x) < 1) continue;
        CHECK(resultant(p, q, V.x) == sylvester_det(p, q, V.x));
    }
}

TEST_CASE("content and primitive part") {
    Vars V;
    Poly p = P(V.y) * P(V.x).pow(2) + P(V.y).pow(2) * P(V.x);
    CHECK(content_wrt(p, V.x) == P(V.y));
    CHECK(primitive_part(p, V.x) == P(V.x).pow(2) + P(V.y) * P(V.x));
    CHECK(content_wrt(p, V.x) * primitive_part(p, V.x) == p);
}

TEST_CASE("coefficient-field content is stripped") {
    Context ctx;
    VarId k = ctx.add_constant("k");
    VarId x = ctx.add_algvar("x");
    Poly kk = Poly::var(k).pow(2) + Poly::var(k);
    Poly p = kk * Poly::var(x) + kk;
    CHECK(strip_coeff_content(p, ctx) == Poly::var(x) + Poly::constant(1));
    // untouched when the content is already trivial
    Poly q = Poly::var(k) * Poly::var(x) + Poly::constant(1);
    CHECK(strip_coeff_content(q, ctx) == q);
}

TEST_CASE("square-free part worked examples") {
    Vars V;
    Poly x = P(V.x);
    CHECK(square_free_part((x - Poly::constant(1)) * (x - Poly::constant(1)), V.x) ==
          x - Poly::constant(1));
    CHECK(square_free_part(x * x - Poly::constant(1), V.x) == x * x - Poly::constant(1));
    CHECK(square_free_part(x.pow(3), V.x) == x);

    Poly p = (x - P(V.y)).pow(2) * (x + P(V.y));
    Poly s = square_free_part(p, V.x);
    CHECK(prem(p, s, V.x).is_zero());
    CHECK(gcd_poly(s, s.derivative(V.x)).is_rational());
}

TEST_CASE("square-free part on random inputs") {
    Vars V;
    std::mt19937 rng(17);
    for (int it = 0; it < 40; ++it) {
        Poly f = random_poly_in(rng, V.x, 2);
        Poly g = random_poly_in(rng, V.x, 2);
        if (f.degree(V.x) < 1 || g.degree(V.x) < 1) continue;
        Poly p = f * f * g;
        Poly s = square_free_part(p, V.x);
        CHECK(prem(p, s, V.x).is_zero());
        CHECK(gcd_poly(s, s.derivative(V.x)).is_rational());
    }
}
