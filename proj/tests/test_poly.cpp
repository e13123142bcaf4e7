#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thomas/poly.hpp"

using namespace thomas;

namespace {

struct Vars {
    Context ctx;
    VarId x, y, a, b, c;
    PermOrder ord;

    // c < b < a < y < x
    Vars()
        : x(0), y(0), a(0), b(0), c(0),
          ord(std::vector<int>{}) {
        c = ctx.add_algvar("c");
        b = ctx.add_algvar("b");
        a = ctx.add_algvar("a");
        y = ctx.add_algvar("y");
        x = ctx.add_algvar("x");
        ord = PermOrder::ascending({c, b, a, y, x}, ctx.n_vars());
    }
};

Poly P(VarId v) { return Poly::var(v); }

} // namespace

TEST_CASE("monomial arithmetic") {
    Monomial m = Monomial::var(3, 2).times(Monomial::var(1, 1));
    CHECK(m.total_degree() == 3);
    CHECK(m.degree_of(3) == 2);
    CHECK(m.degree_of(1) == 1);
    CHECK(m.degree_of(7) == 0);

    Monomial d = Monomial::var(3, 1);
    CHECK(d.divides(m));
    CHECK(m.divided_by(d) == Monomial::var(3, 1).times(Monomial::var(1, 1)));
    CHECK_FALSE(Monomial::var(2).divides(m));
    CHECK(Monomial::one().divides(m));
}

TEST_CASE("polynomial ring axioms on small expressions") {
    Vars V;
    Poly x = P(V.x), y = P(V.y);

    Poly s = (x + y) * (x + y);
    CHECK(s == x * x + x * y.times(2) + y * y);
    CHECK((s - s).is_zero());
    CHECK((x * y) * (x + y) == x * x * y + x * y * y);
    CHECK((-x) + x == Poly::zero());
    CHECK(x.pow(3) == x * x * x);
    CHECK(Poly::constant(0).is_zero());
}

TEST_CASE("canonical form is construction-order independent") {
    Vars V;
    Poly p1 = P(V.x) * P(V.y) + Poly::constant(2) + P(V.x).pow(2);
    Poly p2 = P(V.x).pow(2) + P(V.x) * P(V.y) + Poly::constant(2);
    CHECK(p1 == p2);
    CHECK(p1.term_count() == 3);

    Poly q;
    q.add_term(Monomial::var(V.x), make_rational(1));
    q.add_term(Monomial::var(V.x), make_rational(-1));
    CHECK(q.is_zero()); // cancelled terms are not stored
}

TEST_CASE("leader and initial") {
    Vars V;
    Poly p = P(V.x).pow(2) + P(V.y);
    CHECK(p.leader(V.ctx, V.ord) == V.x);

    Poly q = P(V.a) * P(V.x).pow(2) + P(V.b) * P(V.x) + P(V.c);
    CHECK(q.leader(V.ctx, V.ord) == V.x);
    CHECK(q.degree(V.x) == 2);
    CHECK(q.initial(V.x) == P(V.a));

    Poly r = (P(V.y).pow(2) - Poly::constant(1)) * P(V.x).pow(3) + P(V.x);
    CHECK(r.initial(V.x) == P(V.y).pow(2) - Poly::constant(1));

    CHECK_FALSE(Poly::constant(5).leader(V.ctx, V.ord).has_value());
}

TEST_CASE("coefficient views agree with the term map") {
    Vars V;
    Poly q = P(V.a) * P(V.x).pow(2) + P(V.b) * P(V.x) + P(V.c);
    auto cs = q.coeffs_in(V.x);
    REQUIRE(cs.size() == 3);
    CHECK(cs[0] == P(V.c));
    CHECK(cs[1] == P(V.b));
    CHECK(cs[2] == P(V.a));
    Poly rebuilt;
    for (std::size_t d = 0; d < cs.size(); ++d)
        rebuilt = rebuilt + cs[d] * P(V.x).pow(static_cast<std::uint32_t>(d));
    CHECK(rebuilt == q);
    CHECK(q.coeff_of(V.x, 5).is_zero());
}

TEST_CASE("formal derivative") {
    Vars V;
    Poly q = P(V.x).pow(3) + P(V.a) * P(V.x);
    CHECK(q.derivative(V.x) == P(V.x).pow(2).times(3) + P(V.a));
    CHECK(q.derivative(V.y).is_zero());
    CHECK(q.derivative(V.a) == P(V.x));
}

TEST_CASE("exact division") {
    Vars V;
    Poly p = P(V.x).pow(2) - P(V.y).pow(2);
    Poly d = P(V.x) - P(V.y);
    auto q = Poly::divide_exact(p, d);
    REQUIRE(q.has_value());
    CHECK(*q == P(V.x) + P(V.y));
    CHECK(*q * d == p);

    CHECK_FALSE(Poly::divide_exact(P(V.x).pow(2) + Poly::constant(1), d).has_value());
    CHECK(Poly::divide_exact(Poly::zero(), d).value().is_zero());
}

TEST_CASE("unit normalization and rational content") {
    Vars V;
    Poly p = P(V.x).times(4) - Poly::constant(2);
    CHECK(p.unit_normalized() == P(V.x).times(2) - Poly::constant(1));
    CHECK(p.rational_content() == make_rational(2));

    Poly n = -P(V.x) + Poly::constant(1);
    CHECK(n.unit_normalized() == P(V.x) - Poly::constant(1)); // lead coeff positive
    CHECK(n.rational_content() == make_rational(-1));
    CHECK(n.unit_normalized().times(n.rational_content()) == n);
}

TEST_CASE("coefficient field membership") {
    Context ctx;
    VarId k = ctx.add_constant("k");
    VarId x = ctx.add_algvar("x");
    Poly p = Poly::var(k).pow(2) + Poly::constant(1);
    CHECK(p.is_coeff_element(ctx));
    CHECK_FALSE((p * Poly::var(x)).is_coeff_element(ctx));
    CHECK(Poly::constant(7).is_rational());
    CHECK(Poly::constant(7).rational_value() == make_rational(7));
    CHECK_FALSE(p.is_rational());
}

TEST_CASE("evaluation") {
    Vars V;
    Poly q = P(V.x).pow(2) - P(V.y).times(3);
    std::map<VarId, std::complex<double>> pt{{V.x, {2.0, 0.0}}, {V.y, {1.0, 0.0}}};
    CHECK(std::abs(q.eval(pt) - std::complex<double>(1.0, 0.0)) < 1e-12);

    std::map<VarId, Rational> ept{{V.x, make_rational(2)}, {V.y, make_rational(1, 3)}};
    auto ev = q.eval_exact(ept);
    REQUIRE(ev.has_value());
    CHECK(*ev == make_rational(3));
}

TEST_CASE("compare is a strict total order") {
    Vars V;
    std::vector<Poly> ps{P(V.x),
                         P(V.y),
                         P(V.x) + P(V.y),
                         P(V.x).pow(2),
                         Poly::constant(1),
                         Poly::zero(),
                         P(V.a) * P(V.x)};
    for (const Poly& p : ps) CHECK(Poly::compare(p, p) == 0);
    for (const Poly& p : ps)
        for (const Poly& q : ps) {
            CHECK(Poly::compare(p, q) == -Poly::compare(q, p));
            if (Poly::compare(p, q) == 0) CHECK(p == q);
        }
    for (const Poly& p : ps)
        for (const Poly& q : ps)
            for (const Poly& r : ps)
                if (Poly::compare(p, q) < 0 && Poly::compare(q, r) < 0)
                    CHECK(Poly::compare(p, r) < 0);
}

TEST_CASE("vars and contains") {
    Vars V;
    Poly q = P(V.a) * P(V.x) + P(V.c);
    auto vs = q.vars();
    CHECK(vs == std::vector<VarId>{V.c, V.a, V.x});
    CHECK(q.contains(V.a));
    CHECK_FALSE(q.contains(V.y));
}
