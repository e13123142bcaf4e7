#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "thomas/diffring.hpp"

#include <vector>

using namespace thomas;

TEST_CASE("degrevlex ranking on one indeterminate, two derivations") {
    Context ctx;
    ctx.add_indep("x1");
    ctx.add_indep("x2");
    int u = ctx.add_indet("u");
    Ranking rk = Ranking::single_block(ctx);

    VarId u00 = ctx.dervar(u, {0, 0});
    VarId u10 = ctx.dervar(u, {1, 0});
    VarId u01 = ctx.dervar(u, {0, 1});
    VarId u20 = ctx.dervar(u, {2, 0});
    VarId u11 = ctx.dervar(u, {1, 1});

    CHECK(rk.less(ctx, u01, u10));
    CHECK(rk.less(ctx, u11, u20));
    CHECK(rk.less(ctx, u00, u01));
    // derivatives are greater than what they derive
    for (VarId v : {u00, u10, u01, u11}) {
        const VarInfo& vi = ctx.info(v);
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(rk.less(ctx, v, ctx.dervar(vi.sym, vi.jet.plus(j))));
    }
}

TEST_CASE("ranking is compatible with differentiation") {
    Context ctx;
    ctx.add_indep("x1");
    ctx.add_indep("x2");
    int u = ctx.add_indet("u");
    int v = ctx.add_indet("v");
    Ranking rk = Ranking::from_blocks(ctx, {{u}, {v}});

    std::vector<VarId> all;
    for (int i : {u, v})
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b + a <= 2; ++b) all.push_back(ctx.dervar(i, {a, b}));

    for (VarId p : all)
        for (VarId q : all) {
            if (p == q) {
                CHECK_FALSE(rk.less(ctx, p, q));
                continue;
            }
            CHECK(rk.less(ctx, p, q) != rk.less(ctx, q, p)); // trichotomy
            if (rk.less(ctx, p, q))
                for (std::size_t j = 0; j < 2; ++j)
                    CHECK(rk.less(ctx, ctx.dervar(ctx.info(p).sym, ctx.info(p).jet.plus(j)),
                                  ctx.dervar(ctx.info(q).sym, ctx.info(q).jet.plus(j))));
        }
}

TEST_CASE("block ranking dominates derivative order") {
    Context ctx;
    ctx.add_indep("t");
    int F1 = ctx.add_indet("F1");
    int F2 = ctx.add_indet("F2");
    int sV = ctx.add_indet("sV");
    int c = ctx.add_indet("c");
    Ranking rk = Ranking::from_blocks(ctx, {{F1, F2}, {sV, c}});

    CHECK(rk.less(ctx, ctx.dervar(sV, std::vector<int>{5}), ctx.dervar(F1, std::vector<int>{0})));
    CHECK(rk.less(ctx, ctx.dervar(c, std::vector<int>{3}), ctx.dervar(F2, std::vector<int>{1})));
    // inside a block, order decides first
    CHECK(rk.less(ctx, ctx.dervar(F2, std::vector<int>{0}), ctx.dervar(F1, std::vector<int>{0}))); // listed earlier = greater
    CHECK(rk.less(ctx, ctx.dervar(F1, std::vector<int>{0}), ctx.dervar(F2, std::vector<int>{1})));
}

TEST_CASE("total derivative follows Leibniz and the chain rule") {
    Context ctx;
    ctx.add_indep("t");
    VarId z1 = ctx.indep_var(0);
    int u = ctx.add_indet("u");
    VarId u0 = ctx.dervar(u, std::vector<int>{0});
    VarId u1 = ctx.dervar(u, std::vector<int>{1});

    Poly p = Poly::var(u0) * Poly::var(u0);
    CHECK(differentiate(p, 0, ctx) == (Poly::var(u0) * Poly::var(u1)).times(2));

    VarId k = ctx.add_constant("k");
    CHECK(differentiate(Poly::var(k), 0, ctx).is_zero());

    Poly q = Poly::var(z1) * Poly::var(u0);
    CHECK(differentiate(q, 0, ctx) == Poly::var(u0) + Poly::var(z1) * Poly::var(u1));

    // iterated derivation via a multi-index
    CHECK(differentiate(Poly::var(u0), MultiIndex(std::vector<int>{2}), ctx) == Poly::var(ctx.dervar(u, std::vector<int>{2})));
}

TEST_CASE("initial and separant") {
    Context ctx;
    ctx.add_indep("t");
    int u = ctx.add_indet("u");
    Ranking rk = Ranking::single_block(ctx);
    RankingOrder ord(ctx, rk);

    Poly u0 = Poly::var(ctx.dervar(u, std::vector<int>{0}));
    Poly u1 = Poly::var(ctx.dervar(u, std::vector<int>{1}));

    Poly p = u1 * u1 - u0.times(4);
    CHECK(initial_of(p, ctx, ord) == Poly::constant(1));
    CHECK(separant_of(p, ctx, ord) == u1.times(2));

    Poly lin = u0.times(3) + Poly::constant(1);
    CHECK(separant_of(lin, ctx, ord) == initial_of(lin, ctx, ord));
}
