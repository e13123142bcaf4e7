#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "thomas/diff.hpp"
#include "thomas/parse.hpp"
#include "thomas/print.hpp"

using namespace thomas;

namespace {

const char* kTank = R"(# stirred tank
indep t
const k
indets F1 F2 sV c c1 c2
rank [F1,F2] > [sV,c] > [c1,c2]
eq 2*sV[1]*sV[0] - F1[0] - F2[0] + k*sV[0]
eq c[1]*sV[0]^2 - c2[0]*F2[0] + c[0]*k*sV[0] - c1[0]*F1[0] + 2*c[0]*sV[1]*sV[0]
eq c1[1]
eq c2[1]
ineq sV[0]
ineq c1[0]
ineq c2[0]
)";

std::string expect_parse_error(const std::string& text) {
    try {
        parse_system_text(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("the tank file parses to the declared shape") {
    SystemFile sf = parse_system_text(kTank);
    CHECK(sf.equations.size() == 4);
    CHECK(sf.inequations.size() == 3);
    REQUIRE(sf.ranking.blocks.size() == 3);
    CHECK(sf.ranking.blocks[0].size() == 2);
    CHECK(sf.ranking.blocks[1].size() == 2);
    CHECK(sf.ranking.blocks[2].size() == 2);
    CHECK(sf.ctx->n_indep() == 1);
    CHECK(sf.ctx->n_indets() == 6);
    CHECK(sf.ctx->constant_names() == std::vector<std::string>{"k"});
}

TEST_CASE("one-line ODE") {
    SystemFile sf = parse_system_text("indep t\nindets u\nrank [u]\neq u[1] - u[0]\n");
    REQUIRE(sf.equations.size() == 1);
    Context& ctx = *sf.ctx;
    CHECK(sf.equations[0] ==
          Poly::var(ctx.dervar(0, std::vector<int>{1})) - Poly::var(ctx.dervar(0, std::vector<int>{0})));
}

TEST_CASE("malformed input is reported with a line number") {
    std::string e1 = expect_parse_error("indep t\nindets u\nrank [u]\neq u[1,0]\n");
    CHECK(e1.find("line") != std::string::npos); // arity mismatch
    CHECK(e1.find("needs") != std::string::npos);

    std::string e2 = expect_parse_error("indep t\nindets u\nrank [u]\neq w[0]\n");
    CHECK(e2.find("undeclared") != std::string::npos);

    std::string e3 = expect_parse_error("indep t\nindets u\nrank [u]\neq u[0] +\n");
    CHECK_FALSE(e3.empty());

    CHECK_FALSE(expect_parse_error("indets u\neq u[0]\n").empty()); // no indep
    CHECK_FALSE(expect_parse_error("indep t\nindets u v\nrank [u]\n").empty());
}

TEST_CASE("expression grammar corner cases") {
    Context ctx;
    ctx.add_indep("t");
    ctx.add_indet("u");
    CHECK(parse_poly("1/2*u[0]^2", ctx) ==
          (Poly::var(ctx.dervar(0, std::vector<int>{0})).pow(2)).times(make_rational(1, 2)));
    CHECK(parse_poly("-(u[0] - 1)", ctx) ==
          Poly::constant(1) - Poly::var(ctx.dervar(0, std::vector<int>{0})));
    CHECK(parse_poly("2^3", ctx) == Poly::constant(8));
    CHECK_THROWS_AS(parse_poly("u[0]/u[0]", ctx), ParseError); // no division by variables
}

TEST_CASE("printing and reparsing is the identity") {
    SystemFile sf = parse_system_text(kTank);
    Context& ctx = *sf.ctx;
    Ranking rk = Ranking::from_blocks(ctx, sf.ranking.blocks);
    RankingOrder ord(ctx, rk);

    auto systems = decompose_differential({sf.equations, sf.inequations}, ctx, rk);
    REQUIRE(!systems.empty());
    for (const auto& T : systems) {
        for (const Poly& p : T.equations) CHECK(parse_poly(poly_to_string(p, ctx, ord), ctx) == p);
        for (const Poly& q : T.inequations) CHECK(parse_poly(poly_to_string(q, ctx, ord), ctx) == q);
    }

    // the emitted header reproduces the declarations in a fresh context
    SystemFile back = parse_system_text(header_text(ctx, rk));
    CHECK(back.ctx->indet_names() == ctx.indet_names());
    CHECK(back.ctx->indep_names() == ctx.indep_names());
    CHECK(back.ctx->constant_names() == ctx.constant_names());
    CHECK(back.ranking.blocks == sf.ranking.blocks);

    // a full system block re-parses into an equal system, printed form and all
    std::string text = header_text(ctx, rk);
    for (const Poly& p : systems[0].equations) text += "eq " + poly_to_string(p, ctx, ord) + "\n";
    for (const Poly& q : systems[0].inequations) text += "ineq " + poly_to_string(q, ctx, ord) + "\n";
    SystemFile again = parse_system_text(text);
    Ranking rk2 = Ranking::from_blocks(*again.ctx, again.ranking.blocks);
    RankingOrder ord2(*again.ctx, rk2);
    REQUIRE(again.equations.size() == systems[0].equations.size());
    for (std::size_t i = 0; i < again.equations.size(); ++i)
        CHECK(poly_to_string(again.equations[i], *again.ctx, ord2) ==
              poly_to_string(systems[0].equations[i], ctx, ord));
}

TEST_CASE("text and JSON describe the same decomposition") {
    SystemFile sf = parse_system_text(kTank);
    Context& ctx = *sf.ctx;
    Ranking rk = Ranking::from_blocks(ctx, sf.ranking.blocks);
    RankingOrder ord(ctx, rk);
    auto systems = decompose_differential({sf.equations, sf.inequations}, ctx, rk);

    nlohmann::json arr = nlohmann::json::parse(systems_json(systems, ctx, rk));
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == systems.size());
    for (std::size_t i = 0; i < systems.size(); ++i) {
        const auto& o = arr[i];
        // shape pinned by schemas/decomposition.schema.json
        REQUIRE(o.is_object());
        CHECK(o.size() == 5);
        for (const char* key : {"equations", "inequations", "leaders", "cones", "ranking"})
            REQUIRE(o.contains(key));
        REQUIRE(o["equations"].size() == systems[i].equations.size());
        for (std::size_t e = 0; e < systems[i].equations.size(); ++e)
            CHECK(parse_poly(o["equations"][e].get<std::string>(), ctx) ==
                  systems[i].equations[e]);
        for (std::size_t q = 0; q < systems[i].inequations.size(); ++q)
            CHECK(parse_poly(o["inequations"][q].get<std::string>(), ctx) ==
                  systems[i].inequations[q]);
        CHECK(o["leaders"].size() ==
              systems[i].eq_leaders.size() + systems[i].ineq_leaders.size());
        CHECK(o["cones"].size() == systems[i].equations.size());
    }
}
