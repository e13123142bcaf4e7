#include "thomas/diff.hpp"

#include "engine.hpp"

#include <algorithm>

namespace thomas {

static SimpleDiffSystem convert(const engine::WorkSystem& w, const Context& ctx,
                                const Ranking& rk) {
    RankingOrder ord(ctx, rk);
    SimpleDiffSystem s;
    std::vector<VarId> keys;
    for (const auto& [x, m] : w.solved) keys.push_back(x);
    std::sort(keys.begin(), keys.end(), [&](VarId a, VarId b) { return ord.less(a, b); });
    for (VarId x : keys) {
        const auto& m = w.solved.at(x);
        if (m.is_eq) {
            s.equations.push_back(m.p);
            s.eq_leaders.push_back(x);
        } else {
            s.inequations.push_back(m.p);
            s.ineq_leaders.push_back(x);
        }
    }
    // admissible derivations per equation from the Janet division of its
    // indeterminate's leader index set
    std::map<int, IndexSet> M_of;
    for (VarId x : s.eq_leaders) {
        const VarInfo& vi = ctx.info(x);
        M_of[vi.sym].push_back(vi.jet);
    }
    std::map<int, std::vector<std::vector<bool>>> adm_of;
    for (auto& [i, M] : M_of) adm_of[i] = janet_admissible(M, ctx.n_indep());
    for (VarId x : s.eq_leaders) {
        const VarInfo& vi = ctx.info(x);
        const IndexSet& M = M_of[vi.sym];
        std::size_t k = 0;
        while (!(M[k] == vi.jet)) ++k;
        std::vector<int> cone;
        for (std::size_t j = 0; j < ctx.n_indep(); ++j)
            if (adm_of[vi.sym][k][j]) cone.push_back(static_cast<int>(j));
        s.cones.push_back(std::move(cone));
    }
    return s;
}

std::vector<SimpleDiffSystem> decompose_differential(const DiffSystem& S, Context& ctx,
                                                     const Ranking& rk, const Config& cfg) {
    RankingOrder ord(ctx, rk);
    engine::Decomposer D(ctx, ord, cfg, &rk);
    auto out = D.run(engine::to_members(S.equations, S.inequations));
    std::vector<SimpleDiffSystem> res;
    res.reserve(out.size());
    for (const auto& w : out) res.push_back(convert(w, ctx, rk));
    return res;
}

JanetReducer make_reducer(const SimpleDiffSystem& S, const Context& ctx, const Ranking& rk) {
    std::vector<JanetGen> gens;
    for (std::size_t i = 0; i < S.equations.size(); ++i) {
        VarId x = S.eq_leaders[i];
        const VarInfo& vi = ctx.info(x);
        gens.push_back({S.equations[i], vi.sym, vi.jet, x, S.equations[i].degree(x)});
    }
    return JanetReducer(ctx, rk, std::move(gens));
}

Poly janet_reduce(const Poly& p, const SimpleDiffSystem& S, Context& ctx, const Ranking& rk) {
    JanetReducer R = make_reducer(S, ctx, rk);
    return R.normal_form(p, ctx, ensure_accept);
}

bool membership(const Poly& p, const SimpleDiffSystem& S, Context& ctx, const Ranking& rk) {
    return janet_reduce(p, S, ctx, rk).is_zero();
}

bool is_simple_differential(const SimpleDiffSystem& S, Context& ctx, const Ranking& rk,
                            const Config& cfg) {
    RankingOrder ord(ctx, rk);
    if (!is_simple(S.as_alg_system(), ctx, ord, cfg)) return false;

    std::map<int, IndexSet> M_of;
    for (VarId x : S.eq_leaders) {
        const VarInfo& vi = ctx.info(x);
        if (vi.kind != VarKind::Der) return false;
        M_of[vi.sym].push_back(vi.jet);
    }
    for (auto& [i, M] : M_of)
        if (!is_janet_complete(M, ctx.n_indep())) return false;

    JanetReducer R = make_reducer(S, ctx, rk);
    for (const JanetGen& g : R.gens) {
        const IndexSet& M = R.M_of.at(g.indet);
        const auto& adm = R.adm_of.at(g.indet);
        std::size_t k = 0;
        while (!(M[k] == g.index)) ++k;
        for (std::size_t j = 0; j < ctx.n_indep(); ++j) {
            if (adm[k][j]) continue;
            Poly w = differentiate(g.p, static_cast<int>(j), ctx);
            if (!R.normal_form(w, ctx, ensure_accept).is_zero()) return false;
        }
    }
    for (const Poly& q : S.inequations)
        if (!(R.normal_form(q, ctx, ensure_accept) == q)) return false;
    return true;
}

} // namespace thomas
