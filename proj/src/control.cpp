#include "thomas/control.hpp"

#include <algorithm>

namespace thomas {

std::vector<Elimination> eliminate(const std::vector<SimpleDiffSystem>& systems,
                                   const Context& ctx, const Ranking& rk,
                                   int block_index) {
    if (block_index < 1 || static_cast<std::size_t>(block_index) > rk.blocks.size())
        throw DomainError("block index out of range");
    std::set<int> allowed;
    for (std::size_t b = static_cast<std::size_t>(block_index) - 1; b < rk.blocks.size(); ++b)
        for (int i : rk.blocks[b]) allowed.insert(i);

    std::vector<Elimination> out;
    for (const SimpleDiffSystem& S : systems) {
        Elimination e;
        e.saturation = Poly::constant(make_rational(1, 1));
        for (std::size_t i = 0; i < S.equations.size(); ++i) {
            const Poly& p = S.equations[i];
            bool inside = true;
            for (VarId v : p.vars()) {
                const VarInfo& vi = ctx.info(v);
                if (vi.kind == VarKind::Der && !allowed.count(vi.sym)) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            VarId x = S.eq_leaders[i];
            e.generators.push_back(p);
            e.saturation = e.saturation * p.initial(x) * p.derivative(x);
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::optional<Poly> observability_witness(const SimpleDiffSystem& T, Context& ctx,
                                          const Ranking& rk, int x,
                                          const std::set<int>& allowed) {
    VarId x0 = ctx.dervar(x, MultiIndex(ctx.n_indep()));
    for (const Poly& p : T.equations) {
        bool uses_x0 = false;
        bool ok = true;
        for (VarId v : p.vars()) {
            const VarInfo& vi = ctx.info(v);
            if (vi.kind != VarKind::Der) continue;
            if (vi.sym == x) {
                if (vi.jet.is_zero()) uses_x0 = true;
                else { ok = false; break; } // proper derivative of x
            } else if (!allowed.count(vi.sym)) {
                ok = false;
                break;
            }
        }
        if (!ok || !uses_x0) continue;
        Poly init = p.initial(x0);
        Poly sep = p.derivative(x0);
        if (membership(init, T, ctx, rk)) continue;
        if (membership(sep, T, ctx, rk)) continue;
        return p;
    }
    return std::nullopt;
}

static std::vector<std::vector<int>> ranking_groups(const Context& ctx,
                                                    const std::vector<int>& mid,
                                                    const std::vector<int>& low) {
    std::set<int> taken(mid.begin(), mid.end());
    taken.insert(low.begin(), low.end());
    std::vector<int> top;
    for (std::size_t i = 0; i < ctx.n_indets(); ++i)
        if (!taken.count(static_cast<int>(i))) top.push_back(static_cast<int>(i));
    std::vector<std::vector<int>> blocks;
    if (!top.empty()) blocks.push_back(top);
    if (!mid.empty()) blocks.push_back(mid);
    if (!low.empty()) blocks.push_back(low);
    return blocks;
}

std::vector<ObsVerdict> is_observable(const DiffSystem& S, Context& ctx, int x,
                                      const std::vector<int>& Y, const Config& cfg) {
    for (int y : Y)
        if (y == x) throw DomainError("tested indeterminate occurs in the output set");
    Ranking rk = Ranking::from_blocks(ctx, ranking_groups(ctx, {x}, Y));
    auto systems = decompose_differential(S, ctx, rk, cfg);
    std::set<int> allowed(Y.begin(), Y.end());
    std::vector<ObsVerdict> out;
    for (auto& T : systems) {
        ObsVerdict v;
        v.system = T;
        auto w = observability_witness(T, ctx, rk, x, allowed);
        if (w) {
            v.verdict = true;
            v.witness = *w;
        } else {
            v.condition = "no order-zero equation in " + ctx.indet_name(x) +
                          " with nonvanishing leading coefficient and separant";
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool flat_on_system(const SimpleDiffSystem& T, Context& ctx, const Ranking& rk,
                    const std::set<int>& Y, const std::set<int>& P,
                    std::string* report) {
    for (const Poly& p : T.equations) {
        bool low_block_only = true;
        bool touches_output = false;
        for (VarId v : p.vars()) {
            const VarInfo& vi = ctx.info(v);
            if (vi.kind != VarKind::Der) continue;
            if (Y.count(vi.sym)) touches_output = true;
            else if (!P.count(vi.sym)) { low_block_only = false; break; }
        }
        if (low_block_only && touches_output) {
            if (report) *report = "relation among the candidate outputs: nonzero intersection";
            return false;
        }
    }
    std::set<int> allowed = Y;
    allowed.insert(P.begin(), P.end());
    for (std::size_t i = 0; i < ctx.n_indets(); ++i) {
        int x = static_cast<int>(i);
        if (Y.count(x) || P.count(x)) continue;
        if (!observability_witness(T, ctx, rk, x, allowed)) {
            if (report) *report = ctx.indet_name(x) + " is not observable over the candidate outputs";
            return false;
        }
    }
    return true;
}

std::vector<FlatVerdict> is_flat_output(const DiffSystem& S, Context& ctx,
                                        const std::vector<int>& Y,
                                        const std::vector<int>& P, const Config& cfg) {
    Ranking rk = Ranking::from_blocks(ctx, ranking_groups(ctx, Y, P));
    auto systems = decompose_differential(S, ctx, rk, cfg);
    std::set<int> Ys(Y.begin(), Y.end());
    std::set<int> Ps(P.begin(), P.end());
    std::vector<FlatVerdict> out;
    for (auto& T : systems) {
        FlatVerdict v;
        v.system = T;
        std::string rep;
        v.verdict = flat_on_system(T, ctx, rk, Ys, Ps, &rep);
        if (!v.verdict) v.report = rep;
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace thomas
