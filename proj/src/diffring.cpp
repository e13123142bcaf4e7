#include "thomas/diffring.hpp"

#include <algorithm>

namespace thomas {

static void finish_ranking(Ranking& r, const Context& ctx) {
    std::size_t m = ctx.n_indets();
    r.block_of.assign(m, -1);
    r.pos_in_block.assign(m, -1);
    for (std::size_t b = 0; b < r.blocks.size(); ++b) {
        for (std::size_t k = 0; k < r.blocks[b].size(); ++k) {
            int i = r.blocks[b][k];
            if (i < 0 || static_cast<std::size_t>(i) >= m)
                throw DomainError("ranking references unknown indeterminate");
            if (r.block_of[i] != -1)
                throw DomainError("indeterminate listed twice in ranking");
            r.block_of[i] = static_cast<int>(b);
            r.pos_in_block[i] = static_cast<int>(k);
        }
    }
    for (std::size_t i = 0; i < m; ++i)
        if (r.block_of[i] == -1)
            throw DomainError("ranking does not cover all indeterminates");
    if (r.perm.empty()) {
        r.perm.resize(ctx.n_indep());
        for (std::size_t j = 0; j < r.perm.size(); ++j) r.perm[j] = static_cast<int>(j);
    }
}

Ranking Ranking::single_block(const Context& ctx) {
    Ranking r;
    r.blocks.emplace_back();
    for (std::size_t i = 0; i < ctx.n_indets(); ++i) r.blocks[0].push_back(static_cast<int>(i));
    finish_ranking(r, ctx);
    return r;
}

Ranking Ranking::from_blocks(const Context& ctx, std::vector<std::vector<int>> blocks) {
    Ranking r;
    r.blocks = std::move(blocks);
    finish_ranking(r, ctx);
    return r;
}

bool Ranking::less(const Context& ctx, VarId a, VarId b) const {
    if (a == b) return false;
    const VarInfo& ia = ctx.info(a);
    const VarInfo& ib = ctx.info(b);
    int ba = block_of[ia.sym];
    int bb = block_of[ib.sym];
    if (ba != bb) return ba > bb; // larger block index = lower block
    if (!(ia.jet == ib.jet)) return degrevlex_less(ia.jet, ib.jet, perm);
    return pos_in_block[ia.sym] > pos_in_block[ib.sym];
}

bool RankingOrder::less(VarId a, VarId b) const {
    if (a == b) return false;
    bool ca = ctx->is_coeff(a);
    bool cb = ctx->is_coeff(b);
    if (ca != cb) return ca; // coefficient symbols below derivative variables
    if (ca) return a < b;
    return rk->less(*ctx, a, b);
}

Poly differentiate(const Poly& p, int j, Context& ctx) {
    if (j < 0 || static_cast<std::size_t>(j) >= ctx.n_indep())
        throw DomainError("derivation index out of range");
    Poly out;
    for (VarId v : p.vars()) {
        const VarInfo& vi = ctx.info(v);
        Poly dv;
        switch (vi.kind) {
        case VarKind::KConst: continue;
        case VarKind::KIndep:
            if (vi.sym != j) continue;
            dv = Poly::constant(make_rational(1, 1));
            break;
        case VarKind::Alg:
            throw DomainError("cannot differentiate a plain algebraic variable");
        case VarKind::Der:
            dv = Poly::var(ctx.dervar(vi.sym, vi.jet.plus(j)));
            break;
        }
        out = out + p.derivative(v) * dv;
    }
    return out;
}

Poly differentiate(const Poly& p, const MultiIndex& J, Context& ctx) {
    Poly out = p;
    for (std::size_t j = 0; j < J.e.size(); ++j)
        for (int k = 0; k < J.e[j]; ++k) out = differentiate(out, static_cast<int>(j), ctx);
    return out;
}

Poly initial_of(const Poly& p, const Context& ctx, const VarOrder& ord) {
    auto x = p.leader(ctx, ord);
    if (!x) throw DomainError("initial of a coefficient element");
    return p.initial(*x);
}

Poly separant_of(const Poly& p, const Context& ctx, const VarOrder& ord) {
    auto x = p.leader(ctx, ord);
    if (!x) throw DomainError("separant of a coefficient element");
    return p.derivative(*x);
}

} // namespace thomas
