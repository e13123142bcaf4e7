#include "thomas/alg.hpp"
#include "thomas/poly_ops.hpp"

#include "engine.hpp"

#include <algorithm>

namespace thomas {

static SimpleAlgSystem convert(const engine::WorkSystem& w, const Context& ctx,
                               const VarOrder& ord) {
    SimpleAlgSystem s;
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
    return s;
}

std::vector<SimpleAlgSystem> decompose_algebraic(const AlgSystem& S, Context& ctx,
                                                 const VarOrder& ord, const Config& cfg) {
    engine::Decomposer D(ctx, ord, cfg, nullptr);
    auto out = D.run(engine::to_members(S.equations, S.inequations));
    std::vector<SimpleAlgSystem> res;
    res.reserve(out.size());
    for (const auto& w : out) res.push_back(convert(w, ctx, ord));
    return res;
}

bool is_simple(const AlgSystem& S, Context& ctx, const VarOrder& ord, const Config& cfg) {
    struct Entry {
        Poly p;
        bool is_eq;
        VarId leader;
    };
    std::vector<Entry> members;
    for (const Poly& p : S.equations) {
        if (p.is_coeff_element(ctx)) return false;
        members.push_back({p, true, *p.leader(ctx, ord)});
    }
    for (const Poly& p : S.inequations) {
        if (p.is_coeff_element(ctx)) return false;
        members.push_back({p, false, *p.leader(ctx, ord)});
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i].leader == members[j].leader) return false;

    for (const Entry& r : members) {
        AlgSystem lower;
        for (const Entry& o : members) {
            if (!ord.less(o.leader, r.leader)) continue;
            (o.is_eq ? lower.equations : lower.inequations).push_back(o.p);
        }
        Poly init = r.p.initial(r.leader);
        if (!init.is_coeff_element(ctx)) {
            AlgSystem aux = lower;
            aux.equations.push_back(init);
            if (!decompose_algebraic(aux, ctx, ord, cfg).empty()) return false;
        }
        if (r.p.degree(r.leader) >= 2) {
            Poly d = discriminant(r.p, r.leader);
            if (d.is_zero()) {
                // discriminant vanishes identically: fails unless the lower
                // system is itself inconsistent
                if (!decompose_algebraic(lower, ctx, ord, cfg).empty()) return false;
            } else if (!d.is_coeff_element(ctx)) {
                AlgSystem aux = lower;
                aux.equations.push_back(d);
                if (!decompose_algebraic(aux, ctx, ord, cfg).empty()) return false;
            }
        }
    }
    return true;
}

Poly reduce_modulo(const Poly& p, const SimpleAlgSystem& S, Context& ctx,
                   const VarOrder& ord) {
    Poly q = p;
    bool changed = true;
    while (changed && !q.is_zero()) {
        changed = false;
        for (std::size_t i = S.equations.size(); i-- > 0;) {
            // eq_leaders ascend, so walk from the top
            VarId x = S.eq_leaders[i];
            const Poly& e = S.equations[i];
            if (q.is_zero()) break;
            if (q.degree(x) >= e.degree(x)) {
                q = prem(q, e, x);
                changed = true;
            }
        }
    }
    return q;
}

} // namespace thomas
