#include "thomas/janet.hpp"
#include "thomas/poly_ops.hpp"

#include <algorithm>
#include <iostream>

namespace thomas {

std::vector<std::vector<bool>> janet_admissible(const IndexSet& M, std::size_t n) {
    std::vector<std::vector<bool>> adm(M.size(), std::vector<bool>(n, false));
    for (std::size_t k = 0; k < M.size(); ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            int best = M[k].e[j];
            for (const MultiIndex& I : M) {
                bool agrees = true;
                for (std::size_t t = 0; t < j; ++t)
                    if (I.e[t] != M[k].e[t]) { agrees = false; break; }
                if (agrees) best = std::max(best, I.e[j]);
            }
            adm[k][j] = (M[k].e[j] == best);
        }
    }
    return adm;
}

bool is_admissible(const IndexSet& M, std::size_t k, int j) {
    if (M.empty()) return true;
    auto adm = janet_admissible(M, M[0].e.size());
    return adm[k][j];
}

bool cone_covers(const IndexSet& M, const std::vector<std::vector<bool>>& adm,
                 const MultiIndex& J) {
    return cone_element(M, adm, J) >= 0;
}

int cone_element(const IndexSet& M, const std::vector<std::vector<bool>>& adm,
                 const MultiIndex& J) {
    for (std::size_t k = 0; k < M.size(); ++k) {
        if (!M[k].divides(J)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < J.e.size(); ++j)
            if (J.e[j] > M[k].e[j] && !adm[k][j]) { ok = false; break; }
        if (ok) return static_cast<int>(k);
    }
    return -1;
}

IndexSet janet_complete(IndexSet M, std::size_t n, std::size_t max_steps) {
    std::vector<int> id(n);
    for (std::size_t j = 0; j < n; ++j) id[j] = static_cast<int>(j);
    for (std::size_t step = 0; step < max_steps; ++step) {
        auto adm = janet_admissible(M, n);
        bool have = false;
        MultiIndex best;
        for (std::size_t k = 0; k < M.size(); ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                if (adm[k][j]) continue;
                MultiIndex P = M[k].plus(static_cast<int>(j));
                if (cone_covers(M, adm, P)) continue;
                if (!have || degrevlex_less(P, best, id)) { best = P; have = true; }
            }
        }
        if (!have) {
            std::sort(M.begin(), M.end(), [&](const MultiIndex& a, const MultiIndex& b) {
                return degrevlex_less(a, b, id);
            });
            return M;
        }
        M.push_back(best);
    }
    throw ResourceLimitError("Janet completion exceeded step limit");
}

bool is_janet_complete(const IndexSet& M, std::size_t n) {
    auto adm = janet_admissible(M, n);
    for (std::size_t k = 0; k < M.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) {
            if (adm[k][j]) continue;
            if (!cone_covers(M, adm, M[k].plus(static_cast<int>(j)))) return false;
        }
    return true;
}

JanetReducer::JanetReducer(const Context& c, const Ranking& r, std::vector<JanetGen> gs)
    : ctx(&c), rk(&r), gens(std::move(gs)) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
        M_of[gens[g].indet].push_back(gens[g].index);
        gen_of[gens[g].indet].push_back(static_cast<int>(g));
    }
    for (auto& [i, M] : M_of) adm_of[i] = janet_admissible(M, ctx->n_indep());
}

Poly JanetReducer::normal_form(const Poly& p, Context& cx, const EnsureFn& ensure,
                               int skip_gen) const {
    Poly q = strip_coeff_content(p.unit_normalized(), cx);
    std::set<VarId> skipped;
    for (;;) {
        // greatest reducible derivative variable not skipped
        std::vector<VarId> cand;
        for (VarId v : q.vars())
            if (cx.info(v).kind == VarKind::Der && !skipped.count(v)) cand.push_back(v);
        std::sort(cand.begin(), cand.end(), [&](VarId a, VarId b) {
            return rk->less(cx, b, a);
        });
        bool reduced = false;
        for (VarId v : cand) {
            const VarInfo& vi = cx.info(v);
            auto itM = M_of.find(vi.sym);
            if (itM == M_of.end()) continue;
            int k = cone_element(itM->second, adm_of.at(vi.sym), vi.jet);
            if (k < 0) continue;
            if (gen_of.at(vi.sym)[k] == skip_gen) continue; // cones are disjoint
            const JanetGen& g = gens[static_cast<std::size_t>(gen_of.at(vi.sym)[k])];
            if (vi.jet == g.index) {
                if (q.degree(v) < g.deg) continue;
                Poly init = g.p.initial(v);
                if (ensure(init) == EnsureResult::Vanishes) { skipped.insert(v); continue; }
                q = prem(q, g.p, v);
            } else {
                Poly divisor = differentiate(g.p, vi.jet.minus(g.index), cx);
                Poly sep = divisor.initial(v);
                if (ensure(sep) == EnsureResult::Vanishes) { skipped.insert(v); continue; }
                q = prem(q, divisor, v);
            }
            q = strip_coeff_content(q.unit_normalized(), cx);
            if (trace_enabled())
                std::cerr << "[thomas] nf step @" << cx.var_name(v)
                          << " terms=" << q.terms().size() << "\n";
            reduced = true;
            break;
        }
        if (!reduced) return q;
    }
}

} // namespace thomas
