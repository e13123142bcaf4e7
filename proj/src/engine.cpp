#include "engine.hpp"

#include <algorithm>
#include <cassert>
#include <iostream>

namespace thomas::engine {

std::vector<Member> to_members(const std::vector<Poly>& eqs, const std::vector<Poly>& ineqs) {
    std::vector<Member> ms;
    ms.reserve(eqs.size() + ineqs.size());
    for (const Poly& p : eqs) ms.push_back({p, true});
    for (const Poly& p : ineqs) ms.push_back({p, false});
    return ms;
}

Decomposer::Decomposer(Context& ctx, const VarOrder& ord, const Config& cfg, const Ranking* rk)
    : ctx_(ctx), ord_(ord), cfg_(cfg), rk_(rk) {
    ctx_.order_cap = cfg_.max_order;
}

void Decomposer::bump() {
    if (++steps_ > cfg_.max_steps) throw ResourceLimitError("decomposition step limit exceeded");
}

void Decomposer::check_system_cap() const {
    if (stack_.size() + done_.size() + 1 > cfg_.max_systems)
        throw ResourceLimitError("decomposition system limit exceeded");
}

Poly Decomposer::strip_k_content(const Poly& p) const { return strip_coeff_content(p, ctx_); }

Decomposer::Norm Decomposer::normalize_member(Member& m) const {
    m.p = m.p.unit_normalized();
    if (m.p.is_zero()) return m.is_eq ? Norm::Drop : Norm::Discard;
    m.p = strip_k_content(m.p);
    if (m.p.is_coeff_element(ctx_)) return m.is_eq ? Norm::Discard : Norm::Drop;
    return Norm::Keep;
}

JanetReducer Decomposer::reducer_for(const WorkSystem& S) const {
    std::vector<JanetGen> gens;
    for (const auto& [x, m] : S.solved) {
        if (!m.is_eq) continue;
        const VarInfo& vi = ctx_.info(x);
        if (vi.kind != VarKind::Der) continue;
        gens.push_back({m.p, vi.sym, vi.jet, x, m.p.degree(x)});
    }
    return JanetReducer(ctx_, *rk_, std::move(gens));
}

Poly Decomposer::reduce(const Poly& p, const WorkSystem& S) {
    if (p.is_zero()) return p;
    if (rk_) {
        JanetReducer R = reducer_for(S);
        EnsureFn cb;
        if (&S == &cur_) {
            cb = [this](const Poly& h) {
                return ensure_nonzero(h) ? EnsureResult::Ok : EnsureResult::Vanishes;
            };
        } else {
            cb = ensure_accept;
        }
        return R.normal_form(p, ctx_, cb);
    }
    Poly q = p;
    bool changed = true;
    while (changed && !q.is_zero()) {
        changed = false;
        // highest leader first; reduction never reintroduces greater variables
        std::vector<VarId> keys;
        for (const auto& [x, m] : S.solved)
            if (m.is_eq) keys.push_back(x);
        std::sort(keys.begin(), keys.end(), [&](VarId a, VarId b) { return ord_.less(b, a); });
        for (VarId x : keys) {
            const Member& m = S.solved.at(x);
            if (q.is_zero()) break;
            if (q.degree(x) >= m.p.degree(x)) {
                q = prem(q, m.p, x);
                changed = true;
            }
        }
    }
    return q;
}

void Decomposer::push_sibling_with_eq(const Poly& h) {
    check_system_cap();
    WorkSystem sib = cur_;
    if (in_hand_) sib.pending.push_back(*in_hand_);
    sib.pending.push_back({h, true});
    stack_.push_back(std::move(sib));
}

void Decomposer::pend(Member m) {
    for (const auto& q : cur_.pending)
        if (q.is_eq == m.is_eq && q.p == m.p) return;
    cur_.pending.push_back(std::move(m));
}

void Decomposer::solved_insert(VarId x, Member m) {
    cur_.solved[x] = std::move(m);
    cur_.sqfree_ok.erase(x);
    cur_.passive_ok.clear();
}

void Decomposer::solved_remove(VarId x) {
    cur_.solved.erase(x);
    cur_.sqfree_ok.erase(x);
    cur_.passive_ok.clear();
}

// divides out all factors that occur among the branch's inequations; whatever
// remains vanishes iff the argument does
Poly Decomposer::peel_known_nonzero(Poly rest) const {
    std::vector<const Poly*> ineqs;
    for (const auto& [x, m] : cur_.solved)
        if (!m.is_eq) ineqs.push_back(&m.p);
    for (const auto& m : cur_.pending)
        if (!m.is_eq) ineqs.push_back(&m.p);
    bool progress = true;
    while (progress && !rest.is_coeff_element(ctx_)) {
        progress = false;
        for (const Poly* q : ineqs) {
            if (q->is_coeff_element(ctx_)) continue;
            for (;;) {
                auto quo = Poly::divide_exact(rest, *q);
                if (!quo) break;
                rest = std::move(*quo);
                progress = true;
            }
            if (rest.is_coeff_element(ctx_)) break;
        }
    }
    return rest;
}

bool Decomposer::ensure_nonzero(const Poly& h0) {
    if (h0.is_zero()) return false;
    Poly h = strip_k_content(h0.unit_normalized());
    if (h.is_coeff_element(ctx_)) return true;
    auto hit = ensure_memo_.find(h);
    if (hit != ensure_memo_.end()) return hit->second;

    Poly rest = peel_known_nonzero(h);
    if (!rest.is_coeff_element(ctx_)) {
        rest = reduce_cur(rest);
        if (rest.is_zero()) {
            ensure_memo_.emplace(std::move(h), false);
            return false;
        }
        rest = peel_known_nonzero(strip_k_content(rest.unit_normalized()));
    }
    if (!rest.is_coeff_element(ctx_)) {
        rest = strip_k_content(rest.unit_normalized());
        push_sibling_with_eq(rest);
        pend({rest, false});
    }
    ensure_memo_.emplace(std::move(h), true);
    return true;
}

// Certifies the leading coefficient of p w.r.t. x nonzero. Coefficients that
// vanish identically on the branch are dropped from p (pointwise equal).
// Returns false when x got eliminated from p that way.
static bool certify_initial(Poly& p, VarId x,
                            const std::function<bool(const Poly&)>& ensure) {
    for (;;) {
        if (p.is_zero() || p.degree(x) == 0) return false;
        int d = p.degree(x);
        Poly init = p.initial(x);
        if (ensure(init)) return true;
        p = p - init * Poly::var(x, static_cast<std::uint32_t>(d));
    }
}

Poly Decomposer::gcd_chain(Poly a, Poly b, VarId x) {
    auto ensure = [this](const Poly& h) { return ensure_nonzero(h); };
    if (a.degree(x) < b.degree(x)) std::swap(a, b);
    for (;;) {
        bump();
        if (b.is_zero()) return a;
        if (b.degree(x) == 0) {
            if (!ensure_nonzero(b)) return a; // b vanishes on the branch
            return b;
        }
        if (!certify_initial(b, x, ensure)) {
            // all x-coefficients of b vanished pointwise
            if (b.is_zero()) return a;
            if (!ensure_nonzero(b)) return a;
            return b;
        }
        Poly r = prem(a, b, x);
        r = reduce_cur(r);
        if (!r.is_zero()) r = strip_k_content(r.unit_normalized());
        a = std::move(b);
        b = std::move(r);
    }
}

std::optional<Poly> Decomposer::sqfree_replacement(const Poly& r, VarId x) {
    if (r.degree(x) <= 1) return std::nullopt;
    Poly d = strip_k_content(r.derivative(x).unit_normalized());
    Poly g = gcd_chain(r, d, x);
    if (g.degree(x) == 0) return std::nullopt;
    return pquo(r, g, x);
}

Decomposer::Norm Decomposer::insert_rule(VarId x, Member c) {
    auto ensure = [this](const Poly& h) { return ensure_nonzero(h); };
    if (!certify_initial(c.p, x, ensure)) {
        // leader coefficientwise gone; reprocess what is left
        pend(std::move(c));
        return Norm::Keep;
    }
    Poly cont = content_wrt(c.p, x);
    if (!cont.is_rational())
        c.p = Poly::divide_exact(c.p, cont).value().unit_normalized();
    solved_insert(x, std::move(c));
    return Norm::Keep;
}

Decomposer::Norm Decomposer::pair_rule(VarId x, Member c) {
    auto ensure = [this](const Poly& h) { return ensure_nonzero(h); };
    Member m = cur_.solved.at(x);

    if (m.is_eq && c.is_eq) {
        if (!certify_initial(c.p, x, ensure)) {
            pend(c);
            return Norm::Keep;
        }
        Poly r = prem(m.p, c.p, x);
        solved_remove(x);
        pend({r, true});
        pend(std::move(c));
        return Norm::Keep;
    }

    bool okm = certify_initial(m.p, x, ensure);
    bool okc = certify_initial(c.p, x, ensure);
    if (!okm || !okc) {
        solved_remove(x);
        pend(std::move(m));
        pend(std::move(c));
        return Norm::Keep;
    }

    if (!m.is_eq && !c.is_eq) {
        Poly g = gcd_chain(m.p, c.p, x);
        Poly l;
        if (g.degree(x) == 0) l = m.p * c.p;
        else if (g.degree(x) == m.p.degree(x)) l = c.p;  // m divides c pointwise
        else if (g.degree(x) == c.p.degree(x)) l = m.p;
        else l = pquo(m.p * c.p, g, x);
        solved_remove(x);
        pend({l, false});
        return Norm::Keep;
    }

    Poly& peq = m.is_eq ? m.p : c.p;
    Poly& pin = m.is_eq ? c.p : m.p;

    if (auto repl = sqfree_replacement(peq, x)) {
        solved_remove(x);
        pend({*repl, true});
        pend({pin, false});
        return Norm::Keep;
    }
    Poly g = gcd_chain(peq, pin, x);
    if (g.degree(x) == peq.degree(x)) return Norm::Discard; // equation divides inequation
    solved_remove(x);
    if (g.degree(x) == 0) {
        // coprime: the inequation excludes nothing on the equation's roots
        pend({peq, true});
        return Norm::Keep;
    }
    pend({pquo(peq, g, x), true});
    pend({pquo(pin, g, x), false});
    return Norm::Keep;
}

Decomposer::Norm Decomposer::process_pending(Member c) {
    c.p = reduce_cur(c.p);
    Norm n = normalize_member(c);
    if (n != Norm::Keep) return n;
    VarId x = *leader_of(c.p);
    if (trace_enabled())
        std::cerr << "[thomas] member " << (c.is_eq ? "eq" : "ineq") << " leader="
                  << ctx_.var_name(x) << " deg=" << c.p.degree(x)
                  << " terms=" << c.p.terms().size() << "\n";
    if (cur_.solved.count(x)) return pair_rule(x, std::move(c));
    return insert_rule(x, std::move(c));
}

std::size_t Decomposer::pick_pending() const {
    auto better = [&](const Member& a, const Member& b) {
        auto la = a.p.leader(ctx_, ord_);
        auto lb = b.p.leader(ctx_, ord_);
        if (la.has_value() != lb.has_value()) return !la.has_value();
        if (la && lb && *la != *lb) return ord_.less(*la, *lb);
        int da = la ? a.p.degree(*la) : 0;
        int db = lb ? b.p.degree(*lb) : 0;
        if (da != db) return da < db;
        if (a.is_eq != b.is_eq) return a.is_eq;
        return Poly::compare(a.p, b.p) < 0;
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < cur_.pending.size(); ++i)
        if (better(cur_.pending[i], cur_.pending[best])) best = i;
    return best;
}

bool Decomposer::sqfree_pass() {
    std::vector<VarId> keys;
    for (const auto& [x, m] : cur_.solved) keys.push_back(x);
    std::sort(keys.begin(), keys.end(), [&](VarId a, VarId b) { return ord_.less(a, b); });
    for (VarId x : keys) {
        if (cur_.sqfree_ok.count(x)) continue;
        Member m = cur_.solved.at(x);
        if (m.p.degree(x) <= 1) {
            cur_.sqfree_ok.insert(x);
            continue;
        }
        bump();
        auto repl = sqfree_replacement(m.p, x);
        if (repl) {
            solved_remove(x);
            pend({*repl, m.is_eq});
            return true;
        }
        cur_.sqfree_ok.insert(x);
        if (!cur_.pending.empty()) return true; // splits emitted during the proof
    }
    return !cur_.pending.empty();
}

bool Decomposer::ineq_reduce_pass() {
    std::vector<VarId> keys;
    for (const auto& [x, m] : cur_.solved)
        if (!m.is_eq) keys.push_back(x);
    std::sort(keys.begin(), keys.end(), [&](VarId a, VarId b) { return ord_.less(a, b); });
    for (VarId x : keys) {
        Member m = cur_.solved.at(x);
        bump();
        Poly nf = reduce_cur(m.p);
        if (!(nf == m.p)) {
            solved_remove(x);
            pend({nf, false});
            return true;
        }
        if (!cur_.pending.empty()) return true;
    }
    return !cur_.pending.empty();
}

bool Decomposer::completion_pass() {
    std::map<int, std::vector<std::pair<MultiIndex, VarId>>> per_indet;
    for (const auto& [x, m] : cur_.solved) {
        if (!m.is_eq) continue;
        const VarInfo& vi = ctx_.info(x);
        if (vi.kind != VarKind::Der) continue;
        per_indet[vi.sym].emplace_back(vi.jet, x);
    }
    std::size_t n = ctx_.n_indep();
    for (auto& kv : per_indet) {
        auto& entries = kv.second;
        IndexSet M;
        for (auto& [J, x] : entries) M.push_back(J);
        auto adm = janet_admissible(M, n);
        bool have = false;
        MultiIndex best;
        std::size_t bk = 0;
        int bj = 0;
        for (std::size_t k = 0; k < M.size(); ++k)
            for (std::size_t j = 0; j < n; ++j) {
                if (adm[k][j]) continue;
                MultiIndex P = M[k].plus(j);
                if (cone_covers(M, adm, P)) continue;
                if (!have || degrevlex_less(P, best, rk_->perm)) {
                    best = P;
                    bk = k;
                    bj = static_cast<int>(j);
                    have = true;
                }
            }
        if (have) {
            bump();
            const Member& gen = cur_.solved.at(entries[bk].second);
            if (trace_enabled())
                std::cerr << "[thomas] completion " << ctx_.indet_name(kv.first)
                          << best.to_string() << "\n";
            pend({differentiate(gen.p, bj, ctx_), true});
            return true;
        }
    }
    return !cur_.pending.empty();
}

bool Decomposer::passivity_pass() {
    JanetReducer R = reducer_for(cur_);
    std::size_t n = ctx_.n_indep();
    std::vector<std::size_t> order(R.gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ord_.less(R.gens[a].leader, R.gens[b].leader);
    });
    EnsureFn cb = [this](const Poly& h) {
        return ensure_nonzero(h) ? EnsureResult::Ok : EnsureResult::Vanishes;
    };
    for (std::size_t gi : order) {
        const JanetGen& g = R.gens[gi];
        const IndexSet& M = R.M_of.at(g.indet);
        const auto& adm = R.adm_of.at(g.indet);
        std::size_t k = 0;
        while (!(M[k] == g.index)) ++k;
        for (std::size_t j = 0; j < n; ++j) {
            if (adm[k][j]) continue;
            auto key = std::make_pair(g.leader, static_cast<int>(j));
            if (cur_.passive_ok.count(key)) continue;
            bump();
            Poly w = differentiate(g.p, static_cast<int>(j), ctx_);
            Poly nf = R.normal_form(w, ctx_, cb);
            if (trace_enabled())
                std::cerr << "[thomas] passivity " << ctx_.var_name(g.leader) << " dir=" << j
                          << " nf_terms=" << nf.terms().size() << "\n";
            if (!nf.is_zero()) {
                pend({nf, true});
                return true;
            }
            cur_.passive_ok.insert(key);
            if (!cur_.pending.empty()) return true;
        }
    }
    return !cur_.pending.empty();
}

bool Decomposer::autoreduce_pass() {
    std::vector<VarId> keys;
    for (const auto& [x, m] : cur_.solved)
        if (m.is_eq) keys.push_back(x);
    std::sort(keys.begin(), keys.end(), [&](VarId a, VarId b) { return ord_.less(a, b); });

    for (VarId x : keys) {
        const Poly& p = cur_.solved.at(x).p;
        Poly nf;
        if (rk_) {
            JanetReducer R = reducer_for(cur_);
            int self = -1;
            for (std::size_t i = 0; i < R.gens.size(); ++i)
                if (R.gens[i].leader == x) self = static_cast<int>(i);
            EnsureFn cb = [this](const Poly& h) {
                return ensure_nonzero(h) ? EnsureResult::Ok : EnsureResult::Vanishes;
            };
            nf = R.normal_form(p, ctx_, cb, self);
        } else {
            nf = p;
            bool changed = true;
            while (changed) {
                changed = false;
                for (const auto& [w, m] : cur_.solved) {
                    if (w == x || !m.is_eq) continue;
                    if (nf.degree(w) >= m.p.degree(w)) {
                        nf = prem(nf, m.p, w);
                        changed = true;
                    }
                }
            }
            nf = strip_k_content(nf.unit_normalized());
        }
        if (nf == p) continue;
        bump();
        if (nf.degree(x) != p.degree(x)) {
            // only possible on an inconsistent branch (the certified initial
            // would be nonzero on any solution); reprocess from scratch
            solved_remove(x);
            pend({std::move(nf), true});
            return true;
        }
        // leader, degree and certified initial survive: the divisors never
        // contain x and the multipliers are certified nonzero
        Poly cont = content_wrt(nf, x);
        if (!cont.is_rational()) nf = Poly::divide_exact(nf, cont).value().unit_normalized();
        if (trace_enabled())
            std::cerr << "[thomas] autoreduce " << ctx_.var_name(x)
                      << " terms=" << nf.terms().size() << "\n";
        cur_.solved.at(x).p = std::move(nf);
        cur_.passive_ok.clear();
        return true;
    }
    return !cur_.pending.empty();
}

Decomposer::Status Decomposer::process_system() {
    for (;;) {
        bump();
        if (!cur_.pending.empty()) {
            std::size_t k = pick_pending();
            Member c = cur_.pending[k];
            cur_.pending.erase(cur_.pending.begin() + static_cast<std::ptrdiff_t>(k));
            in_hand_ = c;
            Norm n = process_pending(std::move(c));
            in_hand_.reset();
            if (n == Norm::Discard) return Status::Discard;
            continue;
        }
        if (sqfree_pass()) continue;
        if (autoreduce_pass()) continue;
        if (rk_) {
            if (ineq_reduce_pass()) continue;
            if (completion_pass()) continue;
            if (passivity_pass()) continue;
        }
        return Status::Emit;
    }
}

std::vector<WorkSystem> Decomposer::run(std::vector<Member> initial) {
    WorkSystem w0;
    w0.pending = std::move(initial);
    stack_.push_back(std::move(w0));
    while (!stack_.empty()) {
        cur_ = std::move(stack_.back());
        stack_.pop_back();
        ensure_memo_.clear();
        if (trace_enabled())
            std::cerr << "[thomas] branch solved=" << cur_.solved.size()
                      << " pending=" << cur_.pending.size() << " stack=" << stack_.size()
                      << " done=" << done_.size() << "\n";
        if (process_system() == Status::Emit) done_.push_back(std::move(cur_));
    }
    return std::move(done_);
}

} // namespace thomas::engine
