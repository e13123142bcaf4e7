#pragma once

#include "thomas/alg.hpp"
#include "thomas/diff.hpp"
#include "thomas/janet.hpp"
#include "thomas/poly_ops.hpp"

#include <optional>

namespace thomas::engine {

struct Member {
    Poly p;
    bool is_eq = true;
};

// State of one branch of the decomposition tree. `solved` holds at most one
// member per leader (the distinct-leaders invariant); `pending` holds members
// still to be merged. Certified facts are monotone: every split only shrinks
// the solution set, so cached certificates stay valid in siblings.
struct WorkSystem {
    std::map<VarId, Member> solved;
    std::vector<Member> pending;
    std::set<VarId> sqfree_ok;                    // leader squarefree certified
    std::set<std::pair<VarId, int>> passive_ok;   // prolongation NF checked zero
};

class Decomposer {
public:
    // rk == nullptr runs the purely algebraic decomposition; with a ranking the
    // engine reduces by Janet normal forms and enforces completion/passivity.
    Decomposer(Context& ctx, const VarOrder& ord, const Config& cfg, const Ranking* rk);

    std::vector<WorkSystem> run(std::vector<Member> initial);

    // full reduction modulo the equations of S (pseudo-remainder chain, or
    // cone-restricted Janet normal form in differential mode)
    Poly reduce(const Poly& p, const WorkSystem& S);

private:
    Context& ctx_;
    const VarOrder& ord_;
    Config cfg_;
    const Ranking* rk_;

    std::vector<WorkSystem> stack_;
    std::vector<WorkSystem> done_;
    std::size_t steps_ = 0;
    WorkSystem cur_;
    std::optional<Member> in_hand_;

    // nonzero-certification decisions for the branch currently processed;
    // valid until the branch is emitted or discarded (members only ever shrink
    // the solution set), reset when the next branch is popped
    std::map<Poly, bool, bool (*)(const Poly&, const Poly&)> ensure_memo_{poly_less};

    enum class Status { Emit, Discard };
    enum class Norm { Keep, Drop, Discard };

    void bump();
    void check_system_cap() const;

    std::optional<VarId> leader_of(const Poly& p) const { return p.leader(ctx_, ord_); }

    Norm normalize_member(Member& m) const;
    Poly strip_k_content(const Poly& p) const;

    Poly reduce_cur(const Poly& p) { return reduce(p, cur_); }

    // certifies h != 0 on the current branch: peeling known-nonzero inequation
    // factors, reduction, coefficient-field test, else a split. Returns false
    // when h vanishes identically on the branch.
    bool ensure_nonzero(const Poly& h);
    Poly peel_known_nonzero(Poly rest) const;
    void push_sibling_with_eq(const Poly& h);

    void pend(Member m);
    void solved_insert(VarId x, Member m);
    void solved_remove(VarId x);

    // pointwise gcd of a and b w.r.t. x on the branch's solution set; both
    // initials must already be certified nonzero. Splits may be emitted for
    // the initials of intermediate remainders.
    Poly gcd_chain(Poly a, Poly b, VarId x);

    // pointwise squarefree test; returns the replacement when a proper factor
    // of multiplicity > 1 exists, nullopt when certified squarefree
    std::optional<Poly> sqfree_replacement(const Poly& r, VarId x);

    Status process_system();
    Norm process_pending(Member c);
    Norm pair_rule(VarId x, Member c);
    Norm insert_rule(VarId x, Member c);

    bool sqfree_pass();
    bool ineq_reduce_pass();
    bool completion_pass();
    bool passivity_pass();

    // rewrites each solved equation to its normal form modulo the other rules;
    // leaders, degrees and certified initials survive (multipliers are
    // certified nonzero and the divisors never touch the leader)
    bool autoreduce_pass();

    JanetReducer reducer_for(const WorkSystem& S) const;
    std::size_t pick_pending() const;

    static bool poly_less(const Poly& a, const Poly& b) { return Poly::compare(a, b) < 0; }
};

std::vector<Member> to_members(const std::vector<Poly>& eqs, const std::vector<Poly>& ineqs);

} // namespace thomas::engine
