#pragma once

#include "thomas/diffring.hpp"

#include <functional>

namespace thomas {

using IndexSet = std::vector<MultiIndex>;

// Janet division on a finite set of multi-indices. adm[k][j] says whether
// derivation j is admissible for M[k]: M[k][j] is maximal among the elements
// of M that agree with M[k] on all positions before j.
std::vector<std::vector<bool>> janet_admissible(const IndexSet& M, std::size_t n);

bool is_admissible(const IndexSet& M, std::size_t k, int j);

// True when J lies in the cone of some I in M, i.e. I <= J componentwise and
// J - I is supported on admissible derivations of I.
bool cone_covers(const IndexSet& M, const std::vector<std::vector<bool>>& adm,
                 const MultiIndex& J);

// Returns the element of M whose cone contains J, or -1. The cones of a Janet
// assignment are pairwise disjoint, so the element is unique.
int cone_element(const IndexSet& M, const std::vector<std::vector<bool>>& adm,
                 const MultiIndex& J);

// Completes M so every prolongation I + 1_j of every element is covered by a
// cone. Repeatedly inserts the degrevlex-smallest uncovered non-admissible
// prolongation.
IndexSet janet_complete(IndexSet M, std::size_t n, std::size_t max_steps = 100000);

bool is_janet_complete(const IndexSet& M, std::size_t n);

// Generators for cone-restricted reduction: one per equation, grouped by
// indeterminate via `indet`.
struct JanetGen {
    Poly p;
    int indet;
    MultiIndex index; // leader derivation index
    VarId leader;
    int deg;          // leader degree
};

enum class EnsureResult { Ok, Vanishes };

// Called before a pseudo-division step with the multiplier about to be used
// (the initial for an index-equal divisor, the separant of the generator for a
// proper prolongation). Vanishes means the multiplier is zero on the current
// solution set and the divisor must be skipped.
using EnsureFn = std::function<EnsureResult(const Poly&)>;

struct JanetReducer {
    const Context* ctx;
    const Ranking* rk;
    std::vector<JanetGen> gens;
    std::map<int, IndexSet> M_of;
    std::map<int, std::vector<std::vector<bool>>> adm_of;
    std::map<int, std::vector<int>> gen_of; // position in gens per M_of entry

    JanetReducer(const Context& c, const Ranking& r, std::vector<JanetGen> gs);

    // Janet normal form: repeatedly rewrites the greatest reducible derivative
    // variable. A variable v = indet i at index Jv is reducible by gen g when
    // Jv lies in g's cone and, for Jv == g.index, deg_v(p) >= g.deg; proper
    // prolongations eliminate v entirely. Multipliers consumed along the way
    // are passed to ensure; Vanishes skips that divisor for this call. The
    // result is normalized up to invertible factors after every step.
    //
    // skip_gen >= 0 disables that one generator while keeping the cone
    // assignment of the full set; variables in its cone stay put. That reduces
    // a generator modulo the others without reducing it against itself.
    Poly normal_form(const Poly& p, Context& ctx, const EnsureFn& ensure,
                     int skip_gen = -1) const;
};

inline EnsureResult ensure_accept(const Poly&) { return EnsureResult::Ok; }

} // namespace thomas
