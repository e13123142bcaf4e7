#pragma once

#include "thomas/alg.hpp"
#include "thomas/janet.hpp"

namespace thomas {

struct DiffSystem {
    std::vector<Poly> equations;
    std::vector<Poly> inequations;
};

// One output system of the differential decomposition: algebraically simple
// over the occurring derivative variables, equation leader sets Janet complete
// per indeterminate, passive, inequations Janet-reduced.
struct SimpleDiffSystem {
    std::vector<Poly> equations;
    std::vector<Poly> inequations;
    std::vector<VarId> eq_leaders;
    std::vector<VarId> ineq_leaders;
    // admissible derivation indices per equation, from the Janet division of
    // its indeterminate's leader index set
    std::vector<std::vector<int>> cones;

    AlgSystem as_alg_system() const { return {equations, inequations}; }
};

std::vector<SimpleDiffSystem> decompose_differential(const DiffSystem& S, Context& ctx,
                                                     const Ranking& rk,
                                                     const Config& cfg = {});

bool is_simple_differential(const SimpleDiffSystem& S, Context& ctx, const Ranking& rk,
                            const Config& cfg = {});

// Radical differential ideal membership for the saturated ideal of a simple
// system: p lies in it iff its Janet normal form modulo the equations is zero.
bool membership(const Poly& p, const SimpleDiffSystem& S, Context& ctx,
                const Ranking& rk);

Poly janet_reduce(const Poly& p, const SimpleDiffSystem& S, Context& ctx,
                  const Ranking& rk);

JanetReducer make_reducer(const SimpleDiffSystem& S, const Context& ctx,
                          const Ranking& rk);

} // namespace thomas
