#pragma once

#include "thomas/config.hpp"
#include "thomas/poly.hpp"

namespace thomas {

struct AlgSystem {
    std::vector<Poly> equations;
    std::vector<Poly> inequations;
};

// One output system of the algebraic decomposition. Members are stored with
// ascending leaders; leaders are pairwise distinct across both lists.
struct SimpleAlgSystem {
    std::vector<Poly> equations;
    std::vector<Poly> inequations;
    std::vector<VarId> eq_leaders;
    std::vector<VarId> ineq_leaders;

    AlgSystem as_alg_system() const { return {equations, inequations}; }
};

// Splits a system into finitely many simple systems with pairwise disjoint
// solution sets whose union is the input's solution set. An inconsistent input
// yields the empty list.
std::vector<SimpleAlgSystem> decompose_algebraic(const AlgSystem& S, Context& ctx,
                                                 const VarOrder& ord,
                                                 const Config& cfg = {});

// Decides simplicity: no coefficient-only members, pairwise distinct leaders,
// and for every member neither its initial nor its discriminant vanishes
// anywhere on the solution set of the lower-leader members. The vanishing
// conditions are certified by auxiliary decompositions coming out empty.
bool is_simple(const AlgSystem& S, Context& ctx, const VarOrder& ord,
               const Config& cfg = {});

// Full pseudo-reduction of p modulo the equations: in the result, the degree
// in every equation leader is below that equation's leader degree.
Poly reduce_modulo(const Poly& p, const SimpleAlgSystem& S, Context& ctx,
                   const VarOrder& ord);

// Numeric (complex) sample points of a simple system's solution set, leaders
// solved bottom up, free coordinates randomized. Exact rational coordinates are
// reported when every equation could be solved in rationals.
struct SamplePoint {
    std::map<VarId, std::complex<double>> coords;
    std::map<VarId, Rational> exact;
    bool all_exact = false;
};

std::vector<SamplePoint> sample_solutions(const SimpleAlgSystem& S, Context& ctx,
                                          const VarOrder& ord, std::size_t count,
                                          unsigned seed);

// Largest residual of S's members at the point (equations want 0, inequations
// want nonzero; returns the worst equation residual and the smallest
// inequation magnitude). Each value is normalized by the evaluated term
// magnitude of its polynomial, so coefficient scale cancels out.
struct Residual {
    double worst_eq = 0.0;
    double min_ineq = 1.0;
};
Residual residual_at(const AlgSystem& S, const SamplePoint& pt);

} // namespace thomas
