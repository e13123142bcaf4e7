#pragma once

#include "thomas/diff.hpp"

namespace thomas {

// Per-system elimination data: the equations lying in the subring generated by
// the blocks from block_index down, and the product of their initials and
// separants (the saturation factor).
struct Elimination {
    std::vector<Poly> generators;
    Poly saturation;
};

std::vector<Elimination> eliminate(const std::vector<SimpleDiffSystem>& systems,
                                   const Context& ctx, const Ranking& rk,
                                   int block_index);

struct ObsVerdict {
    SimpleDiffSystem system;
    bool verdict = false;
    Poly witness;           // set when verdict is true
    std::string condition;  // explanation otherwise
};

// Decomposes S under the block ranking  rest >> {x} >> Y  and reports, per
// simple system, whether the equations determine x algebraically over Y: an
// order-zero equation in x over Y whose leading coefficient and x-partial both
// have nonzero normal form.
std::vector<ObsVerdict> is_observable(const DiffSystem& S, Context& ctx, int x,
                                      const std::vector<int>& Y, const Config& cfg = {});

// Witness search against an existing simple system: an equation containing the
// order-zero derivative of x, no proper derivative of x, all other derivative
// variables drawn from `allowed`, and leading coefficient / separant that are
// not members of the system's ideal.
std::optional<Poly> observability_witness(const SimpleDiffSystem& T, Context& ctx,
                                          const Ranking& rk, int x,
                                          const std::set<int>& allowed);

struct FlatVerdict {
    SimpleDiffSystem system;
    bool verdict = false;
    std::string report;
};

// Decomposes S under  rest >> Y >> P  and checks, per system, that no equation
// over Y and P involves Y (zero intersection with the output subring, with the
// parameter block P treated as coefficients) and that every remaining
// indeterminate is observable over Y and P.
std::vector<FlatVerdict> is_flat_output(const DiffSystem& S, Context& ctx,
                                        const std::vector<int>& Y,
                                        const std::vector<int>& P,
                                        const Config& cfg = {});

// the two flatness conditions evaluated on one already-decomposed system
bool flat_on_system(const SimpleDiffSystem& T, Context& ctx, const Ranking& rk,
                    const std::set<int>& Y, const std::set<int>& P,
                    std::string* report);

} // namespace thomas
