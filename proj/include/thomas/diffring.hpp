#pragma once

#include "thomas/poly.hpp"

namespace thomas {

// Ranking on derivative variables: block ranking over the indeterminates where
// each block is compared by degrevlex on the derivation multi-indices. Ties on
// equal multi-indices fall back to block position, earlier listed = greater.
struct Ranking {
    std::vector<std::vector<int>> blocks; // indet indices, highest block first
    std::vector<int> block_of;            // per indet
    std::vector<int> pos_in_block;        // per indet
    std::vector<int> perm;                // degrevlex role order over derivations

    static Ranking single_block(const Context& ctx);
    static Ranking from_blocks(const Context& ctx, std::vector<std::vector<int>> blocks);

    bool less(const Context& ctx, VarId a, VarId b) const; // Der vars only
};

// Total order over VarIds induced by a ranking: derivative variables compare by
// the ranking; coefficient symbols sit below every derivative variable.
struct RankingOrder final : VarOrder {
    const Context* ctx;
    const Ranking* rk;
    RankingOrder(const Context& c, const Ranking& r) : ctx(&c), rk(&r) {}
    bool less(VarId a, VarId b) const override;
};

// d/dz_j with the chain rule over derivative variables; coefficient symbols
// differentiate to 0 except z_j itself
Poly differentiate(const Poly& p, int j, Context& ctx);
Poly differentiate(const Poly& p, const MultiIndex& J, Context& ctx);

Poly initial_of(const Poly& p, const Context& ctx, const VarOrder& ord);
Poly separant_of(const Poly& p, const Context& ctx, const VarOrder& ord);

} // namespace thomas
