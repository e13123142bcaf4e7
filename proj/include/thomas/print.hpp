#pragma once

#include "thomas/alg.hpp"
#include "thomas/control.hpp"
#include "thomas/diff.hpp"

#include <string>

namespace thomas {

// Canonical rendering: terms in decreasing order of leader then degree (the
// supplied order extended with coefficient symbols below everything else),
// factors within a monomial ascending. Output re-parses to the same poly.
std::string poly_to_string(const Poly& p, const Context& ctx, const VarOrder& ord);

// header directives (indep/const/indets/rank) matching the file grammar
std::string header_text(const Context& ctx, const Ranking& rk);

std::string systems_text(const std::vector<SimpleAlgSystem>& v, const Context& ctx,
                         const VarOrder& ord);
std::string systems_text(const std::vector<SimpleDiffSystem>& v, const Context& ctx,
                         const Ranking& rk, bool with_header = false);

std::string systems_json(const std::vector<SimpleAlgSystem>& v, const Context& ctx,
                         const VarOrder& ord);
std::string systems_json(const std::vector<SimpleDiffSystem>& v, const Context& ctx,
                         const Ranking& rk);

} // namespace thomas
