#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thomas/config.hpp"
#include "thomas/multiindex.hpp"

namespace thomas {

using VarId = std::uint32_t;

enum class VarKind : std::uint8_t {
    KConst, // symbolic constant, invertible element of the coefficient field
    KIndep, // independent variable z_j, also an element of the coefficient field
    Alg,    // plain algebraic variable
    Der,    // derivative of a differential indeterminate
};

struct VarInfo {
    VarKind kind;
    int sym;        // index into the name table of the kind (indet index for Der)
    MultiIndex jet; // only meaningful for Der
};

// Owns every symbol of a session: coefficient-field symbols, algebraic variables,
// differential indeterminates and the interned derivative variables. Polynomials
// store bare VarIds and stay valid for the lifetime of their Context.
class Context {
public:
    VarId add_constant(const std::string& name);
    VarId add_indep(const std::string& name);
    VarId add_algvar(const std::string& name);
    int add_indet(const std::string& name);

    // interned (indet, multi-index) derivative variable; creates it on first use
    VarId dervar(int indet, const MultiIndex& jet);
    VarId dervar(int indet, std::vector<int> jet) { return dervar(indet, MultiIndex(std::move(jet))); }

    std::size_t n_indep() const { return indep_names_.size(); }
    std::size_t n_indets() const { return indet_names_.size(); }
    std::size_t n_vars() const { return vars_.size(); }

    const VarInfo& info(VarId v) const { return vars_[v]; }
    bool is_coeff(VarId v) const {
        VarKind k = vars_[v].kind;
        return k == VarKind::KConst || k == VarKind::KIndep;
    }
    // VarId of independent variable j (registered lazily on first use)
    VarId indep_var(int j);

    const std::string& indet_name(int i) const { return indet_names_[i]; }
    const std::string& indep_name(int j) const { return indep_names_[j]; }
    const std::vector<std::string>& constant_names() const { return const_names_; }
    const std::vector<std::string>& indep_names() const { return indep_names_; }
    const std::vector<std::string>& indet_names() const { return indet_names_; }
    std::string var_name(VarId v) const;

    // parser support: nullptr if unknown
    struct Symbol {
        VarKind kind;
        int index; // indet index for Der-kind names, else name-table index
        VarId vid; // direct variable id for non-Der kinds
    };
    const Symbol* find(const std::string& name) const;
    int indet_index(const std::string& name) const;

    // derivative order a DerVar may not exceed; guards runaway prolongation
    int order_cap = 50;

private:
    std::vector<std::string> indep_names_;
    std::vector<std::string> const_names_;
    std::vector<std::string> alg_names_;
    std::vector<std::string> indet_names_;
    std::vector<VarInfo> vars_;
    std::vector<VarId> indep_vids_;
    std::map<std::pair<int, std::vector<int>>, VarId> der_intern_;
    std::map<std::string, Symbol> by_name_;

    void register_name(const std::string& name, VarKind kind, int index, VarId vid);
};

} // namespace thomas
