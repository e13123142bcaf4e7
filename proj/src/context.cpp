#include "thomas/context.hpp"

#include <cstdlib>
#include <limits>

namespace thomas {

bool trace_enabled() {
    static const bool on = std::getenv("THOMAS_TRACE") != nullptr;
    return on;
}

void Context::register_name(const std::string& name, VarKind kind, int index, VarId vid) {
    if (by_name_.count(name))
        throw ParseError("symbol declared twice: " + name);
    by_name_[name] = Symbol{kind, index, vid};
}

VarId Context::add_constant(const std::string& name) {
    vars_.push_back(VarInfo{VarKind::KConst, (int)const_names_.size(), MultiIndex()});
    register_name(name, VarKind::KConst, (int)const_names_.size(), (VarId)(vars_.size() - 1));
    const_names_.push_back(name);
    return (VarId)(vars_.size() - 1);
}

VarId Context::add_indep(const std::string& name) {
    vars_.push_back(VarInfo{VarKind::KIndep, (int)indep_names_.size(), MultiIndex()});
    register_name(name, VarKind::KIndep, (int)indep_names_.size(), (VarId)(vars_.size() - 1));
    indep_names_.push_back(name);
    indep_vids_.push_back((VarId)(vars_.size() - 1));
    return indep_vids_.back();
}

VarId Context::add_algvar(const std::string& name) {
    vars_.push_back(VarInfo{VarKind::Alg, (int)alg_names_.size(), MultiIndex()});
    register_name(name, VarKind::Alg, (int)alg_names_.size(), (VarId)(vars_.size() - 1));
    alg_names_.push_back(name);
    return (VarId)(vars_.size() - 1);
}

int Context::add_indet(const std::string& name) {
    register_name(name, VarKind::Der, (int)indet_names_.size(), 0);
    indet_names_.push_back(name);
    return (int)indet_names_.size() - 1;
}

VarId Context::indep_var(int j) {
    return indep_vids_.at(j);
}

VarId Context::dervar(int indet, const MultiIndex& jet) {
    if (jet.size() != indep_names_.size())
        throw DomainError("derivative multi-index arity mismatch for " + indet_names_.at(indet));
    for (int x : jet.e)
        if (x < 0) throw DomainError("negative derivative multi-index");
    if (jet.order() > order_cap)
        throw ResourceLimitError("derivative order cap exceeded (" + std::to_string(order_cap) +
                                 ") at " + indet_names_[indet] + jet.to_string());
    auto key = std::make_pair(indet, jet.e);
    auto it = der_intern_.find(key);
    if (it != der_intern_.end()) return it->second;
    vars_.push_back(VarInfo{VarKind::Der, indet, jet});
    VarId v = (VarId)(vars_.size() - 1);
    der_intern_.emplace(std::move(key), v);
    return v;
}

std::string Context::var_name(VarId v) const {
    const VarInfo& vi = vars_[v];
    switch (vi.kind) {
    case VarKind::KConst: return const_names_[vi.sym];
    case VarKind::KIndep: return indep_names_[vi.sym];
    case VarKind::Alg: return alg_names_[vi.sym];
    case VarKind::Der: {
        std::string s = indet_names_[vi.sym] + "[";
        for (std::size_t i = 0; i < vi.jet.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(vi.jet[i]);
        }
        return s + "]";
    }
    }
    return "?";
}

const Context::Symbol* Context::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &it->second;
}

int Context::indet_index(const std::string& name) const {
    auto* s = find(name);
    if (!s || s->kind != VarKind::Der)
        throw ParseError("not a declared indeterminate: " + name);
    return s->index;
}

} // namespace thomas
