#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "thomas/context.hpp"
#include "thomas/rational.hpp"

namespace thomas {

// Sparse power product, factors sorted by VarId.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> factors;

    bool empty() const { return factors.empty(); }
    std::uint32_t total_degree() const;
    std::uint32_t degree_of(VarId v) const;

    static Monomial one() { return Monomial{}; }
    static Monomial var(VarId v, std::uint32_t e = 1);

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const; // requires divides(o) from o's view

    bool operator==(const Monomial& o) const { return factors == o.factors; }
    bool operator!=(const Monomial& o) const { return factors != o.factors; }
};

// Graded order on monomials, used only for canonical term storage and exact
// division; independent of any user-facing variable ranking.
int monomial_cmp(const Monomial& a, const Monomial& b);

// Strict total order on variables; concrete orders come from an explicit
// permutation (algebraic systems) or from a differential ranking.
struct VarOrder {
    virtual ~VarOrder() = default;
    virtual bool less(VarId a, VarId b) const = 0;
};

struct PermOrder final : VarOrder {
    std::vector<int> rank; // indexed by VarId; higher rank = greater variable
    explicit PermOrder(std::vector<int> r) : rank(std::move(r)) {}
    // ascending: vars[0] smallest
    static PermOrder ascending(const std::vector<VarId>& vars, std::size_t n_total);
    bool less(VarId a, VarId b) const override { return rank.at(a) < rank.at(b); }
};

class Poly {
public:
    struct Term {
        Monomial mon;
        Rational coeff;
    };

    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c);
    static Poly var(VarId v, std::uint32_t e = 1);

    bool is_zero() const { return terms_.empty(); }
    // true when no variable outside the coefficient field occurs
    bool is_coeff_element(const Context& ctx) const;
    bool is_rational() const;
    Rational rational_value() const; // requires is_rational()

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly times(const Rational& c) const;
    Poly times_mon(const Monomial& m) const;
    Poly pow(std::uint32_t e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // occurring variables, ascending VarId
    std::vector<VarId> vars() const;
    bool contains(VarId v) const;
    // greatest occurring non-coefficient variable under ord; nullopt for K-elements
    std::optional<VarId> leader(const Context& ctx, const VarOrder& ord) const;
    // greatest variable of any kind by raw VarId; nullopt for rationals
    std::optional<VarId> top_var_by_id() const;

    int degree(VarId v) const;
    Poly coeff_of(VarId v, int deg) const;
    std::vector<Poly> coeffs_in(VarId v) const; // index = degree in v
    Poly initial(VarId v) const { return coeff_of(v, degree(v)); }

    Poly derivative(VarId v) const;

    // exact division in the polynomial ring; nullopt when not divisible
    static std::optional<Poly> divide_exact(const Poly& num, const Poly& den);

    // removes rational content and makes the canonical leading coefficient positive
    Poly unit_normalized() const;
    Rational rational_content() const; // signed: result keeps lead coeff positive

    std::complex<double> eval(const std::map<VarId, std::complex<double>>& point) const;
    std::optional<Rational> eval_exact(const std::map<VarId, Rational>& point) const;

    // arbitrary deterministic total order for tie-breaking and set storage
    static int compare(const Poly& a, const Poly& b);

    // building block for parser/ops: adds c*m into the term set
    void add_term(const Monomial& m, const Rational& c);

private:
    // invariant: terms sorted by monomial_cmp descending, no zero coefficients
    std::vector<Term> terms_;
};

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return Poly::compare(a, b) < 0; }
};

} // namespace thomas
