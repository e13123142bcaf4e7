#pragma once

#include "thomas/poly.hpp"

namespace thomas {

// multiplier * p1 == quo * p2 + rem, deg_x(rem) < deg_x(p2),
// multiplier == init_x(p2)^power with power <= deg_x(p1) - deg_x(p2) + 1
struct PseudoDiv {
    Poly quo;
    Poly rem;
    Poly multiplier;
    int power = 0;
};

PseudoDiv pseudo_divide(const Poly& p1, const Poly& p2, VarId x);
Poly prem(const Poly& p1, const Poly& p2, VarId x);
Poly pquo(const Poly& p1, const Poly& p2, VarId x);

// subresultant polynomial remainder sequence starting at (A, B); requires
// deg_x(A) >= deg_x(B) >= 0 and A, B nonzero. Front is A, back the last
// nonzero remainder (a gcd of A and B over the fraction field of the
// coefficient ring).
std::vector<Poly> subresultant_prs(const Poly& A, const Poly& B, VarId x);

// content/primitive part with respect to x (full multivariate coefficient gcd)
Poly content_wrt(const Poly& p, VarId x);
Poly primitive_part(const Poly& p, VarId x);

// multivariate gcd over Q[all symbols], unit-normalized
Poly gcd_poly(const Poly& p, const Poly& q);
Poly lcm_poly(const Poly& p, const Poly& q);

// Divides out the gcd of the coefficient-field parts, taken across the terms
// grouped by their non-coefficient monomial. Coefficient-field elements are
// invertible, so the result has the same solution set.
Poly strip_coeff_content(const Poly& p, const Context& ctx);

// resultant of p and q with respect to x (Sylvester matrix, fraction-free
// elimination); p or q of x-degree 0 follow Res(c, q) = c^deg(q)
Poly resultant(const Poly& p, const Poly& q, VarId x);

// (-1)^(d(d-1)/2) * resultant(p, dp/dx) / init_x(p); degree <= 1 yields 1
Poly discriminant(const Poly& p, VarId x);

// p divided by gcd(p, dp/dx) w.r.t. x, unit-normalized; same roots as p
Poly square_free_part(const Poly& p, VarId x);

} // namespace thomas
