#pragma once

#include "cambmin/laurent.hpp"

namespace cambmin {

/*
 * Rewriting symmetric polynomials over the elementary symmetric basis.
 * Inputs live in an ambient set whose first n variables are the symmetric
 * alphabet; outputs live over e-variables e1..en (plus any carried spares).
 */

// e_k(v[0..n-1]) expanded in the ambient set of the listed variables.
LaurentPoly elementary_symmetric(const VarSetPtr& vars, const std::vector<std::size_t>& alphabet,
                                 std::size_t k);

// Invariance under every adjacent transposition of the alphabet.
bool is_symmetric(const LaurentPoly& p, const std::vector<std::size_t>& alphabet);

// Rewrite a symmetric polynomial (nonnegative exponents; symmetric in the
// full ambient alphabet a1..an) as a polynomial in e1..en over `evars`.
// Classical leading-term descent: the lex-leading exponent of a symmetric
// polynomial is a partition l1 >= l2 >= ... and is killed by subtracting
// coeff * e1^(l1-l2) e2^(l2-l3) ... en^(ln).
LaurentPoly e_basis_reduce(const LaurentPoly& p, const VarSetPtr& evars);

// Substitute e_k -> e_k(a1..an); two-sided inverse of e_basis_reduce.
LaurentPoly expand_e_poly(const LaurentPoly& q, const VarSetPtr& avars);

}  // namespace cambmin
