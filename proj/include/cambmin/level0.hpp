#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cambmin/laurent.hpp"

namespace cambmin {

/*
 * The rank two loop chart: a family of representations on
 * k[u^±] ⊗ (k²)^⊗n indexed by nonzero scalars a1..an, the closed form of
 * its principal minor, and the coefficient identities selecting the greedy,
 * triangular, and generic expansions of the degree n·(-w1+w2) elements.
 */

// One basis state u^{u_exp} ⊗ v_1 ⊗ ... ⊗ v_n. Bit i of `lowered` is set
// when tensor factor i holds the lowest weight vector of k².
struct L0State {
    long u_exp = 0;
    std::uint32_t lowered = 0;

    auto operator<=>(const L0State&) const = default;
};

// Finitely supported vector; all coefficients share one ambient.
using L0Vec = std::map<L0State, LaurentPoly>;

// One-parameter subgroups at the two nodes plus the torus cocharacters.
// Node 1 is the loop node: its letters shift u_exp by ±1 once per flipped
// factor and weight factor i by a_i^{±1}. Node 2 acts factor-wise with no
// shift. Torus letters need a unit argument.
enum class L0Gen { kX1, kX1Bar, kX2, kX2Bar, kH1, kH2 };

// Apply one generator with the given parameter. For kX1/kX1Bar the ambient
// of `arg` must contain a1..an.
L0Vec rep_act(L0Gen gen, const LaurentPoly& arg, std::size_t n, const L0Vec& v);

// Ambient tb1, tb2, h1, h2, t2, t1, a1..an shared by the minor evaluation.
VarSetPtr minor_ambient(std::size_t n);

// Matrix coefficient of xb1(tb1)·xb2(tb2)·h1^{a1v}·h2^{a2v}·x2(t2)·x1(t1)
// at the loop-degree-zero highest tensor state, by direct action.
LaurentPoly minor_direct(std::size_t n);

// The monomial tb1^m tb2^{m-k} h1^{2k-n} h2^{n-2k} t2^{m-k} t1^m carried by
// the (m,k) entry of the closed form, over minor_ambient(n).
LaurentPoly minor_term(const VarSetPtr& vars, std::size_t n, std::size_t m, std::size_t k);

// Sum over disjoint pairs (I, J) of r-subsets of the alphabet of
// prod_I a / prod_J a; zero once 2r exceeds the alphabet size.
LaurentPoly s_subsets(const VarSetPtr& vars, const std::vector<std::size_t>& avars,
                      std::size_t r);

// The same sum with elementary-symmetric values constrained: e_l is pinned
// to e_values[l] (1-based) and the rest stay as variables e1..en of the
// returned ambient. The top value e_n, when pinned, must be nonzero.
LaurentPoly s_from_e(std::size_t n, const std::map<std::size_t, Rat>& e_values, std::size_t r);

// d(m,k) = sum_r binom(m-r,k)·binom(n-2r,m-r)·S[r], with S[r] = 0 past the
// end of the table. Requires k <= m <= n.
Rat d_coeff(std::size_t n, std::size_t m, std::size_t k, const std::vector<Rat>& s);
LaurentPoly d_coeff(std::size_t n, std::size_t m, std::size_t k,
                    const std::vector<LaurentPoly>& s);

// sum over all pairs (I, J) of m-subsets of prod_I a · prod_{l not in J} a:
// the diagonal coefficient d(m,0) with denominators cleared, a symmetric
// polynomial ready for e-basis reduction.
LaurentPoly d0_numerator(const VarSetPtr& vars, const std::vector<std::size_t>& avars,
                         std::size_t m);

// Solve d(m,0) = sum_{r<=m} binom(n-2r,m-r)·S_r for S_0..S_{floor(n/2)}
// given the left sides for m = 0..floor(n/2). The system is unitriangular.
std::vector<Rat> solve_s_from_d0(std::size_t n, const std::vector<Rat>& d0);

enum class BasisKind { kGreedy, kTriangular, kGeneric };

// The elementary-symmetric constraints selecting each kind: greedy pins
// e_l = 0 for l <= floor(n/2) and leaves the rest free; triangular pins
// e_l = 1 and generic pins e_l = 1/l! for all l.
std::map<std::size_t, Rat> basis_e_values(BasisKind kind, std::size_t n);

// Closed-form coefficient at (m,k) of each display. Requires k <= m <= n.
Rat basis_coeff(BasisKind kind, std::size_t n, std::size_t m, std::size_t k);

// Ambient x1, x2, z1, z2, zb1, zb2 shared by the basis elements.
VarSetPtr basis_ambient();

// The monomial zb1^m z1^m zb2^{m-k} z2^{m-k} x1^{2(m-k)-n} x2^{n-2m}
// carried by the (m,k) entry of every display, over basis_ambient().
LaurentPoly basis_term(const VarSetPtr& vars, std::size_t n, std::size_t m, std::size_t k);

// The degree n·(-w1+w2) element of the given kind, assembled from its
// closed-form coefficients.
LaurentPoly basis_element(BasisKind kind, std::size_t n);

// The same shape with coefficients computed from e-constraints; throws when
// a free elementary value survives in some coefficient.
LaurentPoly basis_element_from_e(const std::map<std::size_t, Rat>& e_values, std::size_t n);

struct BasisCheck {
    std::size_t m = 0;
    std::size_t k = 0;
    bool constant = false;  // all free elementary values cancelled
    bool equal = false;
    std::string detail;
};

// Compare the e-constrained coefficient table against the closed display,
// entry by entry over 0 <= k <= m <= n.
std::vector<BasisCheck> verify_basis(BasisKind kind, std::size_t n);

// sum_r (-1)^r binom(b,r)·binom(a-r,c-r) == binom(a-b,c), evaluated exactly.
// Requires 0 <= b, c <= a.
bool binomial_identity_check(long a, long b, long c);

}  // namespace cambmin
