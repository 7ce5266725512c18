#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cambmin/cartan.hpp"
#include "cambmin/matrix.hpp"

namespace cambmin {

/*
 * Weights live in fundamental-weight coordinates, roots in simple-root
 * coordinates. The two lattices are related by the Cartan matrix
 * (alpha_j has omega-coordinates given by column j), which in affine type
 * is singular, so both actions are tracked separately.
 */

struct Weight {
    std::vector<long> c;  // coordinates over omega_1..omega_n

    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return c != o.c; }
    bool operator<(const Weight& o) const { return c < o.c; }
    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator*(long k) const;
    bool is_zero() const;
    std::string str() const;
};

struct RootVec {
    std::vector<long> c;  // coordinates over alpha_1..alpha_n

    bool operator==(const RootVec& o) const { return c == o.c; }
    bool operator!=(const RootVec& o) const { return c != o.c; }
    bool operator<(const RootVec& o) const { return c < o.c; }
    bool all_nonneg() const;
    bool all_nonpos() const;
    long height() const;
    std::string str() const;
};

Weight fundamental_weight(const CartanData& cd, std::size_t i);
RootVec simple_root(std::size_t n, std::size_t i);
Weight root_to_weight(const CartanData& cd, const RootVec& beta);  // multiply by Cartan matrix

Weight reflect(const CartanData& cd, std::size_t i, const Weight& lam);
RootVec reflect_root(const CartanData& cd, std::size_t i, const RootVec& beta);

using IntMat = Mat<long>;

// A Weyl group element carried as a canonical reduced word plus its action
// matrices. Equality goes through the weight-lattice action, which is
// faithful for every symmetrizable type handled here.
class WeylElement {
  public:
    static WeylElement identity(const CartanData& cd);
    // Builds from an arbitrary word, reducing it on the fly.
    static WeylElement from_word(const CartanData& cd, const std::vector<int>& word);

    const std::vector<int>& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    const IntMat& weight_action() const { return wt_; }
    const IntMat& root_action() const { return rt_; }

    Weight act(const Weight& lam) const;
    RootVec act(const RootVec& beta) const;

    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    // right multiplication by a generator, tracking length exactly
    WeylElement times_gen(std::size_t i) const;
    bool right_descent(std::size_t i) const;  // len(w s_i) < len(w)
    bool left_descent(std::size_t i) const;   // len(s_i w) < len(w)

    bool operator==(const WeylElement& o) const { return wt_ == o.wt_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
    std::string word_str() const;

    const CartanData& cartan() const { return *cd_; }

  private:
    WeylElement(const CartanData& cd);
    void canonicalize_word();

    const CartanData* cd_;
    std::vector<int> word_;  // 0-based letters, reduced, lex-least
    IntMat wt_, rt_;
};

// All elements of length <= bound, breadth-first, deduplicated by action.
std::vector<WeylElement> enumerate_weyl(const CartanData& cd, std::size_t bound);

// lambda = w(mu) with mu dominant; finite-type orbits only (throws if the
// descent walk does not terminate within the safety cap).
struct DominantConjugate {
    Weight mu;
    WeylElement w;
};
DominantConjugate dominant_conjugate(const CartanData& cd, const Weight& lam,
                                     std::size_t cap = 4096);

// Invariant symmetric form on the root lattice: (alpha_i, alpha_j) = d_i a_ij.
long root_form(const CartanData& cd, const RootVec& x, const RootVec& y);

// Weight-space form pulled back through the inverse Cartan matrix; defined
// for invertible (finite-type) Cartan matrices only.
Rat weight_form(const CartanData& cd, const Weight& x, const Weight& y);

// All positive roots of height <= bound (closure under simple reflections).
std::vector<RootVec> positive_roots_up_to_height(const CartanData& cd, long bound);

// Coxeter element utilities. A Coxeter word is a permutation of 0..n-1.
void check_coxeter_word(const CartanData& cd, const std::vector<int>& cox);

// nu_c: root coordinates -> g-vector-side weight, depending on the letter
// order of the Coxeter word.
Weight nu_c(const CartanData& cd, const std::vector<int>& cox, const RootVec& beta);

}  // namespace cambmin
