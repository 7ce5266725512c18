#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cambmin/cartan.hpp"
#include "cambmin/laurent.hpp"
#include "cambmin/matrix.hpp"
#include "cambmin/weyl.hpp"

namespace cambmin {

/*
 * Symbolic SL_m elements assembled from one-parameter letters, the wedge
 * power representations of the chain root system of rank m-1, and the
 * minors attached to extremal weights of tensor products of wedges.
 *
 * Generator i (0-based) couples rows i and i+1. Letter parameters are
 * Laurent polynomials over a shared ambient variable set, so every matrix
 * entry, minor, and identity below is exact.
 */

enum class LetterKind { kUpper, kLower, kTorus, kLift, kLiftInv };

struct Letter {
    LetterKind kind = LetterKind::kUpper;
    std::size_t i = 0;
    // parameter of kUpper/kLower, the unit u of u^{coroot_i} for kTorus,
    // unused for the lift letters
    LaurentPoly arg;

    bool operator==(const Letter& o) const;
    bool operator!=(const Letter& o) const { return !(*this == o); }
};

using GroupWord = std::vector<Letter>;

Letter upper(std::size_t i, LaurentPoly t);
Letter lower(std::size_t i, LaurentPoly t);
Letter torus(std::size_t i, LaurentPoly u);
Letter lift(std::size_t i);      // fixed SL2 representative of the reflection
Letter lift_inv(std::size_t i);

// Letters spelling the representative of w through its reduced word; the
// offset shifts generator indices, embedding a smaller chain into SL_m.
GroupWord lift_word(const WeylElement& w, std::size_t index_offset = 0);
GroupWord lift_word_inverse(const WeylElement& w, std::size_t index_offset = 0);

// Merge adjacent torus letters with equal index and drop trivial ones.
GroupWord simplify_torus(const GroupWord& word);

// Move all torus letters to the front, rescaling the parameters they cross.
// Words containing lift letters are rejected.
GroupWord torus_to_front(const CartanData& cd, const GroupWord& word);

struct GroupPoint {
    std::size_t m = 0;
    VarSetPtr vars;
    Mat<LaurentPoly> mat;
    GroupWord word;
};

// Exact product of the letter matrices; validates the unit determinant.
GroupPoint realize(const GroupWord& word, std::size_t m, const VarSetPtr& vars);

// Requires cd to be the simply-laced chain (SL_{n+1} root system).
void require_type_a(const CartanData& cd);

// Interleaving pattern for a chart on the double cell: exactly one torus
// slot, n barred and n unbarred slots. The barred letters spell the Coxeter
// word left to right, the unbarred ones spell it right to left.
enum class SlotKind { kBarred, kTorus, kUnbarred };
using Shuffle = std::vector<SlotKind>;

Shuffle standard_shuffle(std::size_t n);  // barred block, torus, unbarred block
Shuffle flipped_shuffle(std::size_t n);   // unbarred block, torus, barred block

// Chart parameters are named tb1..tbn (barred), h1..hn (torus), t1..tn
// (unbarred); extra symbol names may join the ambient set for later use.
GroupPoint generic_point(const CartanData& cd, const std::vector<int>& cox,
                         const Shuffle& shuffle,
                         const std::vector<std::string>& extra_vars = {});

// k-subsets of 0..m-1 ordered colexicographically.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t m, std::size_t k);

// Action on the k-th wedge power: entries are k-by-k minors of g.mat.
Mat<LaurentPoly> wedge_matrix(const GroupPoint& g, std::size_t k);

// Leading minor of order i of the chain embedded at the given row offset.
LaurentPoly principal_minor(const GroupPoint& g, std::size_t i, std::size_t offset = 0);

// Minor twisted by Weyl representatives on both sides: the leading minor of
// order i of lift(u)^{-1} * g * lift(v).
LaurentPoly minor_uv(const GroupPoint& g, std::size_t i, const WeylElement& u,
                     const WeylElement& v, std::size_t offset = 0);

// Tensor product of wedge powers with top weight mu (mu.c[i] factors of
// degree i+1). Basis vectors are tuples of subsets, one per factor.
struct TensorModel {
    std::size_t m = 0;
    std::vector<std::size_t> degrees;
};

TensorModel tensor_model(std::size_t m, const Weight& mu);
Weight subset_weight(std::size_t m, const std::vector<std::size_t>& subset);
Weight tuple_weight(const TensorModel& model, const std::vector<std::vector<std::size_t>>& tuple);
std::size_t weight_multiplicity(const TensorModel& model, const Weight& lam);

struct MinorOptions {
    // rescale the extremal vector; the minor must not change
    Rat scale = 1;
    // alternative reduced word for w used to build the representative
    std::optional<std::vector<int>> lift_word;
    // tensor an extra top-wedge factor onto the model
    bool det_twist = false;
    // explicit projection target; must carry the extremal weight and have
    // nonzero coefficient in the extremal vector
    std::optional<std::vector<std::vector<std::size_t>>> pick;
};

// The extremal vector of weight w(mu) in the tensor model: the image of the
// top basis vector under the lifted representative of w. It is supported on
// a single basis tuple because the top weight space is one-dimensional.
struct ExtremalData {
    TensorModel model;
    Weight lambda;
    std::vector<std::vector<std::size_t>> support;
    Rat coeff;  // coefficient of the support tuple in the extremal vector
    std::vector<std::vector<std::size_t>> pick;
    bool det_twist = false;
};

ExtremalData extremal_vector(const CartanData& cd, const Weight& mu, const WeylElement& w,
                             const MinorOptions& opts = {});

// Coefficient of the picked basis tuple in g applied to the extremal
// vector, divided by its coefficient in the extremal vector itself.
LaurentPoly extremal_minor(const GroupPoint& g, const ExtremalData& data);
LaurentPoly extremal_minor(const GroupPoint& g, const CartanData& cd, const Weight& mu,
                           const WeylElement& w, const MinorOptions& opts = {});

// Values of the cluster coordinates on a chart point, keyed by the variable
// names of the cluster model ("x1", "z1", "zb1", ...). The offset embeds a
// smaller chain at the given first row, for charts of corank cells.
std::unordered_map<std::string, LaurentPoly> cell_bindings(const CartanData& cd,
                                                           const std::vector<int>& cox,
                                                           const GroupPoint& g,
                                                           std::size_t offset = 0);

/*
 * Chart rewrites along the initial letter k of the Coxeter word.
 *
 * psi_front consumes a word shaped lower_k . middle . upper_k and emits
 * upper_k . torus_k . middle . torus_k . lower_k; its inverse consumes
 * upper_k . middle . lower_k and emits lower_k . torus_k^{-1} . middle .
 * torus_k^{-1} . upper_k. theta_word swaps the upper and lower families,
 * inverts torus parameters, and inverts lift letters.
 */
GroupWord psi_front(const CartanData& cd, const std::vector<int>& cox, const GroupWord& word);
GroupWord psi_front_inverse(const CartanData& cd, const std::vector<int>& cox,
                            const GroupWord& word);
GroupWord theta_word(const GroupWord& word);

// Chart restriction to the cell of the chain with the initial (resp. final)
// letter of the Coxeter word deleted: the letters of that index and its
// torus factor h_k disappear, and the parameters on the unbarred (resp.
// barred) side pick up the factor h_k^{a_kj} (resp. h_k^{-a_kj}).
GroupWord eta_front(const CartanData& cd, const std::vector<int>& cox, const GroupWord& word);
GroupWord eta_back(const CartanData& cd, const std::vector<int>& cox, const GroupWord& word);

struct MinorMatch {
    Weight gvec;
    bool monomial_found = false;
    bool equal = false;
    std::string detail;
};

// For each g-vector: locate the cluster monomial, push its value through the
// chart bindings, and compare with the extremal minor of a matching tensor
// model on the same chart point.
std::vector<MinorMatch> verify_cluster_minor_match(const CartanData& cd,
                                                   const std::vector<int>& cox,
                                                   const std::vector<Weight>& gvecs,
                                                   const Shuffle& shuffle, int depth);

}  // namespace cambmin
