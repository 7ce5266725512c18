#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cambmin/cambrian.hpp"
#include "cambmin/laurent.hpp"
#include "cambmin/weyl.hpp"

namespace cambmin {

/*
 * Seeds with doubled principal coefficients. The ambient Laurent ring has
 * 3n variables x_1..x_n, z_1..z_n, zb_1..zb_n; the exchange matrix is
 * extended by two identity blocks, one per frozen family.
 */

struct Seed {
    Mat<int> ext;                   // 3n x n
    std::vector<LaurentPoly> vars;  // current cluster variables
    std::vector<Weight> gvecs;      // their multidegrees
    std::vector<int> path;          // mutation directions from the initial seed
};

struct ClusterMonomial {
    Weight gvec;
    LaurentPoly value;
    std::vector<std::pair<std::size_t, long>> exponents;  // (slot in seed, power)
    Seed seed;
};

class ClusterModel {
  public:
    ClusterModel(const CartanData& cd, std::vector<int> cox);

    const CartanData& cartan() const { return cd_; }
    const std::vector<int>& cox() const { return cox_; }
    VarSetPtr ambient() const { return vars_; }
    std::size_t rank() const { return cd_.n; }

    std::string x_name(std::size_t i) const;
    std::string z_name(std::size_t i) const;
    std::string zb_name(std::size_t i) const;

    // fixed grading of the ambient ring: deg x_i = omega_i,
    // deg z_j = -sum_i b_ij omega_i (initial exchange matrix), deg zb_j = 0
    const std::vector<Weight>& grading() const { return degree_; }

    Seed initial() const;
    // matrix mutation on all 3n rows plus the binomial exchange in slot k;
    // an inexact exchange division signals a real bug and propagates
    Seed mutate(const Seed& s, std::size_t k) const;

    // common multidegree of every term; throws std::logic_error when the
    // terms disagree (the grading makes every reachable variable homogeneous)
    Weight g_vector(const LaurentPoly& var) const;

    // breadth-first mutation closure, deduplicated by the unordered set of
    // cluster variables; stops at the depth bound (finite type closes early)
    std::vector<Seed> closure(std::size_t depth) const;

    // scan the closure for a seed whose g-vector basis writes lam with
    // nonnegative integer coordinates; minimal mutation depth wins
    std::optional<ClusterMonomial> find_monomial(const Weight& lam, std::size_t depth) const;

    // mutating along (n, n-1, ..., 1) must land on the seed whose g-vectors
    // are exactly the negated fundamental weights
    bool opposite_seed_check() const;

  private:
    CartanData cd_;
    std::vector<int> cox_;
    VarSetPtr vars_;
    std::vector<Weight> degree_;
    Mat<int> b0_;  // initial exchange block, fixed by the Coxeter word
};

// true when the variable, read as a Laurent polynomial in x, has a single
// z,zb-monomial as the coefficient of each x-monomial
bool has_monomial_coefficients(const ClusterModel& model, const LaurentPoly& var);

}  // namespace cambmin
