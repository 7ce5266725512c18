#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cambmin/rational.hpp"

namespace cambmin {

/*
 * Multivariate Laurent polynomials over Rat with a fixed ambient variable
 * set. Every polynomial knows its ambient set; mixing ambient sets in
 * arithmetic is a hard error rather than a silent re-embedding.
 */

class VarSet {
  public:
    explicit VarSet(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    std::optional<std::size_t> index(const std::string& name) const;
    const std::vector<std::string>& names() const { return names_; }

    bool operator==(const VarSet& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_varset(std::vector<std::string> names);

// Exponent vector, one entry per ambient variable. Entries may be negative.
using Expo = std::vector<std::int32_t>;

// Graded lexicographic order: compare total degree first, then exponents
// left to right. Used both for canonical serialization and as the term
// order steering exact division.
struct GradedLex {
    bool operator()(const Expo& a, const Expo& b) const;
};

class LaurentPoly;

// Inexact division carries the offending remainder so callers can report it.
class DivisionError : public std::runtime_error {
  public:
    DivisionError(std::string msg, std::shared_ptr<const LaurentPoly> rem)
        : std::runtime_error(std::move(msg)), remainder_(std::move(rem)) {}
    const LaurentPoly& remainder() const { return *remainder_; }

  private:
    std::shared_ptr<const LaurentPoly> remainder_;
};

class LaurentPoly {
  public:
    using TermMap = std::map<Expo, Rat, GradedLex>;

    LaurentPoly() = default;  // zero over the empty ambient set
    explicit LaurentPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static LaurentPoly zero(VarSetPtr vars) { return LaurentPoly(std::move(vars)); }
    static LaurentPoly constant(VarSetPtr vars, const Rat& c);
    static LaurentPoly one(VarSetPtr vars) { return constant(std::move(vars), 1); }
    static LaurentPoly variable(VarSetPtr vars, const std::string& name, std::int32_t power = 1);
    static LaurentPoly monomial(VarSetPtr vars, const Rat& c, Expo e);

    const VarSetPtr& varset() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // A unit of the Laurent ring: exactly one term with nonzero coefficient.
    bool is_monomial() const { return terms_.size() == 1; }

    Rat coeff(const Expo& e) const;
    Rat constant_term() const;
    // Leading term under graded lex; polynomial must be nonzero.
    const std::pair<const Expo, Rat>& leading() const;
    long total_degree() const;  // of the leading term
    std::int32_t min_exponent(std::size_t var) const;
    std::int32_t max_exponent(std::size_t var) const;
    bool depends_on(std::size_t var) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator*(const Rat& c) const;

    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Inverse of a unit (single-term) Laurent polynomial.
    LaurentPoly unit_inverse() const;
    // p^k; negative k requires a unit.
    LaurentPoly pow(long k) const;

    // Multiply by the monomial x^e (shift all exponents).
    LaurentPoly shifted(const Expo& e) const;

    std::string str() const;  // canonical serialization

    void add_term(const Expo& e, const Rat& c);  // accumulate, drop zeros

  private:
    void check_compatible(const LaurentPoly& o) const;

    VarSetPtr vars_;
    TermMap terms_;
};

inline LaurentPoly operator*(const Rat& c, const LaurentPoly& p) { return p * c; }

// Exact division in the Laurent ring. Throws DivisionError with the nonzero
// remainder when q does not divide p.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

// Ring homomorphism into the Laurent ring over `target`. Every variable of
// p's ambient set must either appear in `bindings` or exist verbatim in
// `target` (where it maps to itself). Negative exponents are resolved by a
// common-denominator exact division, so bindings need not be units as long
// as the total image stays a Laurent polynomial.
LaurentPoly substitute(const LaurentPoly& p,
                       const std::unordered_map<std::string, LaurentPoly>& bindings,
                       const VarSetPtr& target);

}  // namespace cambmin
