#include "cambmin/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cambmin {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        auto [it, fresh] = index_.emplace(names_[i], i);
        if (!fresh) throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
}

std::optional<std::size_t> VarSet::index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VarSetPtr make_varset(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

bool GradedLex::operator()(const Expo& a, const Expo& b) const {
    long da = 0, db = 0;
    for (auto v : a) da += v;
    for (auto v : b) db += v;
    if (da != db) return da < db;
    // lex: a < b when the first differing exponent is smaller
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {
// mpq_class built from a numerator/denominator pair is not reduced, and GMP
// comparisons assume canonical form, so normalize at every entry point.
Rat canon(const Rat& c) {
    Rat r = c;
    r.canonicalize();
    return r;
}
}  // namespace

LaurentPoly LaurentPoly::constant(VarSetPtr vars, const Rat& c) {
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Expo(p.vars_->size(), 0), canon(c));
    return p;
}

LaurentPoly LaurentPoly::variable(VarSetPtr vars, const std::string& name, std::int32_t power) {
    auto idx = vars->index(name);
    if (!idx) throw std::invalid_argument("variable not in ambient set: " + name);
    LaurentPoly p(std::move(vars));
    Expo e(p.vars_->size(), 0);
    e[*idx] = power;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(VarSetPtr vars, const Rat& c, Expo e) {
    if (e.size() != vars->size()) throw std::invalid_argument("exponent vector length mismatch");
    LaurentPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(std::move(e), canon(c));
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expo& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::int32_t v) { return v == 0; });
}

Rat LaurentPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat LaurentPoly::constant_term() const { return coeff(Expo(vars_ ? vars_->size() : 0, 0)); }

const std::pair<const Expo, Rat>& LaurentPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

long LaurentPoly::total_degree() const {
    const Expo& e = leading().first;
    long d = 0;
    for (auto v : e) d += v;
    return d;
}

std::int32_t LaurentPoly::min_exponent(std::size_t var) const {
    std::int32_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < m) m = e[var];
        first = false;
    }
    return m;
}

std::int32_t LaurentPoly::max_exponent(std::size_t var) const {
    std::int32_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] > m) m = e[var];
        first = false;
    }
    return m;
}

bool LaurentPoly::depends_on(std::size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
    if (vars_ == o.vars_) return;
    // a default-constructed zero acts as the zero of any ambient ring
    if (!vars_ && terms_.empty()) return;
    if (!o.vars_ && o.terms_.empty()) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
    throw std::invalid_argument("ambient variable sets differ");
}

void LaurentPoly::add_term(const Expo& e, const Rat& c0) {
    Rat c = canon(c0);
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    if (!r.vars_) r.vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r = *this;
    if (!r.vars_) r.vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_compatible(o);
    if (!vars_) vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_compatible(o);
    if (!vars_) vars_ = o.vars_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    check_compatible(o);
    LaurentPoly r(vars_ ? vars_ : o.vars_);
    if (terms_.empty() || o.terms_.empty()) return r;
    const std::size_t nv = vars_->size();
    Expo e(nv, 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator*(const Rat& c0) const {
    LaurentPoly r(vars_);
    Rat c = canon(c0);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    if (vars_ != o.vars_ && !(vars_ && o.vars_ && *vars_ == *o.vars_)) return false;
    return terms_ == o.terms_;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (terms_.size() != 1) {
        throw std::invalid_argument("not a unit of the Laurent ring: " + str());
    }
    const auto& [e, c] = *terms_.begin();
    Expo inv(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
    return monomial(vars_, Rat(1) / c, std::move(inv));
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) return unit_inverse().pow(-k);
    LaurentPoly acc = one(vars_);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

LaurentPoly LaurentPoly::shifted(const Expo& s) const {
    if (s.size() != (vars_ ? vars_->size() : 0))
        throw std::invalid_argument("shift exponent length mismatch");
    LaurentPoly r(vars_);
    Expo e(s.size());
    for (const auto& [ep, c] : terms_) {
        for (std::size_t i = 0; i < s.size(); ++i) e[i] = ep[i] + s[i];
        r.terms_.emplace(e, c);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // leading term first: walk the map backwards
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_->name(i);
            if (e[i] != 1) mono << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            out << rat_str(a);
        } else if (a == 1) {
            out << mono.str();
        } else {
            out << rat_str(a) << "*" << mono.str();
        }
    }
    return out.str();
}

namespace {

// Strip the largest monomial from p so that every variable has minimum
// exponent zero. Returns the stripped polynomial and records the shift.
LaurentPoly strip_monomial(const LaurentPoly& p, Expo& shift) {
    const std::size_t nv = p.varset()->size();
    shift.assign(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) shift[i] = -p.min_exponent(i);
    return p.shifted(shift);
}

bool divides_expo(const Expo& d, const Expo& e) {
    for (std::size_t i = 0; i < d.size(); ++i)
        if (e[i] < d[i]) return false;
    return true;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.varset() != q.varset() && !(*p.varset() == *q.varset()))
        throw std::invalid_argument("ambient variable sets differ in division");
    if (p.is_zero()) return p;
    if (q.is_monomial()) return p * q.unit_inverse();

    // Shift both to genuine polynomials with per-variable minimum exponent
    // zero. Divisibility in the Laurent ring then coincides with polynomial
    // divisibility, and single-divisor reduction under graded lex decides it.
    Expo sp, sq;
    LaurentPoly pp = strip_monomial(p, sp);
    LaurentPoly qq = strip_monomial(q, sq);

    const std::size_t nv = p.varset()->size();
    LaurentPoly quot(p.varset());
    LaurentPoly rem = pp;
    const auto& [qe, qc] = qq.leading();
    Expo e(nv, 0);
    while (!rem.is_zero()) {
        const auto& [re, rc] = rem.leading();
        if (!divides_expo(qe, re)) break;
        for (std::size_t i = 0; i < nv; ++i) e[i] = re[i] - qe[i];
        LaurentPoly t = LaurentPoly::monomial(p.varset(), rc / qc, e);
        quot += t;
        rem -= t * qq;
    }
    if (!rem.is_zero()) {
        // report the remainder in the original (unshifted) coordinates
        Expo back(nv);
        for (std::size_t i = 0; i < nv; ++i) back[i] = -sp[i];
        auto witness = std::make_shared<LaurentPoly>(rem.shifted(back));
        throw DivisionError("inexact division, remainder " + witness->str(), witness);
    }
    // quotient picks up the monomial shift difference
    Expo back(nv);
    for (std::size_t i = 0; i < nv; ++i) back[i] = sq[i] - sp[i];
    return quot.shifted(back);
}

LaurentPoly substitute(const LaurentPoly& p,
                       const std::unordered_map<std::string, LaurentPoly>& bindings,
                       const VarSetPtr& target) {
    const std::size_t nv = p.varset() ? p.varset()->size() : 0;

    // image of each source variable, plus the worst negative exponent seen
    std::vector<LaurentPoly> image(nv);
    std::vector<std::int32_t> neg(nv, 0);
    for (std::size_t i = 0; i < nv; ++i) {
        const std::string& name = p.varset()->name(i);
        auto it = bindings.find(name);
        if (it != bindings.end()) {
            if (it->second.varset() != target && !(*it->second.varset() == *target))
                throw std::invalid_argument("binding for " + name + " not over target ambient set");
            image[i] = it->second;
        } else {
            image[i] = LaurentPoly::variable(target, name);
        }
        neg[i] = std::min<std::int32_t>(0, p.min_exponent(i));
    }

    // Common denominator: every term is multiplied by prod image[i]^(-neg[i])
    // so all exponents become nonnegative, then one exact division fixes it.
    LaurentPoly num = LaurentPoly::zero(target);
    for (const auto& [e, c] : p.terms()) {
        LaurentPoly t = LaurentPoly::constant(target, c);
        for (std::size_t i = 0; i < nv; ++i) {
            long k = static_cast<long>(e[i]) - neg[i];
            if (k != 0) t *= image[i].pow(k);
        }
        num += t;
    }
    LaurentPoly den = LaurentPoly::one(target);
    for (std::size_t i = 0; i < nv; ++i)
        if (neg[i] != 0) den *= image[i].pow(-static_cast<long>(neg[i]));
    return exact_div(num, den);
}

}  // namespace cambmin
