#include "cambmin/level0.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "cambmin/binomial.hpp"
#include "cambmin/symmetric.hpp"

namespace cambmin {

namespace {

std::string num_name(const char* stem, std::size_t i) { return stem + std::to_string(i + 1); }

void accumulate(L0Vec& out, const L0State& s, const LaurentPoly& c) {
    auto [it, fresh] = out.try_emplace(s, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) out.erase(it);
    }
}

std::int32_t var_slot(const VarSetPtr& vars, const std::string& name) {
    auto idx = vars->index(name);
    if (!idx) throw std::invalid_argument("missing ambient variable " + name);
    return static_cast<std::int32_t>(*idx);
}

}  // namespace

L0Vec rep_act(L0Gen gen, const LaurentPoly& arg, std::size_t n, const L0Vec& v) {
    if (n == 0 || n > 20) throw std::invalid_argument("rep_act: factor count out of range");
    const VarSetPtr& vs = arg.varset();
    L0Vec out;

    if (gen == L0Gen::kH1 || gen == L0Gen::kH2) {
        for (const auto& [st, coeff] : v) {
            long w = static_cast<long>(n) - 2 * std::popcount(st.lowered);
            if (gen == L0Gen::kH1) w = -w;
            accumulate(out, st, coeff * arg.pow(w));
        }
        return out;
    }

    const bool raising = (gen == L0Gen::kX2 || gen == L0Gen::kX1Bar);
    const bool looped = (gen == L0Gen::kX1 || gen == L0Gen::kX1Bar);
    const long shift = !looped ? 0 : (gen == L0Gen::kX1 ? 1 : -1);

    // factor weights: a_i t for the loop lowering, t/a_i for the loop
    // raising, plain t at the second node
    std::vector<LaurentPoly> weights;
    weights.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!looped) {
            weights.push_back(arg);
        } else {
            LaurentPoly ai = LaurentPoly::variable(vs, num_name("a", i));
            weights.push_back(gen == L0Gen::kX1 ? arg * ai : arg * ai.pow(-1));
        }
    }

    for (const auto& [st, coeff] : v) {
        // expand the tensor product of 2x2 unipotents factor by factor;
        // each applicable factor either stays put or flips once
        std::vector<std::pair<L0State, LaurentPoly>> parts{{st, coeff}};
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t sz = parts.size();
            for (std::size_t p = 0; p < sz; ++p) {
                const bool low = (parts[p].first.lowered >> i) & 1u;
                if (raising != low) continue;
                L0State ns = parts[p].first;
                ns.lowered ^= (1u << i);
                ns.u_exp += shift;
                parts.emplace_back(ns, parts[p].second * weights[i]);
            }
        }
        for (auto& [s, c] : parts) accumulate(out, s, c);
    }
    return out;
}

VarSetPtr minor_ambient(std::size_t n) {
    std::vector<std::string> names = {"tb1", "tb2", "h1", "h2", "t2", "t1"};
    for (std::size_t i = 0; i < n; ++i) names.push_back(num_name("a", i));
    return make_varset(std::move(names));
}

LaurentPoly minor_direct(std::size_t n) {
    if (n < 1 || n > 12) throw std::invalid_argument("minor_direct: n out of range");
    VarSetPtr vars = minor_ambient(n);
    L0Vec v{{L0State{}, LaurentPoly::one(vars)}};
    const std::pair<L0Gen, const char*> word[] = {
        {L0Gen::kX1, "t1"},    {L0Gen::kX2, "t2"},    {L0Gen::kH2, "h2"},
        {L0Gen::kH1, "h1"},    {L0Gen::kX2Bar, "tb2"}, {L0Gen::kX1Bar, "tb1"},
    };
    const long cap = static_cast<long>(n);
    for (const auto& [gen, name] : word) {
        v = rep_act(gen, LaurentPoly::variable(vars, name), n, v);
        for (const auto& [st, c] : v)
            if (st.u_exp < -cap || st.u_exp > cap)
                throw std::logic_error("minor_direct: loop exponent escaped its window");
    }
    auto it = v.find(L0State{});
    return it == v.end() ? LaurentPoly::zero(vars) : it->second;
}

LaurentPoly minor_term(const VarSetPtr& vars, std::size_t n, std::size_t m, std::size_t k) {
    if (k > m || m > n) throw std::invalid_argument("minor_term: need k <= m <= n");
    const auto lm = static_cast<std::int32_t>(m);
    const auto lk = static_cast<std::int32_t>(k);
    const auto ln = static_cast<std::int32_t>(n);
    Expo e(vars->size(), 0);
    e[var_slot(vars, "tb1")] = lm;
    e[var_slot(vars, "tb2")] = lm - lk;
    e[var_slot(vars, "h1")] = 2 * lk - ln;
    e[var_slot(vars, "h2")] = ln - 2 * lk;
    e[var_slot(vars, "t2")] = lm - lk;
    e[var_slot(vars, "t1")] = lm;
    return LaurentPoly::monomial(vars, 1, std::move(e));
}

LaurentPoly s_subsets(const VarSetPtr& vars, const std::vector<std::size_t>& avars,
                      std::size_t r) {
    const std::size_t n = avars.size();
    if (n == 0 || n > 10) throw std::invalid_argument("s_subsets: alphabet size out of range");
    if (r == 0) return LaurentPoly::one(vars);
    LaurentPoly out = LaurentPoly::zero(vars);
    if (2 * r > n) return out;
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t I = 0; I <= full; ++I) {
        if (std::popcount(I) != static_cast<int>(r)) continue;
        for (std::uint32_t J = 0; J <= full; ++J) {
            if (std::popcount(J) != static_cast<int>(r) || (I & J)) continue;
            Expo e(vars->size(), 0);
            for (std::size_t i = 0; i < n; ++i) {
                if ((I >> i) & 1u) ++e[avars[i]];
                if ((J >> i) & 1u) --e[avars[i]];
            }
            out.add_term(e, 1);
        }
    }
    return out;
}

LaurentPoly d0_numerator(const VarSetPtr& vars, const std::vector<std::size_t>& avars,
                         std::size_t m) {
    const std::size_t n = avars.size();
    if (n == 0 || n > 10) throw std::invalid_argument("d0_numerator: alphabet size out of range");
    if (m > n) throw std::invalid_argument("d0_numerator: subset size exceeds alphabet");
    LaurentPoly out = LaurentPoly::zero(vars);
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t I = 0; I <= full; ++I) {
        if (std::popcount(I) != static_cast<int>(m)) continue;
        for (std::uint32_t J = 0; J <= full; ++J) {
            if (std::popcount(J) != static_cast<int>(m)) continue;
            Expo e(vars->size(), 0);
            for (std::size_t i = 0; i < n; ++i) {
                if ((I >> i) & 1u) ++e[avars[i]];
                if (!((J >> i) & 1u)) ++e[avars[i]];
            }
            out.add_term(e, 1);
        }
    }
    return out;
}

LaurentPoly s_from_e(std::size_t n, const std::map<std::size_t, Rat>& e_values, std::size_t r) {
    if (n < 1 || n > 10) throw std::invalid_argument("s_from_e: n out of range");
    for (const auto& [l, val] : e_values) {
        if (l < 1 || l > n) throw std::invalid_argument("s_from_e: constraint index out of range");
        if (l == n && val == 0)
            throw std::invalid_argument("s_from_e: the top elementary value must be nonzero");
    }
    std::vector<std::string> enames;
    for (std::size_t l = 0; l < n; ++l) enames.push_back(num_name("e", l));
    VarSetPtr evars = make_varset(std::move(enames));
    if (2 * r > n) return LaurentPoly::zero(evars);

    // clear denominators: each subset-pair term times the full product is a
    // plain symmetric polynomial, which the e-basis descent can digest
    std::vector<std::string> anames;
    for (std::size_t i = 0; i < n; ++i) anames.push_back(num_name("a", i));
    VarSetPtr avars = make_varset(std::move(anames));
    LaurentPoly cleared = LaurentPoly::zero(avars);
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t I = 0; I <= full; ++I) {
        if (std::popcount(I) != static_cast<int>(r)) continue;
        for (std::uint32_t J = 0; J <= full; ++J) {
            if (std::popcount(J) != static_cast<int>(r) || (I & J)) continue;
            Expo e(n, 0);
            for (std::size_t i = 0; i < n; ++i) {
                if ((I >> i) & 1u) ++e[i];
                if (!((J >> i) & 1u)) ++e[i];
            }
            cleared.add_term(e, 1);
        }
    }

    LaurentPoly q = e_basis_reduce(cleared, evars);
    std::unordered_map<std::string, LaurentPoly> bind;
    for (const auto& [l, val] : e_values)
        bind[num_name("e", l - 1)] = LaurentPoly::constant(evars, val);
    LaurentPoly pinned = substitute(q, bind, evars);

    if (auto it = e_values.find(n); it != e_values.end()) return pinned * (Rat(1) / it->second);
    return pinned * LaurentPoly::variable(evars, num_name("e", n - 1), -1);
}

namespace {

template <typename Value>
Value d_sum(std::size_t n, std::size_t m, std::size_t k, const std::vector<Value>& s,
            const Value& zero) {
    if (k > m || m > n) throw std::invalid_argument("d_coeff: need k <= m <= n");
    const long ln = static_cast<long>(n);
    const long lm = static_cast<long>(m);
    const long lk = static_cast<long>(k);
    Value acc = zero;
    for (long r = 0; r <= lm && r < static_cast<long>(s.size()); ++r)
        acc += s[r] * binom_rat(lm - r, lk) * binom_rat(ln - 2 * r, lm - r);
    return acc;
}

}  // namespace

Rat d_coeff(std::size_t n, std::size_t m, std::size_t k, const std::vector<Rat>& s) {
    return d_sum(n, m, k, s, Rat(0));
}

LaurentPoly d_coeff(std::size_t n, std::size_t m, std::size_t k,
                    const std::vector<LaurentPoly>& s) {
    if (s.empty()) throw std::invalid_argument("d_coeff: empty coefficient table");
    return d_sum(n, m, k, s, LaurentPoly::zero(s.front().varset()));
}

std::vector<Rat> solve_s_from_d0(std::size_t n, const std::vector<Rat>& d0) {
    const std::size_t q = n / 2;
    if (n < 1 || d0.size() != q + 1)
        throw std::invalid_argument("solve_s_from_d0: need one target per row");
    std::vector<Rat> s(q + 1);
    for (std::size_t m = 0; m <= q; ++m) {
        Rat acc = d0[m];
        for (std::size_t r = 0; r < m; ++r)
            acc -= binom_rat(static_cast<long>(n) - 2 * static_cast<long>(r),
                             static_cast<long>(m) - static_cast<long>(r)) *
                   s[r];
        s[m] = acc;  // the diagonal entry binom(n-2m, 0) is 1
    }
    return s;
}

std::map<std::size_t, Rat> basis_e_values(BasisKind kind, std::size_t n) {
    std::map<std::size_t, Rat> out;
    switch (kind) {
        case BasisKind::kGreedy:
            for (std::size_t l = 1; l <= n / 2; ++l) out[l] = 0;
            break;
        case BasisKind::kTriangular:
            for (std::size_t l = 1; l <= n; ++l) out[l] = 1;
            break;
        case BasisKind::kGeneric: {
            Rat fact = 1;
            for (std::size_t l = 1; l <= n; ++l) {
                fact /= static_cast<long>(l);
                out[l] = fact;
            }
            break;
        }
    }
    return out;
}

Rat basis_coeff(BasisKind kind, std::size_t n, std::size_t m, std::size_t k) {
    if (n < 1 || k > m || m > n) throw std::invalid_argument("basis_coeff: need k <= m <= n");
    const long ln = static_cast<long>(n);
    const long lm = static_cast<long>(m);
    const long lk = static_cast<long>(k);
    switch (kind) {
        case BasisKind::kGreedy:
            if (k == 0) return (m == 0 || m == n) ? 1 : 0;
            return Rat(ln) / Rat(lk) * binom_rat(lm - 1, lk - 1) *
                   binom_rat(ln - lm + lk - 1, ln - lm);
        case BasisKind::kTriangular:
            return binom_rat(lm, lk) * binom_rat(ln - lm + lk, ln - lm);
        case BasisKind::kGeneric:
            return binom_rat(lm, lk) * binom_rat(ln, lm);
    }
    throw std::logic_error("basis_coeff: unreachable");
}

VarSetPtr basis_ambient() { return make_varset({"x1", "x2", "z1", "z2", "zb1", "zb2"}); }

LaurentPoly basis_term(const VarSetPtr& vars, std::size_t n, std::size_t m, std::size_t k) {
    if (k > m || m > n) throw std::invalid_argument("basis_term: need k <= m <= n");
    const auto lm = static_cast<std::int32_t>(m);
    const auto lk = static_cast<std::int32_t>(k);
    const auto ln = static_cast<std::int32_t>(n);
    Expo e(vars->size(), 0);
    e[var_slot(vars, "x1")] = 2 * (lm - lk) - ln;
    e[var_slot(vars, "x2")] = ln - 2 * lm;
    e[var_slot(vars, "z1")] = lm;
    e[var_slot(vars, "zb1")] = lm;
    e[var_slot(vars, "z2")] = lm - lk;
    e[var_slot(vars, "zb2")] = lm - lk;
    return LaurentPoly::monomial(vars, 1, std::move(e));
}

LaurentPoly basis_element(BasisKind kind, std::size_t n) {
    VarSetPtr vars = basis_ambient();
    LaurentPoly out = LaurentPoly::zero(vars);
    for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t k = 0; k <= m; ++k) {
            Rat c = basis_coeff(kind, n, m, k);
            if (c == 0) continue;
            out += basis_term(vars, n, m, k) * c;
        }
    return out;
}

LaurentPoly basis_element_from_e(const std::map<std::size_t, Rat>& e_values, std::size_t n) {
    std::vector<LaurentPoly> s;
    for (std::size_t r = 0; r <= n / 2; ++r) s.push_back(s_from_e(n, e_values, r));
    VarSetPtr vars = basis_ambient();
    LaurentPoly out = LaurentPoly::zero(vars);
    for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t k = 0; k <= m; ++k) {
            LaurentPoly d = d_coeff(n, m, k, s);
            if (!d.is_constant())
                throw std::domain_error(
                    "basis_element_from_e: free elementary values survive at (m,k)=(" +
                    std::to_string(m) + "," + std::to_string(k) + "): " + d.str());
            out += basis_term(vars, n, m, k) * d.constant_term();
        }
    return out;
}

std::vector<BasisCheck> verify_basis(BasisKind kind, std::size_t n) {
    std::map<std::size_t, Rat> ev = basis_e_values(kind, n);
    std::vector<LaurentPoly> s;
    for (std::size_t r = 0; r <= n / 2; ++r) s.push_back(s_from_e(n, ev, r));
    std::vector<BasisCheck> out;
    for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t k = 0; k <= m; ++k) {
            LaurentPoly d = d_coeff(n, m, k, s);
            Rat closed = basis_coeff(kind, n, m, k);
            BasisCheck check{m, k, d.is_constant(), false, ""};
            check.equal = check.constant && d.constant_term() == closed;
            if (!check.equal)
                check.detail = "coefficient mismatch at (m,k)=(" + std::to_string(m) + "," +
                               std::to_string(k) + "): table gives " + d.str() +
                               ", display gives " + rat_str(closed);
            out.push_back(std::move(check));
        }
    return out;
}

bool binomial_identity_check(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0 || b > a || c > a)
        throw std::invalid_argument("binomial_identity_check: need 0 <= b, c <= a");
    Int lhs = 0;
    for (long r = 0; r <= std::min(b, c); ++r) {
        Int term = binom(b, r) * binom(a - r, c - r);
        lhs += (r % 2 == 0) ? term : -term;
    }
    return lhs == binom(a - b, c);
}

}  // namespace cambmin
