#include "cambmin/symmetric.hpp"

#include <algorithm>

namespace cambmin {

LaurentPoly elementary_symmetric(const VarSetPtr& vars, const std::vector<std::size_t>& alphabet,
                                 std::size_t k) {
    const std::size_t n = alphabet.size();
    if (k > n) return LaurentPoly::zero(vars);
    // iterate k-subsets of the alphabet
    LaurentPoly out = LaurentPoly::zero(vars);
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Expo e(vars->size(), 0);
        for (std::size_t i = 0; i < k; ++i) e[alphabet[pick[i]]] = 1;
        out.add_term(e, 1);
        if (k == 0) break;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

namespace {

LaurentPoly swap_vars(const LaurentPoly& p, std::size_t i, std::size_t j) {
    LaurentPoly out(p.varset());
    for (const auto& [e, c] : p.terms()) {
        Expo f = e;
        std::swap(f[i], f[j]);
        out.add_term(f, c);
    }
    return out;
}

// lex on the alphabet positions only (plain, not graded)
bool lex_less(const Expo& a, const Expo& b, const std::vector<std::size_t>& alphabet) {
    for (auto v : alphabet) {
        if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
}

}  // namespace

bool is_symmetric(const LaurentPoly& p, const std::vector<std::size_t>& alphabet) {
    for (std::size_t i = 0; i + 1 < alphabet.size(); ++i) {
        if (swap_vars(p, alphabet[i], alphabet[i + 1]) != p) return false;
    }
    return true;
}

LaurentPoly e_basis_reduce(const LaurentPoly& p, const VarSetPtr& evars) {
    const VarSetPtr& avars = p.varset();
    const std::size_t n = avars->size();
    std::vector<std::size_t> alphabet(n);
    for (std::size_t i = 0; i < n; ++i) alphabet[i] = i;
    if (evars->size() < n) throw std::invalid_argument("e-variable set too small");
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [e, c] : p.terms())
            if (e[i] < 0) throw std::invalid_argument("e_basis_reduce needs a genuine polynomial");
    }
    if (!is_symmetric(p, alphabet)) throw std::invalid_argument("polynomial is not symmetric");

    // cache the expanded e_k
    std::vector<LaurentPoly> elem(n + 1);
    for (std::size_t k = 1; k <= n; ++k) elem[k] = elementary_symmetric(avars, alphabet, k);

    LaurentPoly rest = p;
    LaurentPoly out = LaurentPoly::zero(evars);
    while (!rest.is_zero()) {
        // lex-leading term
        auto lead = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it) {
            if (lex_less(lead->first, it->first, alphabet)) lead = it;
        }
        Expo lam = lead->first;
        Rat c = lead->second;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (lam[i] < lam[i + 1])
                throw std::logic_error("lex-leading exponent of symmetric polynomial not sorted");
        }
        // e1^(l1-l2) ... e(n-1)^(l(n-1)-ln) en^(ln)
        Expo ee(evars->size(), 0);
        LaurentPoly prod = LaurentPoly::constant(avars, c);
        for (std::size_t i = 0; i < n; ++i) {
            long ex = lam[i] - (i + 1 < n ? lam[i + 1] : 0);
            ee[i] = static_cast<std::int32_t>(ex);
            if (ex > 0) prod *= elem[i + 1].pow(ex);
        }
        out.add_term(ee, c);
        rest -= prod;
    }
    return out;
}

LaurentPoly expand_e_poly(const LaurentPoly& q, const VarSetPtr& avars) {
    const std::size_t n = avars->size();
    std::vector<std::size_t> alphabet(n);
    for (std::size_t i = 0; i < n; ++i) alphabet[i] = i;
    if (q.varset()->size() < n) throw std::invalid_argument("e-poly over too few variables");
    std::vector<LaurentPoly> elem(n + 1);
    for (std::size_t k = 1; k <= n; ++k) elem[k] = elementary_symmetric(avars, alphabet, k);

    LaurentPoly out = LaurentPoly::zero(avars);
    for (const auto& [e, c] : q.terms()) {
        LaurentPoly t = LaurentPoly::constant(avars, c);
        for (std::size_t i = 0; i < q.varset()->size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= n || e[i] < 0)
                throw std::invalid_argument("e-poly uses an index outside e1..en");
            t *= elem[i + 1].pow(e[i]);
        }
        out += t;
    }
    return out;
}

}  // namespace cambmin
