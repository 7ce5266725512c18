#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cambmin/binomial.hpp"
#include "cambmin/level0.hpp"
#include "cambmin/symmetric.hpp"
#include "test_util.hpp"

using namespace cambmin;

namespace {

LaurentPoly V(const VarSetPtr& vs, const std::string& name, std::int32_t p = 1) {
    return LaurentPoly::variable(vs, name, p);
}

std::vector<std::size_t> a_slots(const VarSetPtr& vars, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(*vars->index("a" + std::to_string(i + 1)));
    return out;
}

// the closed double sum, with the subset sums kept symbolic
LaurentPoly display_sum(std::size_t n) {
    VarSetPtr vars = minor_ambient(n);
    std::vector<LaurentPoly> s;
    for (std::size_t r = 0; r <= n / 2; ++r) s.push_back(s_subsets(vars, a_slots(vars, n), r));
    LaurentPoly out = LaurentPoly::zero(vars);
    for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t k = 0; k <= m; ++k) out += minor_term(vars, n, m, k) * d_coeff(n, m, k, s);
    return out;
}

Rat lemma_s(BasisKind kind, std::size_t n, std::size_t r) {
    const long ln = static_cast<long>(n);
    const long lr = static_cast<long>(r);
    Rat sign = (r % 2 == 0) ? 1 : -1;
    switch (kind) {
        case BasisKind::kGreedy:
            return sign * Rat(ln) / Rat(ln - lr) * binom_rat(ln - lr, lr);
        case BasisKind::kTriangular:
            return sign * binom_rat(ln - lr, lr);
        case BasisKind::kGeneric:
            return r == 0 ? 1 : 0;
    }
    return 0;
}

}  // namespace

TEST_CASE("generator actions on small states") {
    VarSetPtr vs = minor_ambient(2);
    LaurentPoly one = LaurentPoly::one(vs);
    L0Vec top{{L0State{}, one}};

    // the raising letter at the plain node fixes the highest tensor state
    L0Vec fixed = rep_act(L0Gen::kX2, V(vs, "t2"), 2, top);
    CHECK(fixed.size() == 1);
    CHECK(fixed.at(L0State{}) == one);

    // the loop lowering branches each factor and shifts u once per flip
    VarSetPtr v1 = minor_ambient(1);
    L0Vec start{{L0State{}, LaurentPoly::one(v1)}};
    L0Vec low = rep_act(L0Gen::kX1, V(v1, "t1"), 1, start);
    CHECK(low.size() == 2);
    CHECK(low.at(L0State{0, 0}) == LaurentPoly::one(v1));
    CHECK(low.at(L0State{1, 1}) == V(v1, "a1") * V(v1, "t1"));

    L0Vec bottom{{L0State{0, 1}, LaurentPoly::one(v1)}};
    L0Vec raised = rep_act(L0Gen::kX1Bar, V(v1, "t1"), 1, bottom);
    CHECK(raised.at(L0State{0, 1}) == LaurentPoly::one(v1));
    CHECK(raised.at(L0State{-1, 0}) == V(v1, "a1", -1) * V(v1, "t1"));

    // torus weights count the sign balance and ignore the loop exponent
    L0Vec mixed{{L0State{3, 1}, one}};
    CHECK(rep_act(L0Gen::kH2, V(vs, "h2"), 2, mixed).at(L0State{3, 1}) == one);
    CHECK(rep_act(L0Gen::kH2, V(vs, "h2"), 2, top).at(L0State{}) == V(vs, "h2", 2));
    CHECK(rep_act(L0Gen::kH1, V(vs, "h1"), 2, top).at(L0State{}) == V(vs, "h1", -2));

    // two loop lowerings can push the exponent to the factor count
    L0Vec twice = rep_act(L0Gen::kX1, V(vs, "t2"), 2, rep_act(L0Gen::kX1, V(vs, "t1"), 2, top));
    CHECK(twice.count(L0State{2, 3}) == 1);

    CHECK_THROWS_AS(rep_act(L0Gen::kX1, V(vs, "t1"), 0, top), std::invalid_argument);
}

TEST_CASE("the letters form one parameter groups") {
    VarSetPtr vs = minor_ambient(2);
    L0Vec top{{L0State{}, LaurentPoly::one(vs)}};
    L0Vec mixed{{L0State{0, 1}, LaurentPoly::one(vs)}};
    LaurentPoly s = V(vs, "t1");
    LaurentPoly t = V(vs, "t2");

    CHECK(rep_act(L0Gen::kX1, s, 2, rep_act(L0Gen::kX1, t, 2, top)) ==
          rep_act(L0Gen::kX1, s + t, 2, top));
    CHECK(rep_act(L0Gen::kX1Bar, s, 2, rep_act(L0Gen::kX1Bar, t, 2, mixed)) ==
          rep_act(L0Gen::kX1Bar, s + t, 2, mixed));
    CHECK(rep_act(L0Gen::kX2, s, 2, rep_act(L0Gen::kX2, t, 2, mixed)) ==
          rep_act(L0Gen::kX2, s + t, 2, mixed));

    // torus conjugation rescales the loop letters by the Cartan pairing
    LaurentPoly h = V(vs, "h2");
    CHECK(rep_act(L0Gen::kH2, h, 2, rep_act(L0Gen::kX1, s, 2, mixed)) ==
          rep_act(L0Gen::kX1, s * h.pow(-2), 2, rep_act(L0Gen::kH2, h, 2, mixed)));
    LaurentPoly g = V(vs, "h1");
    CHECK(rep_act(L0Gen::kH1, g, 2, rep_act(L0Gen::kX1, s, 2, mixed)) ==
          rep_act(L0Gen::kX1, s * g.pow(2), 2, rep_act(L0Gen::kH1, g, 2, mixed)));
}

TEST_CASE("direct minor at the smallest rank") {
    LaurentPoly minor = minor_direct(1);
    VarSetPtr vs = minor.varset();
    LaurentPoly expect = V(vs, "h1", -1) * V(vs, "h2") +
                         V(vs, "tb1") * V(vs, "tb2") * V(vs, "h1", -1) * V(vs, "h2") *
                             V(vs, "t2") * V(vs, "t1") +
                         V(vs, "tb1") * V(vs, "h1") * V(vs, "h2", -1) * V(vs, "t1");
    CHECK(minor == expect);
}

TEST_CASE("the closed double sum matches the direct action") {
    for (std::size_t n = 1; n <= 4; ++n) CHECK(minor_direct(n) == display_sum(n));

    // the same comparison at random parameter points
    auto rng = testutil::make_rng();
    VarSetPtr vars = minor_ambient(4);
    LaurentPoly direct = minor_direct(4);
    LaurentPoly closed = display_sum(4);
    for (int trial = 0; trial < 20; ++trial) {
        std::unordered_map<std::string, LaurentPoly> bind;
        for (std::size_t i = 0; i < 4; ++i)
            bind["a" + std::to_string(i + 1)] =
                LaurentPoly::constant(vars, testutil::random_nonzero_rat(rng));
        CHECK(substitute(direct, bind, vars) == substitute(closed, bind, vars));
    }
}

TEST_CASE("subset sums over disjoint pairs") {
    VarSetPtr a2 = make_varset({"a1", "a2"});
    CHECK(s_subsets(a2, {0, 1}, 0) == LaurentPoly::one(a2));
    CHECK(s_subsets(a2, {0, 1}, 1) ==
          V(a2, "a1") * V(a2, "a2", -1) + V(a2, "a2") * V(a2, "a1", -1));

    VarSetPtr a3 = make_varset({"a1", "a2", "a3"});
    CHECK(s_subsets(a3, {0, 1, 2}, 2).is_zero());

    VarSetPtr a4 = make_varset({"a1", "a2", "a3", "a4"});
    LaurentPoly s42 = s_subsets(a4, {0, 1, 2, 3}, 2);
    CHECK(s42.term_count() == 6);
    CHECK(is_symmetric(s42, {0, 1, 2, 3}));
    CHECK(is_symmetric(s_subsets(a4, {0, 1, 2, 3}, 1), {0, 1, 2, 3}));
}

TEST_CASE("elementary constraints reproduce the closed subset sums") {
    for (std::size_t n = 2; n <= 5; ++n)
        for (BasisKind kind : {BasisKind::kGreedy, BasisKind::kTriangular, BasisKind::kGeneric}) {
            auto ev = basis_e_values(kind, n);
            for (std::size_t r = 1; r <= n / 2; ++r) {
                LaurentPoly s = s_from_e(n, ev, r);
                INFO("n=", n, " r=", r, " value ", s.str());
                CHECK(s.is_constant());
                CHECK(s.constant_term() == lemma_s(kind, n, r));
            }
        }

    CHECK(s_from_e(2, basis_e_values(BasisKind::kGreedy, 2), 1).constant_term() == -2);
    CHECK(s_from_e(4, basis_e_values(BasisKind::kTriangular, 4), 1).constant_term() == -3);
    CHECK(s_from_e(3, basis_e_values(BasisKind::kGeneric, 3), 1).is_zero());

    // cross-check one vanishing constraint by eliminating a variable directly
    VarSetPtr a2 = make_varset({"a1", "a2"});
    std::unordered_map<std::string, LaurentPoly> kill{{"a2", -V(a2, "a1")}};
    LaurentPoly pinched = substitute(s_subsets(a2, {0, 1}, 1), kill, a2);
    CHECK(pinched == LaurentPoly::constant(a2, -2));

    // and the whole pipeline against a concrete parameter point
    VarSetPtr a3 = make_varset({"a1", "a2", "a3"});
    std::unordered_map<std::string, LaurentPoly> point{
        {"a1", LaurentPoly::constant(a3, 2)},
        {"a2", LaurentPoly::constant(a3, -3)},
        {"a3", LaurentPoly::constant(a3, 5)},
    };
    std::map<std::size_t, Rat> evals;
    for (std::size_t l = 1; l <= 3; ++l) {
        LaurentPoly el = substitute(elementary_symmetric(a3, {0, 1, 2}, l), point, a3);
        evals[l] = el.constant_term();
    }
    LaurentPoly direct = substitute(s_subsets(a3, {0, 1, 2}, 1), point, a3);
    LaurentPoly routed = s_from_e(3, evals, 1);
    CHECK(routed.is_constant());
    CHECK(routed.constant_term() == direct.constant_term());
}

TEST_CASE("coefficient table entries") {
    std::vector<Rat> junk = {1, 7, -3};
    for (std::size_t n = 1; n <= 5; ++n) {
        CHECK(d_coeff(n, 0, 0, junk) == 1);
        CHECK(d_coeff(n, n, n, junk) == 1);
    }

    std::vector<Rat> greedy2 = {1, -2};
    CHECK(d_coeff(2, 1, 1, greedy2) == 2);
    CHECK(d_coeff(2, 1, 1, greedy2) == basis_coeff(BasisKind::kGreedy, 2, 1, 1));
    CHECK(d_coeff(2, 1, 0, greedy2) == 0);

    CHECK_THROWS_AS(d_coeff(2, 1, 2, junk), std::invalid_argument);
    CHECK_THROWS_AS(d_coeff(2, 3, 0, junk), std::invalid_argument);
}

TEST_CASE("alternating binomial sum") {
    CHECK(binomial_identity_check(3, 2, 1));
    CHECK(binomial_identity_check(5, 0, 3));
    for (long a = 0; a <= 12; ++a)
        for (long b = 0; b <= a; ++b)
            for (long c = 0; c <= a; ++c) CHECK(binomial_identity_check(a, b, c));
    CHECK_THROWS_AS(binomial_identity_check(2, 3, 1), std::invalid_argument);
}

TEST_CASE("unitriangular recovery of the subset sums") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const std::size_t q = n / 2;

        std::vector<Rat> vanish(q + 1, 0);
        vanish[0] = 1;
        std::vector<Rat> s = solve_s_from_d0(n, vanish);
        for (std::size_t r = 0; r <= q; ++r) CHECK(s[r] == lemma_s(BasisKind::kGreedy, n, r));

        std::vector<Rat> ones(q + 1, 1);
        s = solve_s_from_d0(n, ones);
        for (std::size_t r = 0; r <= q; ++r) CHECK(s[r] == lemma_s(BasisKind::kTriangular, n, r));

        std::vector<Rat> choose(q + 1);
        for (std::size_t m = 0; m <= q; ++m)
            choose[m] = binom_rat(static_cast<long>(n), static_cast<long>(m));
        s = solve_s_from_d0(n, choose);
        for (std::size_t r = 0; r <= q; ++r) CHECK(s[r] == lemma_s(BasisKind::kGeneric, n, r));
    }
    CHECK_THROWS_AS(solve_s_from_d0(4, {1, 0}), std::invalid_argument);
}

TEST_CASE("diagonal coefficients reduce to elementary products") {
    for (std::size_t n = 2; n <= 5; ++n) {
        std::vector<std::string> anames, enames;
        for (std::size_t i = 1; i <= n; ++i) {
            anames.push_back("a" + std::to_string(i));
            enames.push_back("e" + std::to_string(i));
        }
        VarSetPtr av = make_varset(anames);
        VarSetPtr ev = make_varset(enames);
        std::vector<std::size_t> slots(n);
        for (std::size_t i = 0; i < n; ++i) slots[i] = i;

        for (std::size_t m = 0; m <= n; ++m) {
            LaurentPoly reduced = e_basis_reduce(d0_numerator(av, slots, m), ev);
            LaurentPoly expect = (m == 0 || m == n)
                                     ? V(ev, "e" + std::to_string(n))
                                     : V(ev, "e" + std::to_string(m)) *
                                           V(ev, "e" + std::to_string(n - m));
            CHECK(reduced == expect);
        }
    }
}

TEST_CASE("displayed elements and their coefficients") {
    VarSetPtr xv = basis_ambient();

    LaurentPoly inner = V(xv, "zb1") * V(xv, "z1") * V(xv, "zb2") * V(xv, "z2") * V(xv, "x1", 2) +
                        V(xv, "zb1") * V(xv, "z1") + V(xv, "x2", 2);
    LaurentPoly unit = V(xv, "x1", -1) * V(xv, "x2", -1) * inner;
    CHECK(basis_element(BasisKind::kGeneric, 1) == unit);
    CHECK(basis_element(BasisKind::kGeneric, 2) == unit * unit);
    for (std::size_t n = 2; n <= 5; ++n)
        CHECK(basis_element(BasisKind::kGeneric, n) == unit.pow(static_cast<long>(n)));

    // all three kinds collapse to the same element at the lowest degree
    CHECK(basis_element(BasisKind::kGreedy, 1) == basis_element(BasisKind::kTriangular, 1));
    CHECK(basis_element(BasisKind::kGreedy, 1) == basis_element(BasisKind::kGeneric, 1));

    // every kind is pointed: coefficient one on the (n,n) corner monomial
    for (BasisKind kind : {BasisKind::kGreedy, BasisKind::kTriangular, BasisKind::kGeneric})
        for (std::size_t n = 1; n <= 5; ++n) {
            CHECK(basis_coeff(kind, n, n, n) == 1);
            LaurentPoly corner = basis_term(xv, n, n, n);
            CHECK(basis_element(kind, n).coeff(corner.leading().first) == 1);
        }

    CHECK(basis_coeff(BasisKind::kGreedy, 2, 1, 0) == 0);
    CHECK(basis_coeff(BasisKind::kGreedy, 2, 1, 1) == 2);
    CHECK(basis_coeff(BasisKind::kGreedy, 2, 2, 1) == 2);
    CHECK(basis_coeff(BasisKind::kTriangular, 2, 1, 0) == 1);
    CHECK(basis_coeff(BasisKind::kTriangular, 2, 1, 1) == 2);
    CHECK(basis_coeff(BasisKind::kGeneric, 2, 1, 0) == 2);
}

TEST_CASE("constrained tables match every display") {
    for (BasisKind kind : {BasisKind::kGreedy, BasisKind::kTriangular, BasisKind::kGeneric})
        for (std::size_t n = 1; n <= 5; ++n) {
            for (const BasisCheck& check : verify_basis(kind, n)) {
                INFO(check.detail);
                CHECK(check.constant);
                CHECK(check.equal);
            }
            CHECK(basis_element_from_e(basis_e_values(kind, n), n) == basis_element(kind, n));
        }
}

TEST_CASE("bad constraints are rejected or detected") {
    CHECK_THROWS_AS(s_from_e(2, {{2, Rat(0)}}, 1), std::invalid_argument);
    CHECK_THROWS_AS(s_from_e(2, {{3, Rat(1)}}, 1), std::invalid_argument);

    // an unconstrained family leaves free elementary values in the table
    CHECK_THROWS_AS(basis_element_from_e({}, 2), std::domain_error);

    auto skewed = basis_e_values(BasisKind::kTriangular, 2);
    skewed[2] = 2;
    CHECK(basis_element_from_e(skewed, 2) != basis_element(BasisKind::kTriangular, 2));
}

TEST_CASE("the minor realizes the displayed element on the chart") {
    // numeric subset sums at one parameter point
    VarSetPtr av = make_varset({"a1", "a2"});
    std::unordered_map<std::string, LaurentPoly> point{
        {"a1", LaurentPoly::constant(av, 2)},
        {"a2", LaurentPoly::constant(av, 3)},
    };
    std::vector<Rat> s;
    for (std::size_t r = 0; r <= 1; ++r)
        s.push_back(substitute(s_subsets(av, {0, 1}, r), point, av).constant_term());

    VarSetPtr xv = basis_ambient();
    LaurentPoly element = LaurentPoly::zero(xv);
    for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t k = 0; k <= m; ++k)
            element += basis_term(xv, 2, m, k) * d_coeff(2, m, k, s);

    // cluster coordinates of the rank two loop chart: the second frozen
    // pair carries the square of the first torus coordinate
    VarSetPtr mv = minor_ambient(2);
    std::unordered_map<std::string, LaurentPoly> chart{
        {"x1", V(mv, "h1")},
        {"x2", V(mv, "h2")},
        {"z1", V(mv, "t1") * V(mv, "h1")},
        {"zb1", V(mv, "tb1") * V(mv, "h1")},
        {"z2", V(mv, "t2") * V(mv, "h2") * V(mv, "h1", -2)},
        {"zb2", V(mv, "tb2") * V(mv, "h2") * V(mv, "h1", -2)},
    };
    LaurentPoly via_chart = substitute(element, chart, mv);

    std::unordered_map<std::string, LaurentPoly> apoint{
        {"a1", LaurentPoly::constant(mv, 2)},
        {"a2", LaurentPoly::constant(mv, 3)},
    };
    CHECK(via_chart == substitute(minor_direct(2), apoint, mv));
}
