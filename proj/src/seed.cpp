#include "cambmin/seed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cambmin {

namespace {

std::vector<std::string> seed_key(const Seed& s) {
    std::vector<std::string> key;
    key.reserve(s.vars.size());
    for (const LaurentPoly& v : s.vars) key.push_back(v.str());
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

ClusterModel::ClusterModel(const CartanData& cd, std::vector<int> cox)
    : cd_(cd), cox_(std::move(cox)), b0_(3 * cd.n, cd.n) {
    check_coxeter_word(cd_, cox_);
    const std::size_t n = cd_.n;

    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("z" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) names.push_back("zb" + std::to_string(i));
    vars_ = make_varset(names);

    // b_ij = a_ij when j comes before i in the word, -a_ij when i comes first
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < cox_.size(); ++p) pos[cox_[p]] = p;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            b0_.at(i, j) = pos[j] < pos[i] ? cd_.a[i][j] : -cd_.a[i][j];
        }
    for (std::size_t i = 0; i < n; ++i) {
        b0_.at(n + i, i) = 1;
        b0_.at(2 * n + i, i) = 1;
    }

    degree_.reserve(3 * n);
    for (std::size_t i = 0; i < n; ++i) degree_.push_back(fundamental_weight(cd_, i));
    for (std::size_t j = 0; j < n; ++j) {
        Weight d{std::vector<long>(n, 0)};
        for (std::size_t i = 0; i < n; ++i) d.c[i] = -b0_.at(i, j);
        degree_.push_back(d);
    }
    for (std::size_t j = 0; j < n; ++j) degree_.push_back(Weight{std::vector<long>(n, 0)});
}

std::string ClusterModel::x_name(std::size_t i) const { return "x" + std::to_string(i + 1); }
std::string ClusterModel::z_name(std::size_t i) const { return "z" + std::to_string(i + 1); }
std::string ClusterModel::zb_name(std::size_t i) const { return "zb" + std::to_string(i + 1); }

Seed ClusterModel::initial() const {
    Seed s{b0_, {}, {}, {}};
    for (std::size_t i = 0; i < cd_.n; ++i) {
        s.vars.push_back(LaurentPoly::variable(vars_, x_name(i)));
        s.gvecs.push_back(fundamental_weight(cd_, i));
    }
    return s;
}

Seed ClusterModel::mutate(const Seed& s, std::size_t k) const {
    const std::size_t n = cd_.n;
    if (k >= n) throw std::invalid_argument("mutation index out of range");

    Seed r;
    r.path = s.path;
    r.path.push_back(static_cast<int>(k));

    // matrix mutation over all rows, frozen blocks included
    r.ext = Mat<int>(3 * n, n);
    for (std::size_t i = 0; i < 3 * n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int b = s.ext.at(i, j);
            if (i == k || j == k) {
                r.ext.at(i, j) = -b;
            } else {
                int bik = s.ext.at(i, k), bkj = s.ext.at(k, j);
                int corr = bik * bkj > 0 ? (bik > 0 ? bik * bkj : -bik * bkj) : 0;
                r.ext.at(i, j) = b + corr;
            }
        }

    // exchange binomial from column k of the extended matrix
    auto row_gen = [&](std::size_t row) {
        if (row < n) return s.vars[row];
        if (row < 2 * n) return LaurentPoly::variable(vars_, z_name(row - n));
        return LaurentPoly::variable(vars_, zb_name(row - 2 * n));
    };
    LaurentPoly plus = LaurentPoly::one(vars_), minus = LaurentPoly::one(vars_);
    for (std::size_t row = 0; row < 3 * n; ++row) {
        int b = s.ext.at(row, k);
        if (b > 0) plus *= row_gen(row).pow(b);
        if (b < 0) minus *= row_gen(row).pow(-b);
    }

    r.vars = s.vars;
    r.vars[k] = exact_div(plus + minus, s.vars[k]);
    r.gvecs = s.gvecs;
    r.gvecs[k] = g_vector(r.vars[k]);
    return r;
}

Weight ClusterModel::g_vector(const LaurentPoly& var) const {
    if (var.is_zero()) throw std::logic_error("zero polynomial has no multidegree");
    std::optional<Weight> deg;
    for (const auto& [e, c] : var.terms()) {
        Weight d{std::vector<long>(cd_.n, 0)};
        for (std::size_t v = 0; v < degree_.size(); ++v)
            if (e[v] != 0) d = d + degree_[v] * e[v];
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            throw std::logic_error("inhomogeneous cluster variable: " + var.str());
        }
    }
    return *deg;
}

std::vector<Seed> ClusterModel::closure(std::size_t depth) const {
    std::vector<Seed> all{initial()};
    std::vector<Seed> frontier = all;
    std::set<std::vector<std::string>> seen{seed_key(all[0])};
    for (std::size_t d = 1; d <= depth && !frontier.empty(); ++d) {
        std::vector<Seed> next;
        for (const Seed& s : frontier) {
            for (std::size_t k = 0; k < cd_.n; ++k) {
                Seed m = mutate(s, k);
                if (!seen.insert(seed_key(m)).second) continue;
                next.push_back(m);
                all.push_back(std::move(m));
            }
        }
        frontier = std::move(next);
    }
    return all;
}

std::optional<ClusterMonomial> ClusterModel::find_monomial(const Weight& lam,
                                                           std::size_t depth) const {
    const std::size_t n = cd_.n;
    for (const Seed& s : closure(depth)) {
        Mat<Rat> g(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) g.at(i, j) = s.gvecs[j].c[i];
        std::vector<Rat> rhs(n);
        for (std::size_t i = 0; i < n; ++i) rhs[i] = lam.c[i];
        LinSolve sol = solve_rat(g, rhs);
        if (!sol.consistent || !sol.unique) continue;
        bool good = true;
        for (const Rat& x : sol.x)
            if (x < 0 || x.get_den() != 1) {
                good = false;
                break;
            }
        if (!good) continue;

        ClusterMonomial m{lam, LaurentPoly::one(vars_), {}, s};
        for (std::size_t i = 0; i < n; ++i) {
            long e = sol.x[i].get_num().get_si();
            if (e == 0) continue;
            m.value *= s.vars[i].pow(e);
            m.exponents.emplace_back(i, e);
        }
        return m;
    }
    return std::nullopt;
}

bool ClusterModel::opposite_seed_check() const {
    // the sequence runs through the letters of c from last to first; for the
    // word (s1 .. sn) this is the familiar (n, n-1, ..., 1)
    Seed s = initial();
    for (auto it = cox_.rbegin(); it != cox_.rend(); ++it)
        s = mutate(s, static_cast<std::size_t>(*it));
    std::vector<Weight> got = s.gvecs;
    std::sort(got.begin(), got.end());
    std::vector<Weight> want;
    for (std::size_t i = 0; i < cd_.n; ++i) want.push_back(fundamental_weight(cd_, i) * -1);
    std::sort(want.begin(), want.end());
    return got == want;
}

bool has_monomial_coefficients(const ClusterModel& model, const LaurentPoly& var) {
    const std::size_t n = model.rank();
    std::map<std::vector<std::int32_t>, int> by_x;
    for (const auto& [e, c] : var.terms()) {
        for (std::size_t v = n; v < 3 * n; ++v)
            if (e[v] < 0) return false;  // frozens must not be inverted
        std::vector<std::int32_t> xpart(e.begin(), e.begin() + n);
        if (++by_x[xpart] > 1) return false;
    }
    return true;
}

}  // namespace cambmin
