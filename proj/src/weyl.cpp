#include "cambmin/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cambmin {

namespace {

std::string vec_str(const std::vector<long>& v) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ")";
    return out.str();
}

// weight-lattice action of s_i: only column i differs from the identity
IntMat gen_wt(const CartanData& cd, std::size_t i) {
    IntMat m = IntMat::identity(cd.n, 1, 0);
    for (std::size_t k = 0; k < cd.n; ++k) m.at(k, i) -= cd.a[k][i];
    return m;
}

// root-lattice action of s_i: only row i differs from the identity
IntMat gen_rt(const CartanData& cd, std::size_t i) {
    IntMat m = IntMat::identity(cd.n, 1, 0);
    for (std::size_t j = 0; j < cd.n; ++j) m.at(i, j) -= cd.a[i][j];
    return m;
}

// sign of a root-lattice vector that is known to be the image of a root
enum class RootSign { kPositive, kNegative, kZero };
RootSign root_sign(const std::vector<long>& v) {
    bool pos = false, neg = false;
    for (long x : v) {
        if (x > 0) pos = true;
        if (x < 0) neg = true;
    }
    if (pos && neg) throw std::logic_error("mixed-sign root image " + vec_str(v));
    if (pos) return RootSign::kPositive;
    if (neg) return RootSign::kNegative;
    return RootSign::kZero;
}

std::vector<long> column(const IntMat& m, std::size_t j) {
    std::vector<long> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
    return v;
}

std::vector<long> matrix_key(const IntMat& m) {
    std::vector<long> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

}  // namespace

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

Weight Weight::operator*(long k) const {
    Weight r = *this;
    for (auto& x : r.c) x *= k;
    return r;
}

bool Weight::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](long x) { return x == 0; });
}

std::string Weight::str() const { return vec_str(c); }

bool RootVec::all_nonneg() const {
    return std::all_of(c.begin(), c.end(), [](long x) { return x >= 0; });
}

bool RootVec::all_nonpos() const {
    return std::all_of(c.begin(), c.end(), [](long x) { return x <= 0; });
}

long RootVec::height() const {
    long h = 0;
    for (long x : c) h += x;
    return h;
}

std::string RootVec::str() const { return vec_str(c); }

Weight fundamental_weight(const CartanData& cd, std::size_t i) {
    Weight w{std::vector<long>(cd.n, 0)};
    w.c[i] = 1;
    return w;
}

RootVec simple_root(std::size_t n, std::size_t i) {
    RootVec r{std::vector<long>(n, 0)};
    r.c[i] = 1;
    return r;
}

Weight root_to_weight(const CartanData& cd, const RootVec& beta) {
    Weight w{std::vector<long>(cd.n, 0)};
    for (std::size_t i = 0; i < cd.n; ++i)
        for (std::size_t j = 0; j < cd.n; ++j) w.c[i] += cd.a[i][j] * beta.c[j];
    return w;
}

Weight reflect(const CartanData& cd, std::size_t i, const Weight& lam) {
    Weight r = lam;
    long li = lam.c[i];
    for (std::size_t k = 0; k < cd.n; ++k) r.c[k] -= cd.a[k][i] * li;
    return r;
}

RootVec reflect_root(const CartanData& cd, std::size_t i, const RootVec& beta) {
    long pairing = 0;  // <beta, alpha_i^vee>
    for (std::size_t j = 0; j < cd.n; ++j) pairing += cd.a[i][j] * beta.c[j];
    RootVec r = beta;
    r.c[i] -= pairing;
    return r;
}

WeylElement::WeylElement(const CartanData& cd)
    : cd_(&cd),
      wt_(IntMat::identity(cd.n, 1, 0)),
      rt_(IntMat::identity(cd.n, 1, 0)) {}

WeylElement WeylElement::identity(const CartanData& cd) { return WeylElement(cd); }

WeylElement WeylElement::from_word(const CartanData& cd, const std::vector<int>& word) {
    WeylElement w(cd);
    for (int j : word) {
        if (j < 0 || static_cast<std::size_t>(j) >= cd.n)
            throw std::invalid_argument("word letter out of range");
        w = w.times_gen(static_cast<std::size_t>(j));
    }
    return w;
}

bool WeylElement::right_descent(std::size_t i) const {
    // len decreases iff w(alpha_i) is a negative root
    return root_sign(column(rt_, i)) == RootSign::kNegative;
}

bool WeylElement::left_descent(std::size_t i) const {
    // left descents of w are right descents of w^{-1}
    IntMat inv = IntMat::identity(cd_->n, 1, 0);
    for (auto it = word_.rbegin(); it != word_.rend(); ++it)
        inv = inv * gen_rt(*cd_, static_cast<std::size_t>(*it));
    return root_sign(column(inv, i)) == RootSign::kNegative;
}

WeylElement WeylElement::times_gen(std::size_t i) const {
    WeylElement r(*cd_);
    r.wt_ = wt_ * gen_wt(*cd_, i);
    r.rt_ = rt_ * gen_rt(*cd_, i);
    if (!right_descent(i)) {
        r.word_ = word_;
        r.word_.push_back(static_cast<int>(i));
        r.canonicalize_word();
        return r;
    }
    // shortening: strong exchange guarantees deleting exactly one letter works
    for (std::size_t t = 0; t < word_.size(); ++t) {
        IntMat m = IntMat::identity(cd_->n, 1, 0);
        for (std::size_t k = 0; k < word_.size(); ++k) {
            if (k == t) continue;
            m = m * gen_wt(*cd_, static_cast<std::size_t>(word_[k]));
        }
        if (m == r.wt_) {
            r.word_ = word_;
            r.word_.erase(r.word_.begin() + static_cast<long>(t));
            r.canonicalize_word();
            return r;
        }
    }
    throw std::logic_error("exchange condition failed; word was not reduced");
}

void WeylElement::canonicalize_word() {
    // Rebuild the lex-least reduced word for the element the matrices
    // describe: repeatedly strip the smallest left descent.
    const std::size_t n = cd_->n;
    IntMat inv = IntMat::identity(n, 1, 0);
    for (auto it = word_.rbegin(); it != word_.rend(); ++it)
        inv = inv * gen_rt(*cd_, static_cast<std::size_t>(*it));

    std::vector<int> out;
    out.reserve(word_.size());
    for (std::size_t step = 0; step < word_.size(); ++step) {
        bool found = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (root_sign(column(inv, j)) == RootSign::kNegative) {
                out.push_back(static_cast<int>(j));
                inv = inv * gen_rt(*cd_, j);  // (s_j w)^{-1} = w^{-1} s_j
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("canonicalization ran out of descents early");
    }
    word_ = std::move(out);
}

Weight WeylElement::act(const Weight& lam) const {
    Weight r{std::vector<long>(cd_->n, 0)};
    for (std::size_t i = 0; i < cd_->n; ++i)
        for (std::size_t j = 0; j < cd_->n; ++j) r.c[i] += wt_.at(i, j) * lam.c[j];
    return r;
}

RootVec WeylElement::act(const RootVec& beta) const {
    RootVec r{std::vector<long>(cd_->n, 0)};
    for (std::size_t i = 0; i < cd_->n; ++i)
        for (std::size_t j = 0; j < cd_->n; ++j) r.c[i] += rt_.at(i, j) * beta.c[j];
    return r;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    WeylElement r = *this;
    for (int j : o.word_) r = r.times_gen(static_cast<std::size_t>(j));
    return r;
}

WeylElement WeylElement::inverse() const {
    std::vector<int> rev(word_.rbegin(), word_.rend());
    return from_word(*cd_, rev);
}

std::string WeylElement::word_str() const {
    if (word_.empty()) return "e";
    std::ostringstream out;
    for (std::size_t k = 0; k < word_.size(); ++k) {
        if (k) out << ".";
        out << "s" << (word_[k] + 1);
    }
    return out.str();
}

std::vector<WeylElement> enumerate_weyl(const CartanData& cd, std::size_t bound) {
    std::vector<WeylElement> all;
    std::set<std::vector<long>> seen;
    std::vector<WeylElement> frontier{WeylElement::identity(cd)};
    seen.insert(matrix_key(frontier[0].weight_action()));
    all.push_back(frontier[0]);
    for (std::size_t len = 1; len <= bound && !frontier.empty(); ++len) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            for (std::size_t j = 0; j < cd.n; ++j) {
                if (w.right_descent(j)) continue;
                WeylElement v = w.times_gen(j);
                if (seen.insert(matrix_key(v.weight_action())).second) {
                    next.push_back(v);
                    all.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    return all;
}

DominantConjugate dominant_conjugate(const CartanData& cd, const Weight& lam, std::size_t cap) {
    Weight cur = lam;
    std::vector<int> word;
    for (std::size_t step = 0; step <= cap; ++step) {
        std::size_t i = 0;
        for (; i < cd.n; ++i)
            if (cur.c[i] < 0) break;
        if (i == cd.n) return {cur, WeylElement::from_word(cd, word)};
        cur = reflect(cd, i, cur);
        word.push_back(static_cast<int>(i));
    }
    throw std::runtime_error("dominant conjugate walk did not terminate (infinite orbit?)");
}

long root_form(const CartanData& cd, const RootVec& x, const RootVec& y) {
    long acc = 0;
    for (std::size_t i = 0; i < cd.n; ++i)
        for (std::size_t j = 0; j < cd.n; ++j) acc += x.c[i] * cd.d[i] * cd.a[i][j] * y.c[j];
    return acc;
}

Rat weight_form(const CartanData& cd, const Weight& x, const Weight& y) {
    // root coordinates of omega_j: solve A r = e_j, then (x,y) = sum over
    // pairs via (omega_i, alpha_k) = d_k delta_ik
    const std::size_t n = cd.n;
    Mat<Rat> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = cd.a[i][j];
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (y.c[j] == 0) continue;
        std::vector<Rat> e(n, Rat(0));
        e[j] = 1;
        LinSolve s = solve_rat(a, e);
        if (!s.consistent || !s.unique)
            throw std::invalid_argument("weight form needs an invertible Cartan matrix");
        for (std::size_t k = 0; k < n; ++k) acc += Rat(x.c[k]) * Rat(cd.d[k]) * s.x[k] * Rat(y.c[j]);
    }
    return acc;
}

std::vector<RootVec> positive_roots_up_to_height(const CartanData& cd, long bound) {
    std::set<std::vector<long>> seen;
    std::vector<RootVec> out, frontier;
    for (std::size_t i = 0; i < cd.n; ++i) {
        RootVec r = simple_root(cd.n, i);
        if (r.height() <= bound && seen.insert(r.c).second) {
            out.push_back(r);
            frontier.push_back(r);
        }
    }
    while (!frontier.empty()) {
        std::vector<RootVec> next;
        for (const auto& beta : frontier) {
            for (std::size_t i = 0; i < cd.n; ++i) {
                RootVec g = reflect_root(cd, i, beta);
                if (!g.all_nonneg() || g.height() > bound) continue;
                if (seen.insert(g.c).second) {
                    out.push_back(g);
                    next.push_back(g);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void check_coxeter_word(const CartanData& cd, const std::vector<int>& cox) {
    if (cox.size() != cd.n) throw std::invalid_argument("Coxeter word has wrong length");
    std::vector<bool> seen(cd.n, false);
    for (int j : cox) {
        if (j < 0 || static_cast<std::size_t>(j) >= cd.n)
            throw std::invalid_argument("Coxeter word letter out of range");
        if (seen[j]) throw std::invalid_argument("Coxeter word repeats a letter");
        seen[j] = true;
    }
}

Weight nu_c(const CartanData& cd, const std::vector<int>& cox, const RootVec& beta) {
    check_coxeter_word(cd, cox);
    std::vector<std::size_t> pos(cd.n, 0);
    for (std::size_t p = 0; p < cox.size(); ++p) pos[cox[p]] = p;
    Weight out{std::vector<long>(cd.n, 0)};
    for (std::size_t i = 0; i < cd.n; ++i) {
        long coeff = beta.c[i];
        for (std::size_t j = 0; j < cd.n; ++j) {
            if (pos[j] < pos[i] && beta.c[j] > 0) coeff += cd.a[i][j] * beta.c[j];
        }
        out.c[i] = -coeff;
    }
    return out;
}

}  // namespace cambmin
