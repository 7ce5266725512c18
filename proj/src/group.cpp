#include "cambmin/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>

#include "cambmin/seed.hpp"

namespace cambmin {

namespace {

std::string num_name(const char* stem, std::size_t i) {
    return std::string(stem) + std::to_string(i + 1);
}

bool is_trivial_torus(const LaurentPoly& arg) {
    return arg.is_constant() && arg.constant_term() == 1;
}

std::size_t subset_index(const std::vector<std::vector<std::size_t>>& subs,
                         const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (subs[i] == s) return i;
    throw std::invalid_argument("not a subset of the expected size");
}

// Iterates tuples of subset indices, one per tensor factor.
bool next_tuple(std::vector<std::size_t>& idx, const std::vector<std::size_t>& radix) {
    for (std::size_t f = idx.size(); f-- > 0;) {
        if (++idx[f] < radix[f]) return true;
        idx[f] = 0;
    }
    return false;
}

}  // namespace

bool Letter::operator==(const Letter& o) const {
    return kind == o.kind && i == o.i && arg == o.arg;
}

Letter upper(std::size_t i, LaurentPoly t) { return Letter{LetterKind::kUpper, i, std::move(t)}; }
Letter lower(std::size_t i, LaurentPoly t) { return Letter{LetterKind::kLower, i, std::move(t)}; }
Letter torus(std::size_t i, LaurentPoly u) { return Letter{LetterKind::kTorus, i, std::move(u)}; }
Letter lift(std::size_t i) { return Letter{LetterKind::kLift, i, LaurentPoly()}; }
Letter lift_inv(std::size_t i) { return Letter{LetterKind::kLiftInv, i, LaurentPoly()}; }

GroupWord lift_word(const WeylElement& w, std::size_t index_offset) {
    GroupWord out;
    for (int j : w.word()) out.push_back(lift(index_offset + static_cast<std::size_t>(j)));
    return out;
}

GroupWord lift_word_inverse(const WeylElement& w, std::size_t index_offset) {
    GroupWord out;
    const std::vector<int>& word = w.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out.push_back(lift_inv(index_offset + static_cast<std::size_t>(*it)));
    return out;
}

GroupWord simplify_torus(const GroupWord& word) {
    GroupWord out;
    for (const Letter& l : word) {
        if (l.kind == LetterKind::kTorus) {
            if (!out.empty() && out.back().kind == LetterKind::kTorus && out.back().i == l.i) {
                out.back().arg = out.back().arg * l.arg;
                if (is_trivial_torus(out.back().arg)) out.pop_back();
                continue;
            }
            if (is_trivial_torus(l.arg)) continue;
        }
        out.push_back(l);
    }
    return out;
}

GroupWord torus_to_front(const CartanData& cd, const GroupWord& word) {
    GroupWord out;
    std::size_t torus_end = 0;
    for (const Letter& l : word) {
        switch (l.kind) {
            case LetterKind::kLift:
            case LetterKind::kLiftInv:
                throw std::invalid_argument("cannot relocate torus letters across lifts");
            case LetterKind::kTorus: {
                // x_j(p) u^a = u^a x_j(u^{-a_ij} p), and the mirrored sign
                // on the lower side
                for (std::size_t p = torus_end; p < out.size(); ++p) {
                    Letter& c = out[p];
                    long a = cd.entry(l.i, c.i);
                    if (c.kind == LetterKind::kUpper)
                        c.arg = c.arg * l.arg.pow(-a);
                    else
                        c.arg = c.arg * l.arg.pow(a);
                }
                out.insert(out.begin() + static_cast<std::ptrdiff_t>(torus_end), l);
                ++torus_end;
                break;
            }
            default:
                out.push_back(l);
        }
    }
    return out;
}

GroupPoint realize(const GroupWord& word, std::size_t m, const VarSetPtr& vars) {
    if (m < 2) throw std::invalid_argument("matrix size must be at least 2");
    const LaurentPoly zero = LaurentPoly::zero(vars);
    const LaurentPoly one = LaurentPoly::one(vars);
    Mat<LaurentPoly> g = Mat<LaurentPoly>::identity(m, one, zero);
    for (const Letter& l : word) {
        if (l.i + 1 >= m) throw std::invalid_argument("letter index out of range");
        if (l.arg.varset() && !(*l.arg.varset() == *vars))
            throw std::invalid_argument("letter parameter over a different ambient set");
        Mat<LaurentPoly> f = Mat<LaurentPoly>::identity(m, one, zero);
        switch (l.kind) {
            case LetterKind::kUpper:
                f.at(l.i, l.i + 1) = l.arg;
                break;
            case LetterKind::kLower:
                f.at(l.i + 1, l.i) = l.arg;
                break;
            case LetterKind::kTorus:
                f.at(l.i, l.i) = l.arg;
                f.at(l.i + 1, l.i + 1) = l.arg.unit_inverse();
                break;
            case LetterKind::kLift:
                f.at(l.i, l.i) = zero;
                f.at(l.i + 1, l.i + 1) = zero;
                f.at(l.i, l.i + 1) = -one;
                f.at(l.i + 1, l.i) = one;
                break;
            case LetterKind::kLiftInv:
                f.at(l.i, l.i) = zero;
                f.at(l.i + 1, l.i + 1) = zero;
                f.at(l.i, l.i + 1) = one;
                f.at(l.i + 1, l.i) = -one;
                break;
        }
        g = g * f;
    }
    if (det_laplace(g) != one) throw std::logic_error("unit determinant violated");
    return GroupPoint{m, vars, std::move(g), word};
}

void require_type_a(const CartanData& cd) {
    cd.validate();
    for (std::size_t i = 0; i < cd.n; ++i)
        for (std::size_t j = 0; j < cd.n; ++j) {
            int expected = i == j ? 2 : 0;
            if (i + 1 == j || j + 1 == i) expected = -1;
            if (cd.a[i][j] != expected)
                throw std::invalid_argument("Cartan matrix is not the simply-laced chain");
        }
}

Shuffle standard_shuffle(std::size_t n) {
    Shuffle s(n, SlotKind::kBarred);
    s.push_back(SlotKind::kTorus);
    s.insert(s.end(), n, SlotKind::kUnbarred);
    return s;
}

Shuffle flipped_shuffle(std::size_t n) {
    Shuffle s(n, SlotKind::kUnbarred);
    s.push_back(SlotKind::kTorus);
    s.insert(s.end(), n, SlotKind::kBarred);
    return s;
}

GroupPoint generic_point(const CartanData& cd, const std::vector<int>& cox,
                         const Shuffle& shuffle, const std::vector<std::string>& extra_vars) {
    require_type_a(cd);
    check_coxeter_word(cd, cox);
    const std::size_t n = cd.n;
    std::size_t barred = 0, unbarred = 0, torus_slots = 0;
    for (SlotKind s : shuffle) {
        if (s == SlotKind::kBarred) ++barred;
        if (s == SlotKind::kUnbarred) ++unbarred;
        if (s == SlotKind::kTorus) ++torus_slots;
    }
    if (barred != n || unbarred != n || torus_slots != 1)
        throw std::invalid_argument("malformed chart pattern");

    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back(num_name("tb", j));
    for (std::size_t j = 0; j < n; ++j) names.push_back(num_name("h", j));
    for (std::size_t j = 0; j < n; ++j) names.push_back(num_name("t", j));
    names.insert(names.end(), extra_vars.begin(), extra_vars.end());
    VarSetPtr vars = make_varset(names);

    GroupWord w;
    std::size_t bpos = 0, upos = 0;
    for (SlotKind s : shuffle) {
        switch (s) {
            case SlotKind::kBarred: {
                auto j = static_cast<std::size_t>(cox[bpos++]);
                w.push_back(lower(j, LaurentPoly::variable(vars, num_name("tb", j))));
                break;
            }
            case SlotKind::kUnbarred: {
                auto j = static_cast<std::size_t>(cox[n - 1 - upos++]);
                w.push_back(upper(j, LaurentPoly::variable(vars, num_name("t", j))));
                break;
            }
            case SlotKind::kTorus:
                for (std::size_t j = 0; j < n; ++j)
                    w.push_back(torus(j, LaurentPoly::variable(vars, num_name("h", j))));
                break;
        }
    }
    return realize(w, n + 1, vars);
}

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t m, std::size_t k) {
    if (m > 20) throw std::invalid_argument("ground set too large");
    if (k < 1 || k > m) throw std::invalid_argument("wedge degree out of range");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
        if (std::popcount(mask) != static_cast<int>(k)) continue;
        std::vector<std::size_t> s;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::size_t(1) << b)) s.push_back(b);
        out.push_back(std::move(s));
    }
    return out;
}

Mat<LaurentPoly> wedge_matrix(const GroupPoint& g, std::size_t k) {
    if (k < 1 || k + 1 > g.m) throw std::invalid_argument("wedge degree out of range");
    const auto subs = colex_subsets(g.m, k);
    Mat<LaurentPoly> w(subs.size(), subs.size(), LaurentPoly::zero(g.vars));
    for (std::size_t i = 0; i < subs.size(); ++i)
        for (std::size_t j = 0; j < subs.size(); ++j)
            w.at(i, j) = matrix_minor(g.mat, subs[i], subs[j]);
    return w;
}

LaurentPoly principal_minor(const GroupPoint& g, std::size_t i, std::size_t offset) {
    if (i < 1 || offset + i > g.m) throw std::invalid_argument("minor order out of range");
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < i; ++r) rows.push_back(offset + r);
    return matrix_minor(g.mat, rows, rows);
}

LaurentPoly minor_uv(const GroupPoint& g, std::size_t i, const WeylElement& u,
                     const WeylElement& v, std::size_t offset) {
    if (i < 1 || offset + i > g.m) throw std::invalid_argument("minor order out of range");
    GroupPoint ul = realize(lift_word_inverse(u, offset), g.m, g.vars);
    GroupPoint vl = realize(lift_word(v, offset), g.m, g.vars);
    Mat<LaurentPoly> conj = ul.mat * g.mat * vl.mat;
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < i; ++r) rows.push_back(offset + r);
    return matrix_minor(conj, rows, rows);
}

TensorModel tensor_model(std::size_t m, const Weight& mu) {
    if (mu.c.size() + 1 != m) throw std::invalid_argument("weight rank mismatch");
    TensorModel model;
    model.m = m;
    for (std::size_t i = 0; i < mu.c.size(); ++i) {
        if (mu.c[i] < 0) throw std::invalid_argument("top weight must be dominant");
        for (long r = 0; r < mu.c[i]; ++r) model.degrees.push_back(i + 1);
    }
    return model;
}

Weight subset_weight(std::size_t m, const std::vector<std::size_t>& subset) {
    Weight w;
    w.c.assign(m - 1, 0);
    for (std::size_t e : subset) {
        if (e >= m) throw std::invalid_argument("subset element out of range");
        if (e < m - 1) w.c[e] += 1;
        if (e > 0) w.c[e - 1] -= 1;
    }
    return w;
}

Weight tuple_weight(const TensorModel& model, const std::vector<std::vector<std::size_t>>& tuple) {
    if (tuple.size() != model.degrees.size())
        throw std::invalid_argument("tuple length does not match the factor count");
    Weight w;
    w.c.assign(model.m - 1, 0);
    for (std::size_t f = 0; f < tuple.size(); ++f) {
        if (tuple[f].size() != model.degrees[f])
            throw std::invalid_argument("tuple entry has the wrong subset size");
        w = w + subset_weight(model.m, tuple[f]);
    }
    return w;
}

std::size_t weight_multiplicity(const TensorModel& model, const Weight& lam) {
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> subs;
    for (std::size_t k : model.degrees)
        if (!subs.count(k)) subs[k] = colex_subsets(model.m, k);
    std::vector<std::size_t> radix;
    for (std::size_t k : model.degrees) radix.push_back(subs[k].size());
    if (model.degrees.empty()) return lam.is_zero() ? 1 : 0;

    std::size_t count = 0;
    std::vector<std::size_t> idx(model.degrees.size(), 0);
    do {
        Weight w;
        w.c.assign(model.m - 1, 0);
        for (std::size_t f = 0; f < idx.size(); ++f)
            w = w + subset_weight(model.m, subs[model.degrees[f]][idx[f]]);
        if (w == lam) ++count;
    } while (next_tuple(idx, radix));
    return count;
}

ExtremalData extremal_vector(const CartanData& cd, const Weight& mu, const WeylElement& w,
                             const MinorOptions& opts) {
    require_type_a(cd);
    const std::size_t m = cd.n + 1;
    ExtremalData out;
    out.model = tensor_model(m, mu);
    out.lambda = w.act(mu);
    out.det_twist = opts.det_twist;

    Rat scale = opts.scale;
    scale.canonicalize();
    if (scale == 0) throw std::invalid_argument("extremal vector cannot be zero");

    std::vector<int> word = w.word();
    if (opts.lift_word) {
        if (WeylElement::from_word(cd, *opts.lift_word) != w)
            throw std::invalid_argument("substitute word represents a different element");
        word = *opts.lift_word;
    }
    GroupWord letters;
    for (int j : word) letters.push_back(lift(static_cast<std::size_t>(j)));
    GroupPoint rep = realize(letters, m, make_varset({}));

    // Push the top basis tuple through the representative, one factor at a
    // time. Each wedge column of a signed permutation matrix has a single
    // nonzero entry, so the image stays a signed basis tuple.
    Rat coeff = scale;
    for (std::size_t k : out.model.degrees) {
        const auto subs = colex_subsets(m, k);
        // the top subset 0..k-1 has the smallest bit pattern, so index 0
        Mat<LaurentPoly> wk = wedge_matrix(rep, k);
        std::size_t row = subs.size();
        for (std::size_t r = 0; r < subs.size(); ++r) {
            if (wk.at(r, 0).is_zero()) continue;
            if (row != subs.size()) throw std::logic_error("representative image is not a basis tuple");
            row = r;
        }
        if (row == subs.size()) throw std::logic_error("representative image vanished");
        out.support.push_back(subs[row]);
        coeff *= wk.at(row, 0).constant_term();
    }
    out.coeff = coeff;

    if (tuple_weight(out.model, out.support) != out.lambda)
        throw std::logic_error("support weight disagrees with the reflected top weight");
    if (weight_multiplicity(out.model, out.lambda) != 1)
        throw std::logic_error("extremal weight space is not one-dimensional");

    if (opts.pick) {
        if (tuple_weight(out.model, *opts.pick) != out.lambda)
            throw std::invalid_argument("projection target has the wrong weight");
        if (*opts.pick != out.support)
            throw std::invalid_argument("projection target has zero coefficient in the extremal vector");
        out.pick = *opts.pick;
    } else {
        out.pick = out.support;
    }
    return out;
}

LaurentPoly extremal_minor(const GroupPoint& g, const ExtremalData& data) {
    if (g.m != data.model.m) throw std::invalid_argument("matrix size mismatch");
    if (data.coeff == 0) throw std::invalid_argument("degenerate extremal vector");

    std::map<std::size_t, Mat<LaurentPoly>> wedges;
    std::map<std::size_t, std::vector<std::vector<std::size_t>>> subs;
    LaurentPoly num = LaurentPoly::constant(g.vars, data.coeff);
    for (std::size_t f = 0; f < data.model.degrees.size(); ++f) {
        std::size_t k = data.model.degrees[f];
        if (!wedges.count(k)) {
            wedges.emplace(k, wedge_matrix(g, k));
            subs.emplace(k, colex_subsets(g.m, k));
        }
        std::size_t si = subset_index(subs[k], data.support[f]);
        std::size_t ti = subset_index(subs[k], data.pick[f]);
        num *= wedges.at(k).at(ti, si);
    }
    // the extra factor is the trivial top wedge: both the support and the
    // projection target are the full set there
    if (data.det_twist) num *= det_laplace(g.mat);
    return num * (Rat(1) / data.coeff);
}

LaurentPoly extremal_minor(const GroupPoint& g, const CartanData& cd, const Weight& mu,
                           const WeylElement& w, const MinorOptions& opts) {
    return extremal_minor(g, extremal_vector(cd, mu, w, opts));
}

std::unordered_map<std::string, LaurentPoly> cell_bindings(const CartanData& cd,
                                                           const std::vector<int>& cox,
                                                           const GroupPoint& g,
                                                           std::size_t offset) {
    require_type_a(cd);
    check_coxeter_word(cd, cox);
    const std::size_t n = cd.n;
    if (offset + n + 1 > g.m) throw std::invalid_argument("chain does not fit at this offset");

    WeylElement e = WeylElement::identity(cd);
    WeylElement c = WeylElement::from_word(cd, cox);
    std::vector<std::size_t> pos(n, 0);
    for (std::size_t p = 0; p < n; ++p) pos[static_cast<std::size_t>(cox[p])] = p;

    std::unordered_map<std::string, LaurentPoly> out;
    std::vector<LaurentPoly> zm(n), zbm(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[num_name("x", i)] = principal_minor(g, i + 1, offset);
        zm[i] = minor_uv(g, i + 1, e, c, offset);
        zbm[i] = minor_uv(g, i + 1, c, e, offset);
    }

    // frozen values: the twisted minor of their own index, corrected by the
    // letters occurring earlier in the Coxeter word
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly znum = zm[i], zbnum = zbm[i];
        LaurentPoly zden = LaurentPoly::one(g.vars), zbden = zden;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || pos[j] >= pos[i]) continue;
            long a = cd.entry(j, i);
            if (a > 0) {
                znum *= zm[j].pow(a);
                zbnum *= zbm[j].pow(a);
            } else if (a < 0) {
                zden *= zm[j].pow(-a);
                zbden *= zbm[j].pow(-a);
            }
        }
        out[num_name("z", i)] = exact_div(znum, zden);
        out[num_name("zb", i)] = exact_div(zbnum, zbden);
    }
    return out;
}

namespace {

void check_interior(const GroupWord& word, std::size_t k) {
    for (std::size_t p = 1; p + 1 < word.size(); ++p) {
        const Letter& l = word[p];
        if (l.kind == LetterKind::kLift || l.kind == LetterKind::kLiftInv)
            throw std::invalid_argument("chart word cannot contain lift letters");
        if ((l.kind == LetterKind::kUpper || l.kind == LetterKind::kLower) && l.i == k)
            throw std::invalid_argument("interior letter reuses the boundary index");
    }
}

std::size_t front_index(const std::vector<int>& cox) {
    if (cox.empty()) throw std::invalid_argument("empty Coxeter word");
    return static_cast<std::size_t>(cox.front());
}

}  // namespace

GroupWord psi_front(const CartanData& cd, const std::vector<int>& cox, const GroupWord& word) {
    check_coxeter_word(cd, cox);
    const std::size_t k = front_index(cox);
    if (word.size() < 2) throw std::invalid_argument("word too short");
    const Letter& first = word.front();
    const Letter& last = word.back();
    if (first.kind != LetterKind::kLower || first.i != k)
        throw std::invalid_argument("expected a leading lower letter at the initial index");
    if (last.kind != LetterKind::kUpper || last.i != k)
        throw std::invalid_argument("expected a trailing upper letter at the initial index");
    check_interior(word, k);

    GroupWord out;
    out.push_back(upper(k, first.arg));
    out.push_back(torus(k, first.arg));
    out.insert(out.end(), word.begin() + 1, word.end() - 1);
    out.push_back(torus(k, last.arg));
    out.push_back(lower(k, last.arg));
    return out;
}

GroupWord psi_front_inverse(const CartanData& cd, const std::vector<int>& cox,
                            const GroupWord& word) {
    check_coxeter_word(cd, cox);
    const std::size_t k = front_index(cox);
    if (word.size() < 2) throw std::invalid_argument("word too short");
    const Letter& first = word.front();
    const Letter& last = word.back();
    if (first.kind != LetterKind::kUpper || first.i != k)
        throw std::invalid_argument("expected a leading upper letter at the initial index");
    if (last.kind != LetterKind::kLower || last.i != k)
        throw std::invalid_argument("expected a trailing lower letter at the initial index");
    check_interior(word, k);

    GroupWord out;
    out.push_back(lower(k, first.arg));
    out.push_back(torus(k, first.arg.unit_inverse()));
    out.insert(out.end(), word.begin() + 1, word.end() - 1);
    out.push_back(torus(k, last.arg.unit_inverse()));
    out.push_back(upper(k, last.arg));
    return out;
}

GroupWord theta_word(const GroupWord& word) {
    GroupWord out;
    for (const Letter& l : word) {
        switch (l.kind) {
            case LetterKind::kUpper:
                out.push_back(lower(l.i, l.arg));
                break;
            case LetterKind::kLower:
                out.push_back(upper(l.i, l.arg));
                break;
            case LetterKind::kTorus:
                out.push_back(torus(l.i, l.arg.unit_inverse()));
                break;
            case LetterKind::kLift:
                out.push_back(lift_inv(l.i));
                break;
            case LetterKind::kLiftInv:
                out.push_back(lift(l.i));
                break;
        }
    }
    return out;
}

namespace {

// Validates the three-block chart shape and returns the torus block start.
void check_blocks(const CartanData& cd, const std::vector<int>& cox, const GroupWord& word,
                  bool barred_first) {
    const std::size_t n = cd.n;
    if (word.size() != 3 * n)
        throw std::invalid_argument("chart word does not have the block shape");
    for (std::size_t p = 0; p < n; ++p) {
        const Letter& a = word[p];
        const Letter& b = word[2 * n + p];
        auto first_i = static_cast<std::size_t>(cox[barred_first ? p : n - 1 - p]);
        auto last_i = static_cast<std::size_t>(cox[barred_first ? n - 1 - p : p]);
        LetterKind first_kind = barred_first ? LetterKind::kLower : LetterKind::kUpper;
        LetterKind last_kind = barred_first ? LetterKind::kUpper : LetterKind::kLower;
        if (a.kind != first_kind || a.i != first_i || b.kind != last_kind || b.i != last_i)
            throw std::invalid_argument("chart word does not have the block shape");
        const Letter& t = word[n + p];
        if (t.kind != LetterKind::kTorus || t.i != p)
            throw std::invalid_argument("chart word does not have the block shape");
    }
}

}  // namespace

GroupWord eta_front(const CartanData& cd, const std::vector<int>& cox, const GroupWord& word) {
    require_type_a(cd);
    check_coxeter_word(cd, cox);
    const std::size_t k = front_index(cox);
    check_blocks(cd, cox, word, true);
    const std::size_t n = cd.n;
    const LaurentPoly& hk = word[n + k].arg;

    GroupWord out;
    for (std::size_t p = 0; p < n; ++p)
        if (word[p].i != k) out.push_back(word[p]);
    for (std::size_t j = 0; j < n; ++j)
        if (j != k) out.push_back(word[n + j]);
    for (std::size_t p = 0; p < n; ++p) {
        const Letter& l = word[2 * n + p];
        if (l.i == k) continue;
        long a = cd.entry(k, l.i);
        out.push_back(upper(l.i, a == 0 ? l.arg : l.arg * hk.pow(a)));
    }
    return out;
}

GroupWord eta_back(const CartanData& cd, const std::vector<int>& cox, const GroupWord& word) {
    require_type_a(cd);
    check_coxeter_word(cd, cox);
    if (cox.empty()) throw std::invalid_argument("empty Coxeter word");
    const auto k = static_cast<std::size_t>(cox.back());
    check_blocks(cd, cox, word, false);
    const std::size_t n = cd.n;
    const LaurentPoly& hk = word[n + k].arg;

    GroupWord out;
    for (std::size_t p = 0; p < n; ++p)
        if (word[p].i != k) out.push_back(word[p]);
    for (std::size_t j = 0; j < n; ++j)
        if (j != k) out.push_back(word[n + j]);
    for (std::size_t p = 0; p < n; ++p) {
        const Letter& l = word[2 * n + p];
        if (l.i == k) continue;
        long a = cd.entry(k, l.i);
        out.push_back(lower(l.i, a == 0 ? l.arg : l.arg * hk.pow(-a)));
    }
    return out;
}

std::vector<MinorMatch> verify_cluster_minor_match(const CartanData& cd,
                                                   const std::vector<int>& cox,
                                                   const std::vector<Weight>& gvecs,
                                                   const Shuffle& shuffle, int depth) {
    GroupPoint g = generic_point(cd, cox, shuffle);
    auto bind = cell_bindings(cd, cox, g);
    ClusterModel model(cd, cox);

    std::vector<MinorMatch> out;
    for (const Weight& lam : gvecs) {
        MinorMatch r;
        r.gvec = lam;
        auto mono = model.find_monomial(lam, depth);
        if (!mono) {
            r.detail = "no cluster monomial with this degree within the search depth";
            out.push_back(std::move(r));
            continue;
        }
        r.monomial_found = true;
        LaurentPoly lhs;
        try {
            lhs = substitute(mono->value, bind, g.vars);
        } catch (const DivisionError& err) {
            r.detail = "chart pushforward left a remainder: " + err.remainder().str();
            out.push_back(std::move(r));
            continue;
        }
        DominantConjugate dc = dominant_conjugate(cd, lam);
        LaurentPoly rhs = extremal_minor(g, cd, dc.mu, dc.w);
        r.equal = lhs == rhs;
        if (!r.equal) r.detail = "cluster value " + lhs.str() + " differs from minor " + rhs.str();
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace cambmin
