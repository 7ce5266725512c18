#include "cambmin/cambrian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cambmin {

namespace {

std::vector<long> primitive_ray(const std::vector<long>& v) {
    long g = 0;
    for (long x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw std::logic_error("zero vector is not a ray");
    std::vector<long> r = v;
    for (auto& x : r) x /= g;
    return r;
}

Mat<Rat> generator_matrix(const CambrianCone& cone) {
    const std::size_t n = cone.generators.size();
    Mat<Rat> g(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) g.at(i, j) = cone.generators[j].c[i];
    return g;
}

// coordinates of v over the cone's generators when they are all >= 0
std::optional<std::vector<Rat>> cone_coords(const Mat<Rat>& g, const std::vector<Rat>& v) {
    LinSolve s = solve_rat(g, v);
    if (!s.consistent || !s.unique) return std::nullopt;
    for (const Rat& x : s.x)
        if (x < 0) return std::nullopt;
    return s.x;
}

std::vector<Rat> to_rat(const std::vector<long>& v) {
    std::vector<Rat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
    return r;
}

}  // namespace

std::vector<int> SortingWord::word() const {
    std::vector<int> w;
    w.reserve(letters.size());
    for (const auto& [copy, j] : letters) w.push_back(j);
    return w;
}

SortingWord c_sorting_word(const CartanData& cd, const std::vector<int>& cox,
                           const WeylElement& w) {
    check_coxeter_word(cd, cox);
    SortingWord out;
    WeylElement rinv = w.inverse();  // left descents of r are right descents of r^{-1}
    std::size_t copy = 0;
    while (rinv.length() > 0) {
        std::vector<int> skipped;
        for (int j : cox) {
            if (rinv.length() > 0 && rinv.right_descent(static_cast<std::size_t>(j))) {
                out.letters.emplace_back(copy, j);
                rinv = rinv.times_gen(static_cast<std::size_t>(j));
            } else {
                skipped.push_back(j);
            }
        }
        out.skips.push_back(std::move(skipped));
        ++copy;
    }
    // nestedness: a letter skipped in one copy must stay skipped afterwards
    out.sortable = true;
    std::vector<bool> dead(cd.n, false);
    for (std::size_t k = 0; k < out.skips.size() && out.sortable; ++k) {
        for (int j : out.skips[k]) dead[static_cast<std::size_t>(j)] = true;
        for (const auto& [kc, j] : out.letters)
            if (kc > k && dead[static_cast<std::size_t>(j)]) {
                out.sortable = false;
                break;
            }
    }
    return out;
}

bool is_c_sortable(const CartanData& cd, const std::vector<int>& cox, const WeylElement& w) {
    return c_sorting_word(cd, cox, w).sortable;
}

std::vector<RootVec> cl_c(const CartanData& cd, const std::vector<int>& cox,
                          const WeylElement& w) {
    SortingWord sw = c_sorting_word(cd, cox, w);
    if (!sw.sortable)
        throw std::invalid_argument("cl_c needs a sortable element, got " + w.word_str());
    std::vector<int> flat = sw.word();

    // prefix group elements: prefix[k] = product of the first k letters
    std::vector<WeylElement> prefix{WeylElement::identity(cd)};
    for (int j : flat) prefix.push_back(prefix.back().times_gen(static_cast<std::size_t>(j)));

    std::vector<RootVec> out;
    out.reserve(cd.n);
    for (std::size_t i = 0; i < cd.n; ++i) {
        std::size_t last = flat.size();
        for (std::size_t k = flat.size(); k-- > 0;)
            if (flat[k] == static_cast<int>(i)) {
                last = k;
                break;
            }
        RootVec alpha = simple_root(cd.n, i);
        RootVec beta = (last == flat.size()) ? alpha : prefix[last + 1].act(alpha);
        for (auto& x : beta.c) x = -x;
        if (!beta.all_nonneg() && !beta.all_nonpos())
            throw std::logic_error("cl_c produced a mixed-sign vector for " + w.word_str());
        out.push_back(std::move(beta));
    }
    return out;
}

CambrianCone cambrian_cone(const CartanData& cd, const std::vector<int>& cox,
                           const WeylElement& w, ConeSign sign) {
    std::vector<int> word = cox;
    if (sign == ConeSign::kMinus) std::reverse(word.begin(), word.end());

    CambrianCone cone{{}, w, sign};
    for (const RootVec& beta : cl_c(cd, word, w)) {
        Weight g = nu_c(cd, word, beta);
        if (sign == ConeSign::kMinus) g = g * -1;
        cone.generators.push_back(std::move(g));
    }
    if (det_rat(generator_matrix(cone)) == 0)
        throw std::logic_error("dependent cone generators at " + w.word_str() +
                               "; simpliciality violated");
    return cone;
}

std::vector<WeylElement> enumerate_sortables(const CartanData& cd,
                                             const std::vector<int>& cox,
                                             std::size_t bound) {
    check_coxeter_word(cd, cox);
    // breadth-first over the whole group (children by the letters of c in
    // word order), filtering on sortability; this stays complete without
    // leaning on any closure property of the sortable set itself
    std::vector<WeylElement> sortables{WeylElement::identity(cd)};
    std::vector<WeylElement> frontier = sortables;
    std::set<std::vector<long>> seen;
    auto key = [](const WeylElement& w) {
        std::vector<long> v;
        const IntMat& m = w.weight_action();
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
        return v;
    };
    seen.insert(key(frontier[0]));
    for (std::size_t len = 1; len <= bound && !frontier.empty(); ++len) {
        std::vector<WeylElement> next;
        for (const WeylElement& w : frontier) {
            for (int j : cox) {
                if (w.right_descent(static_cast<std::size_t>(j))) continue;
                WeylElement v = w.times_gen(static_cast<std::size_t>(j));
                if (!seen.insert(key(v)).second) continue;
                if (is_c_sortable(cd, cox, v)) sortables.push_back(v);
                next.push_back(std::move(v));
            }
        }
        frontier = std::move(next);
    }
    return sortables;
}

std::vector<std::vector<long>> cone_ray_key(const CambrianCone& cone) {
    std::vector<std::vector<long>> key;
    key.reserve(cone.generators.size());
    for (const Weight& g : cone.generators) key.push_back(primitive_ray(g.c));
    std::sort(key.begin(), key.end());
    return key;
}

std::vector<CambrianCone> doubled_fan(const CartanData& cd, const std::vector<int>& cox,
                                      std::size_t bound) {
    std::vector<CambrianCone> out;
    std::set<std::vector<std::vector<long>>> seen;
    for (ConeSign sign : {ConeSign::kPlus, ConeSign::kMinus}) {
        std::vector<int> word = cox;
        if (sign == ConeSign::kMinus) std::reverse(word.begin(), word.end());
        for (const WeylElement& w : enumerate_sortables(cd, word, bound)) {
            CambrianCone cone = cambrian_cone(cd, cox, w, sign);
            if (seen.insert(cone_ray_key(cone)).second) out.push_back(std::move(cone));
        }
    }
    return out;
}

std::optional<FanMembership> fan_membership(const CartanData& cd,
                                            const std::vector<int>& cox,
                                            const Weight& lam, std::size_t bound) {
    std::vector<Rat> target = to_rat(lam.c);
    for (ConeSign sign : {ConeSign::kPlus, ConeSign::kMinus}) {
        std::vector<int> word = cox;
        if (sign == ConeSign::kMinus) std::reverse(word.begin(), word.end());
        for (const WeylElement& w : enumerate_sortables(cd, word, bound)) {
            CambrianCone cone = cambrian_cone(cd, cox, w, sign);
            if (auto coords = cone_coords(generator_matrix(cone), target))
                return FanMembership{std::move(cone), std::move(*coords)};
        }
    }
    return std::nullopt;
}

bool check_cone_reflection(const CartanData& cd, const std::vector<int>& cox,
                           const WeylElement& w, std::string* why) {
    check_coxeter_word(cd, cox);
    const std::size_t s = static_cast<std::size_t>(cox[0]);
    if (!w.left_descent(s))
        throw std::invalid_argument("first letter of c is not initial in " + w.word_str());
    if (!is_c_sortable(cd, cox, w))
        throw std::invalid_argument("element is not sortable: " + w.word_str());

    // left side: reflect the generators of Cone_c(w) by s
    CambrianCone base = cambrian_cone(cd, cox, w, ConeSign::kPlus);
    CambrianCone lhs = base;
    for (Weight& g : lhs.generators) g = reflect(cd, s, g);

    // right side: the rotated word and the shortened element
    std::vector<int> rot(cox.begin() + 1, cox.end());
    rot.push_back(cox[0]);
    WeylElement sw = WeylElement::from_word(cd, {static_cast<int>(s)}) * w;
    if (!is_c_sortable(cd, rot, sw)) {
        if (why) *why = "rotated-word sortability failed for " + sw.word_str();
        return false;
    }
    CambrianCone rhs = cambrian_cone(cd, rot, sw, ConeSign::kPlus);

    if (cone_ray_key(lhs) != cone_ray_key(rhs)) {
        if (why) {
            std::ostringstream os;
            os << "ray sets differ for " << w.word_str() << ": {";
            for (const Weight& g : lhs.generators) os << " " << g.str();
            os << " } vs {";
            for (const Weight& g : rhs.generators) os << " " << g.str();
            os << " }";
            *why = os.str();
        }
        return false;
    }
    return true;
}

namespace {

// facet normal r of a full-dimensional simplicial cone: row r of G^{-1},
// computed as the solution of G^T y = e_r
std::vector<Rat> facet_normal(const Mat<Rat>& g, std::size_t r) {
    const std::size_t n = g.rows();
    Mat<Rat> gt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gt.at(i, j) = g.at(j, i);
    std::vector<Rat> e(n, Rat(0));
    e[r] = 1;
    LinSolve s = solve_rat(gt, e);
    if (!s.consistent || !s.unique) throw std::logic_error("singular cone matrix");
    return s.x;
}

std::vector<long> normal_to_int(const std::vector<Rat>& v) {
    Int den = 1;
    for (const Rat& x : v) den = lcm(den, Int(x.get_den()));
    std::vector<long> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * Rat(den);
        Int num = scaled.get_num();
        if (!num.fits_slong_p()) throw std::overflow_error("facet normal exceeds long range");
        r[i] = num.get_si();
    }
    return r;
}

// one-dimensional kernel of two independent row vectors in rank 3
std::optional<std::vector<long>> line_through(const std::vector<long>& a,
                                              const std::vector<long>& b) {
    std::vector<long> c{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                        a[0] * b[1] - a[1] * b[0]};
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) return std::nullopt;  // parallel normals
    return primitive_ray(c);
}

}  // namespace

bool cones_meet_in_common_face(const CambrianCone& a, const CambrianCone& b,
                               std::string* why) {
    const std::size_t n = a.generators.size();
    if (n > 3) throw std::invalid_argument("face check implemented for rank <= 3 only");
    Mat<Rat> ga = generator_matrix(a), gb = generator_matrix(b);

    auto inside = [](const Mat<Rat>& g, const std::vector<long>& v) {
        return cone_coords(g, to_rat(v)).has_value();
    };

    // candidate extreme rays of the intersection: generators of one cone
    // lying in the other, plus (rank 3) lines cut out by one facet of each
    std::vector<std::vector<long>> candidates;
    auto push_candidate = [&](const std::vector<long>& v) {
        std::vector<long> p = primitive_ray(v);
        if (std::find(candidates.begin(), candidates.end(), p) == candidates.end())
            candidates.push_back(p);
    };
    for (std::size_t i = 0; i < n; ++i)
        if (inside(gb, a.generators[i].c)) push_candidate(a.generators[i].c);
    for (std::size_t j = 0; j < n; ++j)
        if (inside(ga, b.generators[j].c)) push_candidate(b.generators[j].c);
    if (n == 3) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<long> na = normal_to_int(facet_normal(ga, i));
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<long> nb = normal_to_int(facet_normal(gb, j));
                auto line = line_through(na, nb);
                if (!line) continue;
                for (int dir : {1, -1}) {
                    std::vector<long> ray = *line;
                    for (auto& x : ray) x *= dir;
                    if (inside(ga, ray) && inside(gb, ray)) push_candidate(ray);
                }
            }
        }
    }

    // shared generator slots: the face each cone would have to expose
    auto face_ok = [&](const Mat<Rat>& g, const std::vector<bool>& shared,
                       const std::vector<long>& ray) {
        auto coords = cone_coords(g, to_rat(ray));
        if (!coords) return false;
        for (std::size_t i = 0; i < n; ++i)
            if (!shared[i] && (*coords)[i] != 0) return false;
        return true;
    };
    std::vector<bool> shared_a(n), shared_b(n);
    for (std::size_t i = 0; i < n; ++i) shared_a[i] = inside(gb, a.generators[i].c);
    for (std::size_t j = 0; j < n; ++j) shared_b[j] = inside(ga, b.generators[j].c);

    for (const auto& ray : candidates) {
        if (face_ok(ga, shared_a, ray) && face_ok(gb, shared_b, ray)) continue;
        if (why) {
            std::ostringstream os;
            os << "ray (";
            for (std::size_t i = 0; i < ray.size(); ++i) os << (i ? "," : "") << ray[i];
            os << ") lies in both cones but outside the shared face";
            *why = os.str();
        }
        return false;
    }
    return true;
}

}  // namespace cambmin
