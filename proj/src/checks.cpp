#include "cambmin/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "cambmin/binomial.hpp"
#include "cambmin/cambrian.hpp"
#include "cambmin/group.hpp"
#include "cambmin/laurent.hpp"
#include "cambmin/level0.hpp"
#include "cambmin/seed.hpp"
#include "cambmin/symmetric.hpp"
#include "cambmin/weyl.hpp"

namespace cambmin {

namespace {

using Clock = std::chrono::steady_clock;

// One timed check. The body returns an empty string to pass and a witness
// to fail; exceptions fail with the exception text as witness.
CheckResult timed(std::string name, std::string instance,
                  const std::function<std::string()>& body) {
    CheckResult r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    const auto t0 = Clock::now();
    try {
        r.witness = body();
        r.status = r.witness.empty() ? CheckStatus::kPass : CheckStatus::kFail;
    } catch (const std::exception& e) {
        r.status = CheckStatus::kFail;
        r.witness = std::string("exception: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
}

std::string cox_str(const std::vector<int>& cox) {
    std::string s;
    for (std::size_t i = 0; i < cox.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cox[i] + 1);
    }
    return s;
}

std::vector<std::vector<int>> all_cox_words(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct TypeWord {
    std::string label;
    CartanData cd;
    std::vector<int> cox;
};

// The (type, letter order) pairs a sweep runs over: the requested pair when
// the options pin one down, otherwise both rank two orders and all six rank
// three orders.
std::vector<TypeWord> sweep_words(const CheckOptions& opts) {
    std::vector<TypeWord> out;
    if (opts.type || opts.cartan_json) {
        CartanData cd = resolve_cartan(opts, "A2");
        std::string label = opts.type ? *opts.type : "custom";
        if (opts.cox) {
            check_coxeter_word(cd, *opts.cox);
            out.push_back({label, cd, *opts.cox});
        } else {
            for (const auto& w : all_cox_words(cd.n)) out.push_back({label, cd, w});
        }
        return out;
    }
    for (const char* name : {"A2", "A3"}) {
        CartanData cd = cartan_registry(name);
        for (const auto& w : all_cox_words(cd.n)) out.push_back({name, cd, w});
    }
    return out;
}

std::vector<Weight> box_points(std::size_t n, long b) {
    std::vector<Weight> out;
    std::vector<long> c(n, -b);
    while (true) {
        out.push_back(Weight{c});
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (c[i] < b) {
                ++c[i];
                break;
            }
            c[i] = -b;
        }
        if (i == n) break;
    }
    return out;
}

// Every cluster variable degree reachable by mutation, then (optionally)
// the full coordinate box, deduplicated in that order.
std::vector<Weight> gvec_sweep(const CartanData& cd, const std::vector<int>& cox,
                               std::optional<int> bound, std::size_t depth) {
    std::set<std::vector<long>> seen;
    std::vector<Weight> out;
    ClusterModel model(cd, cox);
    for (const Seed& s : model.closure(depth))
        for (const Weight& g : s.gvecs)
            if (seen.insert(g.c).second) out.push_back(g);
    if (bound)
        for (const Weight& lam : box_points(cd.n, *bound))
            if (seen.insert(lam.c).second) out.push_back(lam);
    return out;
}

std::vector<std::vector<int>> all_reduced_words(const CartanData& cd, const WeylElement& w) {
    if (w.length() == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < cd.n; ++i) {
        if (!w.right_descent(i)) continue;
        for (auto prefix : all_reduced_words(cd, w.times_gen(i))) {
            prefix.push_back(static_cast<int>(i));
            out.push_back(std::move(prefix));
        }
    }
    return out;
}

std::vector<Weight> small_dominants(std::size_t n, long bound) {
    std::vector<Weight> out;
    std::vector<long> c(n, 0);
    while (true) {
        std::size_t i = 0;
        for (; i < n; ++i) {
            long sum = 0;
            for (long v : c) sum += v;
            if (sum < bound) {
                ++c[i];
                break;
            }
            c[i] = 0;
        }
        if (i == n) break;
        out.push_back(Weight{c});
    }
    return out;
}

LaurentPoly minor_for(const GroupPoint& g, const CartanData& cd, const Weight& lam) {
    DominantConjugate dc = dominant_conjugate(cd, lam);
    return extremal_minor(g, cd, dc.mu, dc.w);
}

std::string nm(const char* stem, std::size_t i) { return stem + std::to_string(i + 1); }

std::string diff_witness(const std::string& what, const LaurentPoly& lhs,
                         const LaurentPoly& rhs) {
    return what + ": lhs=" + lhs.str() + " rhs=" + rhs.str();
}

std::size_t search_depth(const CartanData& cd) { return cd.n <= 2 ? 8 : 10; }

/* ---------------- intro ---------------- */

std::vector<CheckResult> run_intro() {
    std::vector<CheckResult> out;
    CartanData a2 = cartan_registry("A2");
    WeylElement s2 = WeylElement::from_word(a2, {1});
    WeylElement w0 = WeylElement::from_word(a2, {0, 1, 0});

    out.push_back(timed("intro", "tridiagonal chart factorization", [&]() -> std::string {
        GroupPoint g = generic_point(a2, {0, 1}, standard_shuffle(2));
        LaurentPoly wedge = extremal_minor(g, a2, Weight{{0, 1}}, s2);
        LaurentPoly prod = extremal_minor(g, a2, Weight{{1, 0}}, WeylElement::identity(a2)) *
                           extremal_minor(g, a2, Weight{{1, 0}}, w0);
        if (wedge != prod) return diff_witness("wedge minor vs product", wedge, prod);
        return "";
    }));

    out.push_back(timed("intro", "generic matrix corner defect", [&]() -> std::string {
        std::vector<std::string> names;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                names.push_back("g" + std::to_string(i) + std::to_string(j));
        VarSetPtr vs = make_varset(names);
        Mat<LaurentPoly> m(3, 3, LaurentPoly::zero(vs));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                m.at(i, j) = LaurentPoly::variable(
                    vs, "g" + std::to_string(i + 1) + std::to_string(j + 1));
        GroupPoint pt{3, vs, m, {}};

        LaurentPoly wedge = extremal_minor(pt, a2, Weight{{0, 1}}, s2);
        LaurentPoly prod = extremal_minor(pt, a2, Weight{{1, 0}}, WeylElement::identity(a2)) *
                           extremal_minor(pt, a2, Weight{{1, 0}}, w0);
        if (wedge == prod) return "generic minors should differ but agree: " + wedge.str();
        LaurentPoly corner =
            LaurentPoly::variable(vs, "g13") * LaurentPoly::variable(vs, "g31");
        if (prod - wedge != corner)
            return diff_witness("defect is not the corner product", prod - wedge, corner);
        return "";
    }));
    return out;
}

std::vector<CheckJob> make_intro_jobs(const CheckOptions&) {
    return {{"intro", "rank two", []() { return run_intro(); }}};
}

/* ---------------- thm-main ---------------- */

std::vector<CheckJob> make_thm_main_jobs(const CheckOptions& opts) {
    std::vector<CheckJob> jobs;
    for (const TypeWord& tw : sweep_words(opts)) {
        std::optional<int> bound = opts.bound;
        if (!bound && !opts.type && !opts.cartan_json) bound = 2;
        std::string label = tw.label + " cox=" + cox_str(tw.cox);
        jobs.push_back({"thm-main", label, [tw, bound, label]() {
            std::vector<CheckResult> out;
            const std::size_t depth = search_depth(tw.cd);
            for (const Weight& lam : gvec_sweep(tw.cd, tw.cox, bound, depth)) {
                out.push_back(timed("thm-main", label + " g=" + lam.str(), [&]() -> std::string {
                    auto res = verify_cluster_minor_match(
                        tw.cd, tw.cox, {lam}, standard_shuffle(tw.cd.n),
                        static_cast<int>(depth));
                    if (res.size() != 1) return "unexpected result count";
                    if (!res[0].monomial_found)
                        return "no cluster monomial with this degree: " + res[0].detail;
                    if (!res[0].equal) return "value mismatch: " + res[0].detail;
                    return "";
                }));
            }
            return out;
        }});
    }
    return jobs;
}

/* ---------------- projections ---------------- */

std::vector<CheckJob> make_projection_jobs(const CheckOptions& opts) {
    std::vector<CheckJob> jobs;
    for (const TypeWord& tw : sweep_words(opts)) {
        std::optional<int> bound = opts.bound;
        if (!bound && !opts.type && !opts.cartan_json) bound = 2;
        std::string label = tw.label + " cox=" + cox_str(tw.cox);
        jobs.push_back({"projections", label, [tw, bound, label]() {
            std::vector<CheckResult> out;
            GroupPoint g = generic_point(tw.cd, tw.cox, standard_shuffle(tw.cd.n));
            for (const Weight& lam : gvec_sweep(tw.cd, tw.cox, bound, search_depth(tw.cd))) {
                out.push_back(
                    timed("projections", label + " g=" + lam.str(), [&]() -> std::string {
                        DominantConjugate dc = dominant_conjugate(tw.cd, lam);
                        LaurentPoly base = extremal_minor(g, tw.cd, dc.mu, dc.w);

                        MinorOptions rescaled;
                        rescaled.scale = Rat(5, 3);
                        auto words = all_reduced_words(tw.cd, dc.w);
                        rescaled.lift_word = words.back();
                        LaurentPoly alt = extremal_minor(g, tw.cd, dc.mu, dc.w, rescaled);
                        if (alt != base)
                            return diff_witness("rescale/lift-word changed the value", alt,
                                                base);

                        MinorOptions twisted;
                        twisted.det_twist = true;
                        LaurentPoly tw_minor = extremal_minor(g, tw.cd, dc.mu, dc.w, twisted);
                        if (tw_minor != base)
                            return diff_witness("det twist changed the value", tw_minor, base);

                        // fundamental conjugates admit a second model built
                        // from plain matrix minors of the conjugated point
                        std::size_t nonzero = 0, slot = 0;
                        for (std::size_t i = 0; i < tw.cd.n; ++i)
                            if (dc.mu.c[i] != 0) {
                                ++nonzero;
                                slot = i;
                            }
                        if (nonzero == 1 && dc.mu.c[slot] == 1) {
                            LaurentPoly uv = minor_uv(g, slot + 1, dc.w, dc.w);
                            if (uv != base)
                                return diff_witness("wedge-matrix model disagrees", uv, base);
                        }
                        return "";
                    }));
            }
            return out;
        }});
    }
    return jobs;
}

/* ---------------- exchange ---------------- */

std::vector<CheckResult> run_exchange_word(const TypeWord& tw) {
    std::vector<CheckResult> out;
    const std::size_t n = tw.cd.n;
    GroupPoint g = generic_point(tw.cd, tw.cox, standard_shuffle(n));
    auto bind = cell_bindings(tw.cd, tw.cox, g);
    ClusterModel model(tw.cd, tw.cox);
    Seed s0 = model.initial();

    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[static_cast<std::size_t>(tw.cox[p])] = p;

    std::string label = tw.label + " cox=" + cox_str(tw.cox);
    for (std::size_t j = 0; j < n; ++j) {
        out.push_back(timed("exchange", label + " slot=" + std::to_string(j + 1),
                            [&]() -> std::string {
                                LaurentPoly lead = LaurentPoly::one(g.vars);
                                LaurentPoly trail = lead;
                                for (std::size_t i = 0; i < n; ++i) {
                                    if (i + 1 != j && j + 1 != i) continue;
                                    if (pos[i] > pos[j])
                                        lead *= bind.at(nm("x", i));
                                    else
                                        trail *= bind.at(nm("x", i));
                                }
                                LaurentPoly rhs =
                                    lead + bind.at(nm("z", j)) * bind.at(nm("zb", j)) * trail;
                                Seed s1 = model.mutate(s0, j);
                                LaurentPoly xp = substitute(s1.vars[j], bind, g.vars);
                                LaurentPoly lhs = xp * bind.at(nm("x", j));
                                if (lhs != rhs) return diff_witness("exchange", lhs, rhs);
                                return "";
                            }));
    }
    return out;
}

std::vector<CheckJob> make_exchange_jobs(const CheckOptions& opts) {
    std::vector<CheckJob> jobs;
    for (const TypeWord& tw : sweep_words(opts))
        jobs.push_back({"exchange", tw.label + " cox=" + cox_str(tw.cox),
                        [tw]() { return run_exchange_word(tw); }});
    return jobs;
}

/* ---------------- maps ---------------- */

GroupWord cat(GroupWord a, const GroupWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<CheckResult> run_front_rewrite() {
    std::vector<CheckResult> out;
    for (const char* type : {"A2", "A3"}) {
        CartanData cd = cartan_registry(type);
        std::vector<int> cox(cd.n);
        std::iota(cox.begin(), cox.end(), 0);
        std::string label = std::string(type) + " cox=" + cox_str(cox);

        out.push_back(timed("maps", label + " front rewrite round trip", [&]() -> std::string {
            GroupPoint g = generic_point(cd, cox, standard_shuffle(cd.n));
            GroupWord pw = psi_front(cd, cox, g.word);
            if (simplify_torus(psi_front_inverse(cd, cox, pw)) != g.word)
                return "inverse rewrite does not restore the chart word";
            return "";
        }));

        out.push_back(timed("maps", label + " front rewrite matrix form", [&]() -> std::string {
            GroupPoint g = generic_point(cd, cox, standard_shuffle(cd.n));
            GroupWord pw = psi_front(cd, cox, g.word);
            auto tb1 = LaurentPoly::variable(g.vars, "tb1");
            auto t1 = LaurentPoly::variable(g.vars, "t1");
            GroupWord bridge =
                cat(cat({lower(0, tb1.unit_inverse()), lift_inv(0)}, g.word),
                    {lift(0), upper(0, t1.unit_inverse())});
            if (realize(pw, g.m, g.vars).mat != realize(bridge, g.m, g.vars).mat)
                return "rewrite disagrees with conjugation by the reflection";
            return "";
        }));
    }
    return out;
}

std::vector<CheckResult> run_transport() {
    std::vector<CheckResult> out;
    CartanData a2 = cartan_registry("A2");
    GroupPoint g = generic_point(a2, {0, 1}, standard_shuffle(2));
    GroupPoint pg = realize(psi_front(a2, {0, 1}, g.word), 3, g.vars);
    auto bind_c = cell_bindings(a2, {0, 1}, g);
    auto bind_cp = cell_bindings(a2, {1, 0}, pg);

    out.push_back(timed("maps", "A2 frozen transport", [&]() -> std::string {
        for (std::size_t i = 0; i < 2; ++i) {
            long a = a2.entry(0, i);
            if (bind_cp.at(nm("z", i)) != bind_c.at(nm("z", i)) * bind_c.at("z1").pow(-a))
                return "frozen z" + std::to_string(i + 1) + " scales wrong";
            if (bind_cp.at(nm("zb", i)) != bind_c.at(nm("zb", i)) * bind_c.at("zb1").pow(-a))
                return "frozen zb" + std::to_string(i + 1) + " scales wrong";
        }
        return "";
    }));

    ClusterModel model_c(a2, {0, 1});
    ClusterModel model_cp(a2, {1, 0});
    auto value = [&](const ClusterModel& m, const Weight& lam,
                     const std::unordered_map<std::string, LaurentPoly>& bind)
        -> std::optional<LaurentPoly> {
        auto mono = m.find_monomial(lam, 8);
        if (!mono) return std::nullopt;
        return substitute(mono->value, bind, g.vars);
    };

    std::vector<Weight> lams = {Weight{{1, 0}}, Weight{{0, 1}},  Weight{{0, -1}},
                                Weight{{1, -1}}, Weight{{1, 1}}, Weight{{0, 2}}};
    for (const Weight& lam : lams) {
        out.push_back(timed("maps", "A2 transport g=" + lam.str(), [&]() -> std::string {
            auto lhs = value(model_cp, lam, bind_cp);
            auto rhs = value(model_c, reflect(a2, 0, lam), bind_c);
            if (!lhs || !rhs) return "monomial not found";
            if (*lhs != *rhs) return diff_witness("transport", *lhs, *rhs);
            return "";
        }));
    }

    out.push_back(timed("maps", "A2 exceptional ray correction", [&]() -> std::string {
        LaurentPoly corr =
            bind_c.at("x1") * bind_c.at("z1").pow(-1) * bind_c.at("zb1").pow(-1);
        auto exceptional = value(model_cp, Weight{{-1, 0}}, bind_cp);
        if (!exceptional || *exceptional != corr)
            return "exceptional variable does not divide out the frozen pair";
        auto mixed = value(model_cp, Weight{{-1, 1}}, bind_cp);
        auto plain = value(model_c, Weight{{0, 1}}, bind_c);
        if (!mixed || !plain || *mixed != corr * *plain)
            return "mixed monomial misses the per-factor correction";
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_halves_swap() {
    std::vector<CheckResult> out;
    CartanData a3 = cartan_registry("A3");
    out.push_back(timed("maps", "A3 halves swap involution", [&]() -> std::string {
        GroupPoint g = generic_point(a3, {0, 1, 2}, standard_shuffle(3));
        GroupWord pw = psi_front(a3, {0, 1, 2}, g.word);
        if (theta_word(theta_word(g.word)) != g.word) return "swap fails on the chart word";
        if (theta_word(theta_word(pw)) != pw) return "swap fails on the rewritten word";
        std::vector<int> reversed_tail = {0, 2, 1};
        if (psi_front_inverse(a3, {0, 1, 2}, pw) !=
            theta_word(psi_front(a3, reversed_tail, theta_word(pw))))
            return "inverse rewrite is not swap-rewrite-swap";
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_restriction() {
    std::vector<CheckResult> out;
    CartanData a2 = cartan_registry("A2");
    CartanData a1 = cartan_registry("A1");
    CartanData a3 = cartan_registry("A3");

    out.push_back(timed("maps", "A2 front deletion splits minors", [&]() -> std::string {
        GroupPoint g = generic_point(a2, {0, 1}, standard_shuffle(2));
        GroupWord front = eta_front(a2, {0, 1}, g.word);
        for (Letter& l : front) --l.i;
        GroupPoint sub = realize(front, 2, g.vars);
        for (const Weight& lam :
             {Weight{{2, 1}}, Weight{{1, -1}}, Weight{{0, 1}}, Weight{{3, -1}}}) {
            LaurentPoly rhs = principal_minor(g, 1).pow(lam.c[0]) *
                              minor_for(sub, a1, Weight{{lam.c[1]}});
            LaurentPoly lhs = minor_for(g, a2, lam);
            if (lhs != rhs) return diff_witness("front split at " + lam.str(), lhs, rhs);
        }
        return "";
    }));

    out.push_back(timed("maps", "A2 back deletion splits minors", [&]() -> std::string {
        GroupPoint f = generic_point(a2, {0, 1}, flipped_shuffle(2));
        GroupPoint sub = realize(eta_back(a2, {0, 1}, f.word), 2, f.vars);
        for (const Weight& lam : {Weight{{1, -2}}, Weight{{2, -1}}, Weight{{1, 0}}}) {
            LaurentPoly rhs = minor_for(f, a2, Weight{{0, -1}}).pow(-lam.c[1]) *
                              minor_for(sub, a1, Weight{{lam.c[0]}});
            LaurentPoly lhs = minor_for(f, a2, lam);
            if (lhs != rhs) return diff_witness("back split at " + lam.str(), lhs, rhs);
        }
        return "";
    }));

    out.push_back(timed("maps", "A3 front deletion splits minors", [&]() -> std::string {
        GroupPoint g = generic_point(a3, {0, 1, 2}, standard_shuffle(3));
        GroupWord front = eta_front(a3, {0, 1, 2}, g.word);
        for (Letter& l : front) --l.i;
        GroupPoint sub = realize(front, 3, g.vars);
        Weight lam{{1, -1, 1}};
        LaurentPoly lhs = minor_for(g, a3, lam);
        LaurentPoly rhs = principal_minor(g, 1) * minor_for(sub, a2, Weight{{-1, 1}});
        if (lhs != rhs) return diff_witness("front split at " + lam.str(), lhs, rhs);
        return "";
    }));

    out.push_back(timed("maps", "A3 restriction embeds the smaller ring", [&]() -> std::string {
        ClusterModel big(a3, {0, 1, 2});
        ClusterModel sub(a2, {0, 1});
        auto bv = [&](const std::string& name) {
            return LaurentPoly::variable(big.ambient(), name);
        };
        std::unordered_map<std::string, LaurentPoly> embed = {
            {"x1", bv("x2")}, {"x2", bv("x3")},              {"z1", bv("z2")},
            {"z2", bv("z3")}, {"zb1", bv("zb2") * bv("x1")}, {"zb2", bv("zb3")},
        };
        std::vector<Weight> sub_vars = {Weight{{1, 0}}, Weight{{0, 1}}, Weight{{-1, 0}},
                                        Weight{{0, -1}}, Weight{{1, -1}}};
        for (const Weight& lp : sub_vars) {
            auto sub_mono = sub.find_monomial(lp, 8);
            if (!sub_mono) return "missing small-model monomial at " + lp.str();
            LaurentPoly image = substitute(sub_mono->value, embed, big.ambient());
            for (long p = 0; p <= 2; ++p) {
                Weight lam{{p, lp.c[0], lp.c[1]}};
                auto big_mono = big.find_monomial(lam, 10);
                if (!big_mono) return "missing big-model monomial at " + lam.str();
                if (big_mono->value != bv("x1").pow(p) * image)
                    return "embedding breaks at " + lam.str();
            }
        }
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_one_sided() {
    std::vector<CheckResult> out;
    CartanData a2 = cartan_registry("A2");
    out.push_back(timed("maps", "A2 one-sided letters fix minors", [&]() -> std::string {
        GroupPoint g = generic_point(a2, {0, 1}, standard_shuffle(2), {"u"});
        LaurentPoly u = LaurentPoly::variable(g.vars, "u");
        auto minor_at = [&](const GroupWord& w, const Weight& lam) {
            return minor_for(realize(w, 3, g.vars), a2, lam);
        };
        Weight lam{{1, -1}};
        LaurentPoly base = minor_for(g, a2, lam);
        if (minor_at(cat({lower(0, u)}, g.word), lam) != base)
            return "left lower letter moved a nonnegative coordinate";
        if (minor_at(cat(g.word, {upper(0, u)}), lam) != base)
            return "right upper letter moved a nonnegative coordinate";
        if (minor_at(cat({upper(1, u)}, g.word), lam) != base)
            return "left upper letter moved a nonpositive coordinate";
        if (minor_at(cat(g.word, {lower(1, u)}), lam) != base)
            return "right lower letter moved a nonpositive coordinate";
        if (minor_at(cat(g.word, {lower(0, u)}), lam) == base)
            return "strictly positive coordinate should not be invariant";
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_pullback() {
    std::vector<CheckResult> out;
    struct Case {
        const char* type;
        std::vector<int> cox;
    };
    for (const Case& c :
         {Case{"A2", {0, 1}}, Case{"A2", {1, 0}}, Case{"A3", {0, 1, 2}}}) {
        CartanData cd = cartan_registry(c.type);
        std::string label = std::string(c.type) + " cox=" + cox_str(c.cox);
        out.push_back(timed("maps", label + " minors pull back along the reflection",
                            [&]() -> std::string {
                                GroupPoint g = generic_point(cd, c.cox, standard_shuffle(cd.n));
                                const auto k = static_cast<std::size_t>(c.cox.front());
                                GroupPoint pg =
                                    realize(psi_front(cd, c.cox, g.word), g.m, g.vars);
                                std::set<std::vector<long>> seen;
                                for (const Weight& mu : small_dominants(cd.n, 2))
                                    for (const WeylElement& w : enumerate_weyl(cd, 12)) {
                                        Weight lam = w.act(mu);
                                        if (lam.c[k] > 0 || !seen.insert(lam.c).second)
                                            continue;
                                        Weight slam = reflect(cd, k, lam);
                                        LaurentPoly lhs = minor_for(pg, cd, slam);
                                        LaurentPoly rhs = minor_for(g, cd, lam);
                                        if (lhs != rhs)
                                            return diff_witness("pullback at " + lam.str(),
                                                                lhs, rhs);
                                    }
                                return "";
                            }));
    }
    return out;
}

std::vector<CheckJob> make_maps_jobs(const CheckOptions&) {
    return {
        {"maps", "front rewrite", []() { return run_front_rewrite(); }},
        {"maps", "coordinate transport", []() { return run_transport(); }},
        {"maps", "halves swap", []() { return run_halves_swap(); }},
        {"maps", "boundary restriction", []() { return run_restriction(); }},
        {"maps", "one sided invariance", []() { return run_one_sided(); }},
        {"maps", "minor pullback", []() { return run_pullback(); }},
    };
}

/* ---------------- cambrian ---------------- */

std::vector<CheckResult> run_cambrian_counts(const TypeWord& tw, std::size_t expected) {
    std::vector<CheckResult> out;
    std::string label = tw.label + " cox=" + cox_str(tw.cox);
    const std::size_t bound = tw.cd.n <= 2 ? 8 : 10;

    out.push_back(timed("cambrian", label + " sortable and seed counts", [&]() -> std::string {
        std::size_t sortables = enumerate_sortables(tw.cd, tw.cox, bound).size();
        if (sortables != expected)
            return "sortable count " + std::to_string(sortables) + " expected " +
                   std::to_string(expected);
        ClusterModel model(tw.cd, tw.cox);
        std::size_t seeds = model.closure(12).size();
        if (seeds != expected)
            return "seed count " + std::to_string(seeds) + " expected " +
                   std::to_string(expected);
        return "";
    }));

    out.push_back(timed("cambrian", label + " fan cones are seed cones", [&]() -> std::string {
        std::set<std::vector<std::vector<long>>> seed_cones;
        ClusterModel model(tw.cd, tw.cox);
        for (const Seed& s : model.closure(12)) {
            std::vector<std::vector<long>> gens;
            for (const Weight& g : s.gvecs) gens.push_back(g.c);
            std::sort(gens.begin(), gens.end());
            seed_cones.insert(gens);
        }
        std::set<std::vector<std::vector<long>>> fan_cones;
        for (const CambrianCone& cone : doubled_fan(tw.cd, tw.cox, 12)) {
            std::vector<std::vector<long>> gens;
            for (const Weight& g : cone.generators) gens.push_back(g.c);
            std::sort(gens.begin(), gens.end());
            fan_cones.insert(gens);
        }
        if (seed_cones != fan_cones)
            return "cone families differ: " + std::to_string(seed_cones.size()) +
                   " seed cones vs " + std::to_string(fan_cones.size()) + " fan cones";
        return "";
    }));
    return out;
}

std::vector<CheckResult> run_cone_reflection(const std::string& type) {
    std::vector<CheckResult> out;
    CartanData cd = cartan_registry(type);
    std::vector<int> fwd(cd.n);
    std::iota(fwd.begin(), fwd.end(), 0);
    std::vector<int> rev(fwd.rbegin(), fwd.rend());
    for (const std::vector<int>& cox : {fwd, rev}) {
        std::string label = type + " cox=" + cox_str(cox);
        out.push_back(timed("cambrian", label + " cone reflection", [&]() -> std::string {
            // only sortables whose sorting word opens with the initial letter
            const auto front = static_cast<std::size_t>(cox.front());
            std::size_t checked = 0;
            for (const WeylElement& w : enumerate_sortables(cd, cox, 8)) {
                if (w.length() == 0 || !w.left_descent(front)) continue;
                std::string why;
                if (!check_cone_reflection(cd, cox, w, &why))
                    return "fails at " + w.word_str() + ": " + why;
                ++checked;
            }
            if (checked == 0) return "no sortables start with the initial letter";
            return "";
        }));
    }
    return out;
}

std::vector<CheckJob> make_cambrian_jobs(const CheckOptions&) {
    std::vector<CheckJob> jobs;
    const std::map<std::string, std::size_t> counts = {{"A2", 5}, {"A3", 14}};
    for (const auto& [type, expected] : counts) {
        CartanData cd = cartan_registry(type);
        for (const auto& cox : all_cox_words(cd.n)) {
            TypeWord tw{type, cd, cox};
            std::size_t count = expected;
            jobs.push_back({"cambrian", type + " cox=" + cox_str(cox),
                            [tw, count]() { return run_cambrian_counts(tw, count); }});
        }
    }
    for (const char* type : {"A2", "A3", "B2", "G2", "A1(1)"}) {
        std::string t = type;
        jobs.push_back(
            {"cambrian", t + " reflection", [t]() { return run_cone_reflection(t); }});
    }
    return jobs;
}

/* ---------------- minor-oracle ---------------- */

LaurentPoly oracle_double_sum(std::size_t n) {
    VarSetPtr vars = minor_ambient(n);
    std::vector<std::size_t> avars;
    for (std::size_t i = 0; i < n; ++i)
        avars.push_back(*vars->index("a" + std::to_string(i + 1)));
    std::vector<LaurentPoly> s;
    for (std::size_t r = 0; r <= n / 2; ++r) s.push_back(s_subsets(vars, avars, r));
    LaurentPoly out = LaurentPoly::zero(vars);
    for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t k = 0; k <= m; ++k)
            out += minor_term(vars, n, m, k) * d_coeff(n, m, k, s);
    return out;
}

std::vector<CheckJob> make_minor_oracle_jobs(const CheckOptions& opts) {
    std::vector<CheckJob> jobs;
    for (std::size_t n = 1; n <= 3; ++n) {
        jobs.push_back({"minor-oracle", "n=" + std::to_string(n), [n]() {
            std::vector<CheckResult> out;
            out.push_back(timed("minor-oracle", "n=" + std::to_string(n) + " symbolic",
                                [&]() -> std::string {
                                    LaurentPoly direct = minor_direct(n);
                                    LaurentPoly closed = oracle_double_sum(n);
                                    if (direct != closed)
                                        return diff_witness("minor vs double sum", direct,
                                                            closed);
                                    return "";
                                }));
            return out;
        }});
    }
    const std::uint64_t seed = opts.seed;
    jobs.push_back({"minor-oracle", "n=4", [seed]() {
        std::vector<CheckResult> out;
        out.push_back(timed("minor-oracle", "n=4 at 20 random points", [&]() -> std::string {
            LaurentPoly direct = minor_direct(4);
            LaurentPoly closed = oracle_double_sum(4);
            VarSetPtr vars = direct.varset();
            std::mt19937_64 rng(seed);
            for (int trial = 0; trial < 20; ++trial) {
                std::unordered_map<std::string, LaurentPoly> bind;
                std::string point;
                for (std::size_t i = 0; i < 4; ++i) {
                    long num = 0;
                    while (num == 0)
                        num = static_cast<long>(rng() % 19) - 9;
                    long den = 1 + static_cast<long>(rng() % 9);
                    Rat v(num, den);
                    v.canonicalize();
                    bind["a" + std::to_string(i + 1)] = LaurentPoly::constant(vars, v);
                    point += (i ? "," : "") + rat_str(v);
                }
                if (substitute(direct, bind, vars) != substitute(closed, bind, vars))
                    return "mismatch at a=(" + point + ")";
            }
            return "";
        }));
        return out;
    }});
    return jobs;
}

/* ---------------- basis ---------------- */

std::string kind_name(BasisKind kind) {
    switch (kind) {
        case BasisKind::kGreedy: return "greedy";
        case BasisKind::kTriangular: return "triangular";
        case BasisKind::kGeneric: return "generic";
    }
    return "?";
}

Rat lemma_subset_sum(BasisKind kind, std::size_t n, std::size_t r) {
    const long ln = static_cast<long>(n);
    const long lr = static_cast<long>(r);
    Rat sign = (r % 2 == 0) ? 1 : -1;
    switch (kind) {
        case BasisKind::kGreedy:
            return sign * Rat(ln) / Rat(ln - lr) * binom_rat(ln - lr, lr);
        case BasisKind::kTriangular:
            return sign * binom_rat(ln - lr, lr);
        case BasisKind::kGeneric:
            return r == 0 ? Rat(1) : Rat(0);
    }
    return 0;
}

std::vector<CheckResult> run_basis_pair(BasisKind kind, std::size_t n) {
    std::vector<CheckResult> out;
    std::string prefix = "kind=" + kind_name(kind) + " n=" + std::to_string(n);

    out.push_back(timed("basis", prefix + " closed subset sums", [&]() -> std::string {
        auto ev = basis_e_values(kind, n);
        for (std::size_t r = 1; r <= n / 2; ++r) {
            LaurentPoly s = s_from_e(n, ev, r);
            if (!s.is_constant())
                return "subset sum r=" + std::to_string(r) + " not constant: " + s.str();
            if (s.constant_term() != lemma_subset_sum(kind, n, r))
                return "subset sum r=" + std::to_string(r) + " is " +
                       rat_str(s.constant_term()) + " expected " +
                       rat_str(lemma_subset_sum(kind, n, r));
        }
        return "";
    }));

    out.push_back(timed("basis", prefix + " coefficient table", [&]() -> std::string {
        for (const BasisCheck& c : verify_basis(kind, n)) {
            if (!c.constant)
                return "entry (" + std::to_string(c.m) + "," + std::to_string(c.k) +
                       ") kept free indeterminates: " + c.detail;
            if (!c.equal)
                return "entry (" + std::to_string(c.m) + "," + std::to_string(c.k) +
                       ") disagrees: " + c.detail;
        }
        return "";
    }));

    out.push_back(timed("basis", prefix + " element from constraints", [&]() -> std::string {
        LaurentPoly lhs = basis_element_from_e(basis_e_values(kind, n), n);
        LaurentPoly rhs = basis_element(kind, n);
        if (lhs != rhs) return diff_witness("element", lhs, rhs);
        return "";
    }));
    return out;
}

std::vector<CheckJob> make_basis_jobs(const CheckOptions& opts) {
    std::vector<BasisKind> kinds;
    if (!opts.kind || *opts.kind == "all") {
        kinds = {BasisKind::kGreedy, BasisKind::kTriangular, BasisKind::kGeneric};
    } else if (*opts.kind == "greedy") {
        kinds = {BasisKind::kGreedy};
    } else if (*opts.kind == "triangular") {
        kinds = {BasisKind::kTriangular};
    } else if (*opts.kind == "generic") {
        kinds = {BasisKind::kGeneric};
    } else {
        throw std::invalid_argument("unknown basis kind: " + *opts.kind);
    }
    std::vector<std::size_t> sizes;
    if (opts.n)
        sizes = {*opts.n};
    else
        for (std::size_t n = 1; n <= 5; ++n) sizes.push_back(n);

    std::vector<CheckJob> jobs;
    for (BasisKind kind : kinds)
        for (std::size_t n : sizes)
            jobs.push_back({"basis", "kind=" + kind_name(kind) + " n=" + std::to_string(n),
                            [kind, n]() { return run_basis_pair(kind, n); }});
    return jobs;
}

/* ---------------- binomials ---------------- */

std::vector<CheckJob> make_binomial_jobs(const CheckOptions&) {
    std::vector<CheckJob> jobs;
    jobs.push_back({"binomials", "alternating sum", []() {
        std::vector<CheckResult> out;
        for (long a = 0; a <= 12; ++a) {
            out.push_back(timed("binomials", "alternating sum a=" + std::to_string(a),
                                [a]() -> std::string {
                                    for (long b = 0; b <= a; ++b)
                                        for (long c = 0; c <= a; ++c)
                                            if (!binomial_identity_check(a, b, c))
                                                return "fails at (a,b,c)=(" +
                                                       std::to_string(a) + "," +
                                                       std::to_string(b) + "," +
                                                       std::to_string(c) + ")";
                                    return "";
                                }));
        }
        return out;
    }});
    jobs.push_back({"binomials", "diagonal reduction", []() {
        std::vector<CheckResult> out;
        for (std::size_t n = 2; n <= 5; ++n) {
            out.push_back(timed(
                "binomials", "diagonal reduction n=" + std::to_string(n),
                [n]() -> std::string {
                    std::vector<std::string> anames, enames;
                    for (std::size_t i = 1; i <= n; ++i) {
                        anames.push_back("a" + std::to_string(i));
                        enames.push_back("e" + std::to_string(i));
                    }
                    VarSetPtr av = make_varset(anames);
                    VarSetPtr ev = make_varset(enames);
                    std::vector<std::size_t> slots(n);
                    std::iota(slots.begin(), slots.end(), 0);
                    for (std::size_t m = 0; m <= n; ++m) {
                        LaurentPoly reduced = e_basis_reduce(d0_numerator(av, slots, m), ev);
                        LaurentPoly expect =
                            (m == 0 || m == n)
                                ? LaurentPoly::variable(ev, "e" + std::to_string(n))
                                : LaurentPoly::variable(ev, "e" + std::to_string(m)) *
                                      LaurentPoly::variable(ev, "e" + std::to_string(n - m));
                        if (reduced != expect)
                            return diff_witness("m=" + std::to_string(m), reduced, expect);
                    }
                    return "";
                }));
        }
        return out;
    }});
    return jobs;
}

/* ---------------- negative-control ---------------- */

std::vector<CheckJob> make_negative_control_jobs(const CheckOptions&) {
    return {{"negative-control", "affine boundary ray", []() {
        std::vector<CheckResult> out;
        CartanData aff = cartan_registry("A1(1)");

        struct Side {
            std::vector<int> cox;
            Weight gap;
            Weight control;
        };
        for (const Side& s : {Side{{0, 1}, Weight{{-1, 1}}, Weight{{1, -1}}},
                              Side{{1, 0}, Weight{{1, -1}}, Weight{{-1, 1}}}}) {
            std::string label = "cox=" + cox_str(s.cox);
            out.push_back(timed("negative-control", label + " fan gap at " + s.gap.str(),
                                [&]() -> std::string {
                                    for (long mult = 1; mult <= 2; ++mult) {
                                        Weight lam = s.gap * mult;
                                        if (fan_membership(aff, s.cox, lam, 12))
                                            return lam.str() + " landed in a cone";
                                    }
                                    return "";
                                }));
            out.push_back(timed("negative-control", label + " no monomial at " + s.gap.str(),
                                [&]() -> std::string {
                                    ClusterModel model(aff, s.cox);
                                    for (long mult = 1; mult <= 2; ++mult) {
                                        Weight lam = s.gap * mult;
                                        if (model.find_monomial(lam, 12))
                                            return lam.str() + " is a monomial degree";
                                    }
                                    return "";
                                }));
            out.push_back(timed("negative-control", label + " searches see " + s.control.str(),
                                [&]() -> std::string {
                                    if (!fan_membership(aff, s.cox, s.control, 12))
                                        return "control ray missing from the fan";
                                    ClusterModel model(aff, s.cox);
                                    if (!model.find_monomial(s.control, 12))
                                        return "control ray missing from the monomial search";
                                    return "";
                                }));
        }
        return out;
    }}};
}

}  // namespace

/* ---------------- public surface ---------------- */

std::string status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::kPass: return "pass";
        case CheckStatus::kFail: return "fail";
        case CheckStatus::kSkipped: return "skipped";
    }
    return "?";
}

CartanData resolve_cartan(const CheckOptions& opts, const std::string& fallback) {
    if (opts.cartan_json) return cartan_from_json_file(*opts.cartan_json);
    if (opts.type) return cartan_registry(*opts.type);
    return cartan_registry(fallback);
}

std::vector<CheckJob> plan_intro(const CheckOptions& opts) { return make_intro_jobs(opts); }
std::vector<CheckJob> plan_thm_main(const CheckOptions& opts) { return make_thm_main_jobs(opts); }
std::vector<CheckJob> plan_projections(const CheckOptions& opts) {
    return make_projection_jobs(opts);
}
std::vector<CheckJob> plan_exchange(const CheckOptions& opts) { return make_exchange_jobs(opts); }
std::vector<CheckJob> plan_maps(const CheckOptions& opts) { return make_maps_jobs(opts); }
std::vector<CheckJob> plan_cambrian(const CheckOptions& opts) { return make_cambrian_jobs(opts); }
std::vector<CheckJob> plan_minor_oracle(const CheckOptions& opts) {
    return make_minor_oracle_jobs(opts);
}
std::vector<CheckJob> plan_basis(const CheckOptions& opts) { return make_basis_jobs(opts); }
std::vector<CheckJob> plan_binomials(const CheckOptions& opts) {
    return make_binomial_jobs(opts);
}
std::vector<CheckJob> plan_negative_control(const CheckOptions& opts) {
    return make_negative_control_jobs(opts);
}

const std::vector<CheckTarget>& check_registry() {
    static const std::vector<CheckTarget> reg = {
        {"intro", "rank two wedge minor factors on the tridiagonal chart, not generically",
         plan_intro},
        {"thm-main", "cluster monomials equal extremal minors on the standard chart",
         plan_thm_main},
        {"projections",
         "minors ignore the choice of vector, projection, lift word, and model",
         plan_projections},
        {"exchange", "chart values of the initial cluster satisfy the exchange relations",
         plan_exchange},
        {"maps", "front rewrite, halves swap, and boundary restriction identities",
         plan_maps},
        {"cambrian", "sortable counts, fan cones equal seed cones, cone reflection",
         plan_cambrian},
        {"minor-oracle", "the loop minor equals its closed double sum", plan_minor_oracle},
        {"basis", "constrained coefficient tables reproduce the displayed bases",
         plan_basis},
        {"binomials", "alternating binomial sum and diagonal coefficient reduction",
         plan_binomials},
        {"negative-control", "the affine boundary ray is not a cluster monomial degree",
         plan_negative_control},
    };
    return reg;
}

std::vector<CheckJob> plan_checks(const std::vector<std::string>& targets,
                                  const CheckOptions& opts) {
    std::vector<std::string> expanded;
    for (const std::string& t : targets) {
        if (t == "all") {
            for (const CheckTarget& reg : check_registry()) expanded.push_back(reg.name);
            continue;
        }
        expanded.push_back(t);
    }
    std::vector<CheckJob> jobs;
    for (const std::string& t : expanded) {
        bool known = false;
        for (const CheckTarget& reg : check_registry()) {
            if (reg.name != t) continue;
            known = true;
            for (CheckJob& j : reg.plan(opts)) jobs.push_back(std::move(j));
            break;
        }
        if (!known) throw std::invalid_argument("unknown verify target: " + t);
    }
    return jobs;
}

std::vector<CheckResult> run_jobs(const std::vector<CheckJob>& jobs, std::size_t workers) {
    std::vector<std::vector<CheckResult>> slots(jobs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            try {
                slots[i] = jobs[i].run();
            } catch (const std::exception& e) {
                CheckResult r;
                r.name = jobs[i].target;
                r.instance = jobs[i].label;
                r.status = CheckStatus::kFail;
                r.witness = std::string("exception: ") + e.what();
                slots[i] = {std::move(r)};
            }
        }
    };
    if (workers <= 1 || jobs.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        std::size_t count = std::min(workers, jobs.size());
        pool.reserve(count);
        for (std::size_t i = 0; i < count; ++i) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    std::vector<CheckResult> out;
    for (std::vector<CheckResult>& s : slots)
        for (CheckResult& r : s) out.push_back(std::move(r));
    return out;
}

std::size_t worker_count_from_env(std::size_t fallback) {
    std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    std::size_t want = fallback;
    if (const char* env = std::getenv("CAMBMIN_WORKERS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 1) want = static_cast<std::size_t>(v);
    }
    return std::min(want, hw);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (r.status == CheckStatus::kFail) return false;
    return true;
}

}  // namespace cambmin
