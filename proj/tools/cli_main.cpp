// Command line front end: fan / sortable / mutate / monomial enumeration
// plus the named verification targets and coefficient table dumps. All
// report output is exact; JSON reports are one object per line.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cambmin/cambrian.hpp"
#include "cambmin/cartan.hpp"
#include "cambmin/checks.hpp"
#include "cambmin/laurent.hpp"
#include "cambmin/level0.hpp"
#include "cambmin/seed.hpp"
#include "cambmin/weyl.hpp"

using cambmin::BasisKind;
using cambmin::CartanData;
using cambmin::CheckOptions;
using cambmin::CheckResult;
using cambmin::CheckStatus;
using cambmin::Weight;
using json = nlohmann::json;

namespace {

std::vector<long> parse_longs(const std::string& text, const char* what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("malformed ") + what + ": '" + tok + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
    return out;
}

// 1-based generator list on the command line, 0-based internally
std::vector<int> parse_cox(const CartanData& cd, const std::string& text) {
    std::vector<int> cox;
    for (long v : parse_longs(text, "Coxeter word")) cox.push_back(static_cast<int>(v) - 1);
    cambmin::check_coxeter_word(cd, cox);
    return cox;
}

Weight parse_gvec(const CartanData& cd, const std::string& text) {
    std::vector<long> c = parse_longs(text, "g-vector");
    if (c.size() != cd.n)
        throw std::invalid_argument("g-vector needs " + std::to_string(cd.n) + " coordinates");
    return Weight{c};
}

std::vector<int> default_cox(const CartanData& cd) {
    std::vector<int> cox;
    for (std::size_t i = 0; i < cd.n; ++i) cox.push_back(static_cast<int>(i));
    return cox;
}

std::string cox_display(const std::vector<int>& cox) {
    std::string s;
    for (std::size_t i = 0; i < cox.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cox[i] + 1);
    }
    return s;
}

struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    explicit Sink(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::invalid_argument("cannot open output file: " + path);
        out = &file;
    }
    std::ostream& os() { return *out; }
};

// shared flags; every subcommand binds the subset it understands
struct Flags {
    std::string type;
    std::string cartan_file;
    std::string cox;
    std::string gvec;
    std::string kind;
    std::string format = "json";
    std::string out;
    int bound = -1;
    std::size_t n = 0;
    std::uint64_t seed = 0x5eed;
    bool timings = false;
    bool list_checks = false;
    std::vector<std::string> targets;
};

CartanData flags_cartan(const Flags& f, const char* fallback = "A2") {
    if (!f.cartan_file.empty()) return cambmin::cartan_from_json_file(f.cartan_file);
    if (!f.type.empty()) return cambmin::cartan_registry(f.type);
    return cambmin::cartan_registry(fallback);
}

int cmd_fan(const Flags& f) {
    CartanData cd = flags_cartan(f);
    std::vector<int> cox = f.cox.empty() ? default_cox(cd) : parse_cox(cd, f.cox);
    std::size_t bound = f.bound < 0 ? 8 : static_cast<std::size_t>(f.bound);
    Sink sink(f.out);

    auto fan = cambmin::doubled_fan(cd, cox, bound);
    if (f.format == "csv") sink.os() << "sign,source,ray\n";
    for (const cambmin::CambrianCone& cone : fan) {
        const char* sign = cone.sign == cambmin::ConeSign::kPlus ? "plus" : "minus";
        if (f.format == "json") {
            json j;
            j["sign"] = sign;
            j["source"] = cone.source.word_str();
            json rays = json::array();
            for (const Weight& g : cone.generators) rays.push_back(g.c);
            j["rays"] = rays;
            sink.os() << j.dump() << "\n";
        } else if (f.format == "csv") {
            for (const Weight& g : cone.generators) {
                std::string ray;
                for (std::size_t i = 0; i < g.c.size(); ++i)
                    ray += (i ? " " : "") + std::to_string(g.c[i]);
                sink.os() << sign << ',' << cone.source.word_str() << ',' << ray << "\n";
            }
        } else {
            sink.os() << sign << "  " << cone.source.word_str() << "  rays:";
            for (const Weight& g : cone.generators) sink.os() << ' ' << g.str();
            sink.os() << "\n";
        }
    }
    if (f.format == "text") sink.os() << fan.size() << " maximal cones\n";
    return 0;
}

int cmd_sortable(const Flags& f) {
    CartanData cd = flags_cartan(f);
    std::vector<int> cox = f.cox.empty() ? default_cox(cd) : parse_cox(cd, f.cox);
    std::size_t bound = f.bound < 0 ? 8 : static_cast<std::size_t>(f.bound);
    Sink sink(f.out);

    auto sortables = cambmin::enumerate_sortables(cd, cox, bound);
    if (f.format == "csv") sink.os() << "word,length\n";
    for (const cambmin::WeylElement& w : sortables) {
        if (f.format == "json") {
            json j;
            j["word"] = w.word_str();
            j["length"] = w.length();
            sink.os() << j.dump() << "\n";
        } else if (f.format == "csv") {
            sink.os() << w.word_str() << ',' << w.length() << "\n";
        } else {
            sink.os() << w.word_str() << "\n";
        }
    }
    if (f.format == "text") sink.os() << sortables.size() << " sortable elements\n";
    return 0;
}

int cmd_mutate(const Flags& f) {
    CartanData cd = flags_cartan(f);
    std::vector<int> cox = f.cox.empty() ? default_cox(cd) : parse_cox(cd, f.cox);
    std::size_t bound = f.bound < 0 ? 6 : static_cast<std::size_t>(f.bound);
    Sink sink(f.out);

    cambmin::ClusterModel model(cd, cox);
    auto seeds = model.closure(bound);
    if (f.format == "csv") sink.os() << "path,gvecs\n";
    for (const cambmin::Seed& s : seeds) {
        std::string path;
        for (std::size_t i = 0; i < s.path.size(); ++i)
            path += (i ? " " : "") + std::to_string(s.path[i] + 1);
        if (f.format == "json") {
            json j;
            j["path"] = s.path;
            json gv = json::array();
            for (const Weight& g : s.gvecs) gv.push_back(g.c);
            j["gvecs"] = gv;
            json vars = json::array();
            for (const cambmin::LaurentPoly& v : s.vars) vars.push_back(v.str());
            j["vars"] = vars;
            sink.os() << j.dump() << "\n";
        } else {
            std::string gv;
            for (const Weight& g : s.gvecs) gv += g.str();
            if (f.format == "csv")
                sink.os() << path << ',' << gv << "\n";
            else
                sink.os() << "path [" << path << "]  gvecs " << gv << "\n";
        }
    }
    if (f.format == "text") sink.os() << seeds.size() << " seeds\n";
    return 0;
}

int cmd_monomial(const Flags& f) {
    CartanData cd = flags_cartan(f);
    std::vector<int> cox = f.cox.empty() ? default_cox(cd) : parse_cox(cd, f.cox);
    if (f.gvec.empty()) throw std::invalid_argument("monomial requires --gvec");
    Weight lam = parse_gvec(cd, f.gvec);
    std::size_t depth = f.bound < 0 ? 10 : static_cast<std::size_t>(f.bound);
    Sink sink(f.out);

    cambmin::ClusterModel model(cd, cox);
    auto mono = model.find_monomial(lam, depth);
    if (f.format == "json") {
        json j;
        j["gvec"] = lam.c;
        j["found"] = mono.has_value();
        if (mono) {
            j["value"] = mono->value.str();
            j["path"] = mono->seed.path;
            json expo = json::array();
            for (const auto& [slot, power] : mono->exponents)
                expo.push_back(json::array({slot, power}));
            j["exponents"] = expo;
        }
        sink.os() << j.dump() << "\n";
    } else if (mono) {
        sink.os() << "g-vector " << lam.str() << "\nvalue " << mono->value.str() << "\n";
    } else {
        sink.os() << "g-vector " << lam.str() << ": no cluster monomial within depth "
                  << depth << "\n";
    }
    return mono ? 0 : 1;
}

json result_json(const CheckResult& r, bool timings) {
    json j;
    j["check"] = r.name;
    j["instance"] = r.instance;
    j["status"] = cambmin::status_str(r.status);
    if (r.status == CheckStatus::kFail) j["witness"] = r.witness;
    if (timings) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string csv_quote(const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

// the detailed per-entry coefficient table emitted by `verify basis` when a
// table size is pinned down on the command line
void emit_basis_tables(std::ostream& os, const Flags& f) {
    std::vector<BasisKind> kinds;
    if (f.kind.empty() || f.kind == "all")
        kinds = {BasisKind::kGreedy, BasisKind::kTriangular, BasisKind::kGeneric};
    else if (f.kind == "greedy")
        kinds = {BasisKind::kGreedy};
    else if (f.kind == "triangular")
        kinds = {BasisKind::kTriangular};
    else if (f.kind == "generic")
        kinds = {BasisKind::kGeneric};
    else
        throw std::invalid_argument("unknown basis kind: " + f.kind);

    auto kind_str = [](BasisKind k) {
        return k == BasisKind::kGreedy       ? "greedy"
               : k == BasisKind::kTriangular ? "triangular"
                                             : "generic";
    };

    for (BasisKind kind : kinds) {
        auto ev = cambmin::basis_e_values(kind, f.n);
        std::vector<cambmin::LaurentPoly> s;
        for (std::size_t r = 0; r <= f.n / 2; ++r)
            s.push_back(cambmin::s_from_e(f.n, ev, r));
        for (std::size_t m = 0; m <= f.n; ++m)
            for (std::size_t k = 0; k <= m; ++k) {
                cambmin::LaurentPoly table = cambmin::d_coeff(f.n, m, k, s);
                cambmin::Rat display = cambmin::basis_coeff(kind, f.n, m, k);
                bool ok = table.is_constant() && table.constant_term() == display;
                if (f.format == "json") {
                    json j;
                    j["check"] = "basis-table";
                    j["instance"] = std::string("kind=") + kind_str(kind) +
                                    " n=" + std::to_string(f.n) + " m=" + std::to_string(m) +
                                    " k=" + std::to_string(k);
                    j["m"] = m;
                    j["k"] = k;
                    j["kind"] = kind_str(kind);
                    j["table"] = table.str();
                    j["display"] = cambmin::rat_str(display);
                    j["status"] = ok ? "pass" : "fail";
                    os << j.dump() << "\n";
                } else {
                    os << kind_str(kind) << " (" << m << "," << k << ") table=" << table.str()
                       << " display=" << cambmin::rat_str(display)
                       << (ok ? "" : "  MISMATCH") << "\n";
                }
            }
    }
}

int cmd_verify(const Flags& f) {
    if (f.list_checks) {
        Sink sink(f.out);
        for (const cambmin::CheckTarget& t : cambmin::check_registry())
            sink.os() << t.name << ": " << t.coverage << "\n";
        return 0;
    }

    CheckOptions opts;
    if (!f.type.empty()) opts.type = f.type;
    if (!f.cartan_file.empty()) opts.cartan_json = f.cartan_file;
    if (!f.cox.empty()) opts.cox = parse_cox(flags_cartan(f), f.cox);
    if (f.bound >= 0) opts.bound = f.bound;
    if (f.n > 0) opts.n = f.n;
    if (!f.kind.empty()) opts.kind = f.kind;
    opts.seed = f.seed;

    std::vector<std::string> targets = f.targets.empty()
                                           ? std::vector<std::string>{"all"}
                                           : f.targets;
    auto jobs = cambmin::plan_checks(targets, opts);
    std::size_t workers = cambmin::worker_count_from_env(
        std::max<std::size_t>(1, std::thread::hardware_concurrency()));
    std::vector<CheckResult> results = cambmin::run_jobs(jobs, workers);

    Sink sink(f.out);
    bool want_tables = f.n > 0;
    for (const std::string& t : targets)
        want_tables = want_tables && (t == "basis");
    if (want_tables) emit_basis_tables(sink.os(), f);

    std::size_t failed = 0;
    if (f.format == "csv") sink.os() << "check,instance,status,witness\n";
    for (const CheckResult& r : results) {
        if (r.status == CheckStatus::kFail) ++failed;
        if (f.format == "json") {
            sink.os() << result_json(r, f.timings).dump() << "\n";
        } else if (f.format == "csv") {
            sink.os() << r.name << ',' << csv_quote(r.instance) << ','
                      << cambmin::status_str(r.status) << ',' << csv_quote(r.witness) << "\n";
        } else {
            sink.os() << '[' << cambmin::status_str(r.status) << "] " << r.name << ": "
                      << r.instance;
            if (f.timings) {
                char buf[32];
                std::snprintf(buf, sizeof buf, " (%.1fms)", r.elapsed_ms);
                sink.os() << buf;
            }
            sink.os() << "\n";
            if (r.status == CheckStatus::kFail) sink.os() << "  witness: " << r.witness << "\n";
        }
    }
    if (f.format == "text")
        sink.os() << results.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

int cmd_tables(const Flags& f) {
    if (f.n == 0) throw std::invalid_argument("tables requires --n");
    Sink sink(f.out);

    std::vector<std::pair<BasisKind, const char*>> kinds = {
        {BasisKind::kGreedy, "greedy"},
        {BasisKind::kTriangular, "triangular"},
        {BasisKind::kGeneric, "generic"},
    };
    if (!f.kind.empty() && f.kind != "all") {
        std::vector<std::pair<BasisKind, const char*>> pick;
        for (const auto& [kind, name] : kinds)
            if (f.kind == name) pick.push_back({kind, name});
        if (pick.empty()) throw std::invalid_argument("unknown basis kind: " + f.kind);
        kinds = pick;
    }

    if (f.format == "csv" || f.format == "text") sink.os() << "kind,m,k,coefficient\n";
    for (const auto& [kind, name] : kinds) {
        auto ev = cambmin::basis_e_values(kind, f.n);
        std::vector<cambmin::LaurentPoly> s;
        for (std::size_t r = 0; r <= f.n / 2; ++r)
            s.push_back(cambmin::s_from_e(f.n, ev, r));
        for (std::size_t m = 0; m <= f.n; ++m)
            for (std::size_t k = 0; k <= m; ++k) {
                cambmin::LaurentPoly d = cambmin::d_coeff(f.n, m, k, s);
                if (f.format == "json") {
                    json j;
                    j["kind"] = name;
                    j["m"] = m;
                    j["k"] = k;
                    j["coefficient"] = d.str();
                    sink.os() << j.dump() << "\n";
                } else {
                    sink.os() << name << ',' << m << ',' << k << ',' << d.str() << "\n";
                }
            }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checks for chart minors, Cambrian fans, and loop coefficient tables"};
    app.require_subcommand(1);

    Flags f;
    auto add_common = [&](CLI::App* sub, bool with_bound = true) {
        sub->add_option("--type", f.type, "Cartan type from the registry (A2, A3, B2, ...)");
        sub->add_option("--cartan", f.cartan_file, "JSON file with a custom Cartan matrix");
        sub->add_option("--cox", f.cox, "Coxeter word as 1-based generators, e.g. 1,2");
        sub->add_option("--out", f.out, "write output to this file instead of stdout");
        sub->add_option("--format", f.format, "output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        if (with_bound)
            sub->add_option("--bound", f.bound,
                            "length/depth/box bound (subcommand specific default)");
    };

    CLI::App* fan = app.add_subcommand("fan", "maximal cones of the doubled fan");
    add_common(fan);

    CLI::App* sortable = app.add_subcommand("sortable", "sortable elements up to a length");
    add_common(sortable);

    CLI::App* mutate = app.add_subcommand("mutate", "mutation closure of the initial seed");
    add_common(mutate);

    CLI::App* monomial =
        app.add_subcommand("monomial", "locate the cluster monomial with a given degree");
    add_common(monomial);
    monomial->add_option("--gvec", f.gvec, "degree coordinates, e.g. -1,1");

    CLI::App* verify = app.add_subcommand("verify", "run named verification targets");
    add_common(verify);
    verify->add_option("targets", f.targets, "targets (default: all; see --list-checks)");
    verify->add_option("--n", f.n, "coefficient table size for the basis target");
    verify->add_option("--kind", f.kind, "basis kind: greedy, triangular, generic, all");
    verify->add_option("--seed", f.seed, "random seed for sampled checks");
    verify->add_flag("--timings", f.timings, "include elapsed milliseconds in reports");
    verify->add_flag("--list-checks", f.list_checks,
                     "print the verify targets and what each one covers");

    CLI::App* tables = app.add_subcommand("tables", "coefficient tables under each regime");
    tables->add_option("--n", f.n, "table size")->required();
    tables->add_option("--kind", f.kind, "basis kind: greedy, triangular, generic, all");
    tables->add_option("--out", f.out, "write output to this file instead of stdout");
    tables->add_option("--format", f.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(fan)) return cmd_fan(f);
        if (app.got_subcommand(sortable)) return cmd_sortable(f);
        if (app.got_subcommand(mutate)) return cmd_mutate(f);
        if (app.got_subcommand(monomial)) return cmd_monomial(f);
        if (app.got_subcommand(verify)) return cmd_verify(f);
        if (app.got_subcommand(tables)) return cmd_tables(f);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
