// Command-line front end: census construction, Hopf verification suites, and
// enumerative tables (text or JSON).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "unihopf/census.hpp"
#include "unihopf/enumerative.hpp"
#include "unihopf/hopf.hpp"
#include "unihopf/instances.hpp"
#include "unihopf/morphisms.hpp"

using namespace unihopf;
using nlohmann::json;

namespace {

std::string default_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("UNIHOPF_CACHE_DIR")) return env;
    return "unihopf-cache";
}

int run_census(int n, std::uint32_t p, const std::string& cache_dir, std::uint64_t budget) {
    CensusProvider census(cache_dir, budget);
    auto cen = census.get(n, p);
    std::cout << "n=" << n << " p=" << p << " elements: " << cen->count
              << ", classes: " << cen->class_count()
              << ", superclasses: " << cen->superclass_count() << "\n";
    return 0;
}

struct VerifyConfig {
    std::string monoid;
    std::string basis = "kappa";  // kappa or lambda coordinates for fU/scfU
    int n_max = 4;
    std::uint32_t p = 2;
    std::string cache_dir;
    std::uint64_t budget = kDefaultCensusBudget;
    int jobs = 1;
    int expect_commutative = -1;    // -1 = use the instance's declaration
    int expect_cocommutative = -1;
};

template <class H>
CheckReport run_axioms(const H& h, const VerifyConfig& cfg) {
    if (cfg.expect_commutative < 0 && cfg.expect_cocommutative < 0)
        return check_hopf_axioms(h, cfg.n_max);
    // wrap the instance with overridden declarations
    struct Wrapped {
        const H* inner;
        bool comm, cocomm;
        using Key = typename H::Key;
        std::string name() const { return inner->name(); }
        bool commutative() const { return comm; }
        bool cocommutative() const { return cocomm; }
        std::vector<Key> basis(const Ground& g) const { return inner->basis(g); }
        Ground key_ground(const Key& k) const { return inner->key_ground(k); }
        Key relabel_key(const Key& k, const Bijection& b) const {
            return inner->relabel_key(k, b);
        }
        LinComb<Key> product(const Ground& s1, const Ground& s2, const Key& a,
                             const Key& b) const {
            return inner->product(s1, s2, a, b);
        }
        LinComb<std::pair<Key, Key>> coproduct(const Ground& s1, const Ground& s2,
                                               const Key& k) const {
            return inner->coproduct(s1, s2, k);
        }
        std::string key_str(const Key& k) const { return inner->key_str(k); }
    };
    Wrapped w{&h, cfg.expect_commutative < 0 ? h.commutative() : cfg.expect_commutative != 0,
              cfg.expect_cocommutative < 0 ? h.cocommutative() : cfg.expect_cocommutative != 0};
    return check_hopf_axioms(w, cfg.n_max);
}

std::vector<GeneratorImage<InstanceScfU>> scf_atomic_generators(const InstanceScfU& scf,
                                                                const Ground& g) {
    std::vector<GeneratorImage<InstanceScfU>> out;
    for (const auto& ord : enumerate_orders(g))
        for (const auto& d : enumerate_diagrams(ord, scf.modulus()))
            if (is_atomic(d.partition(), ord))
                out.push_back({"lambda_" + d.str(), scf_lambda_in_kappa(d)});
    return out;
}

int run_verify(const VerifyConfig& cfg) {
    CensusProvider census(cfg.cache_dir, cfg.budget);
    std::vector<std::function<CheckReport()>> tasks;

    if (cfg.monoid == "L") {
        tasks.push_back([&] { return run_axioms(InstanceL{}, cfg); });
    } else if (cfg.monoid == "Pi") {
        tasks.push_back([&] { return run_axioms(InstancePi{}, cfg); });
    } else if (cfg.monoid == "G") {
        tasks.push_back([&] { return run_axioms(InstanceG{}, cfg); });
    } else if (cfg.monoid == "LxPi") {
        tasks.push_back([&] { return run_axioms(InstanceLxPi(InstanceL{}, InstancePi{}), cfg); });
    } else if (cfg.monoid == "LxG") {
        tasks.push_back([&] { return run_axioms(InstanceLxG(InstanceL{}, InstanceG{}), cfg); });
    } else if (cfg.monoid == "fU") {
        if (cfg.basis == "lambda")
            tasks.push_back([&] { return run_axioms(InstanceFULambda(cfg.p), cfg); });
        else
            tasks.push_back([&] { return run_axioms(InstanceFU(cfg.p), cfg); });
        tasks.push_back([&] {
            InstanceL l;
            InstanceFU fu(cfg.p);
            InstanceLxG lg(l, InstanceG{});
            auto phi = morphism_phi_graphs(lg, fu);
            MorphismOptions mo;
            mo.check_injective = true;
            mo.check_bijective = cfg.p == 2;
            return check_morphism(phi, cfg.n_max, mo);
        });
        tasks.push_back([&] {
            InstanceL l;
            InstanceFU fu(cfg.p);
            return check_morphism(morphism_const_to_fU(l, fu), cfg.n_max,
                                  MorphismOptions{.check_injective = true});
        });
    } else if (cfg.monoid == "cfU") {
        tasks.push_back([&] { return run_axioms(InstanceCfU(census, cfg.p), cfg); });
        tasks.push_back([&] {
            InstanceCfU cf(census, cfg.p);
            InstanceFU fu(cfg.p);
            return check_morphism(morphism_incl_cf_f(cf, fu), cfg.n_max,
                                  MorphismOptions{.check_injective = true});
        });
    } else if (cfg.monoid == "scfU") {
        if (cfg.basis == "lambda")
            tasks.push_back([&] { return run_axioms(InstanceScfULambda(cfg.p), cfg); });
        else
            tasks.push_back([&] { return run_axioms(InstanceScfU(cfg.p), cfg); });
        tasks.push_back([&] {
            InstanceL l;
            InstanceScfU scf(cfg.p);
            InstanceLxPi lp(l, InstancePi{});
            auto phi = morphism_phi_partitions(lp, scf);
            MorphismOptions mo;
            mo.check_injective = true;
            mo.check_bijective = cfg.p == 2;
            return check_morphism(phi, cfg.n_max, mo);
        });
        tasks.push_back([&] {
            InstanceScfU scf(cfg.p);
            InstanceCfU cf(census, cfg.p);
            return check_morphism(morphism_incl_scf_cf(scf, cf), cfg.n_max,
                                  MorphismOptions{.check_injective = true});
        });
    } else if (cfg.monoid == "free-d") {
        tasks.push_back([&] {
            return run_axioms(FreeMonoid<AtomicDiagramSpecies>(AtomicDiagramSpecies(cfg.p)),
                              cfg);
        });
        tasks.push_back([&] {
            InstanceScfU scf(cfg.p);
            return freeness_certificate(
                scf, [&](const Ground& g) { return scf_atomic_generators(scf, g); }, cfg.n_max,
                "freeness of scfU on atomic generators");
        });
        // Eulerian images of the generators are primitive and sit above the
        // generator itself with unit coefficient
        tasks.push_back([&] {
            InstanceScfULambda scfl(cfg.p);
            CheckReport eul;
            eul.subject = "eulerian generators";
            for (int n = 1; n <= cfg.n_max; ++n) {
                const Ground I = standard_ground(n);
                for (const auto& d : AtomicDiagramSpecies(cfg.p).basis(I)) {
                    auto e = eulerian_apply(scfl, I, LinComb<ArcDiagram>::single(d));
                    ++eul.checks;
                    if (e.coeff(d) != Rational(1))
                        eul.fail("diagonal coefficient differs from 1 at " + d.str());
                    for (const auto& [k, c] : e.terms())
                        if (k != d && is_atomic(k.partition(), k.order()))
                            eul.fail("non-diagonal atomic term in e(" + d.str() + ")");
                    for (const auto& parts : enumerate_decompositions(I, 2, true)) {
                        LinComb<std::pair<ArcDiagram, ArcDiagram>> dd;
                        for (const auto& [k, c] : e.terms())
                            dd += scfl.coproduct(parts[0], parts[1], k).scaled(c);
                        ++eul.checks;
                        if (!dd.is_zero()) eul.fail("e image not primitive at " + d.str());
                    }
                }
            }
            return eul;
        });
    } else {
        std::cerr << "unknown monoid '" << cfg.monoid
                  << "' (expected one of L, Pi, G, fU, cfU, scfU, LxPi, LxG, free-d)\n";
        return 2;
    }

    // run the checks, possibly on worker threads; reports merge in task order so
    // the output does not depend on the schedule
    std::vector<CheckReport> reports(tasks.size());
    if (cfg.jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) reports[i] = tasks[i]();
    } else {
        std::vector<std::future<CheckReport>> futs;
        for (auto& t : tasks) futs.push_back(std::async(std::launch::async, t));
        for (std::size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
    }

    bool ok = true;
    for (const auto& r : reports) {
        std::cout << r.summary() << "\n";
        ok = ok && r.pass();
    }
    std::cout << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
    return ok ? 0 : 1;
}

struct TableRow {
    int n;
    std::string value;
};

void emit_table(const std::string& kind, std::uint32_t p, bool has_p,
                const std::vector<TableRow>& rows, const std::string& format) {
    if (format == "json") {
        json j;
        j["kind"] = kind;
        if (has_p) j["p"] = p;
        j["rows"] = json::array();
        for (const auto& r : rows) j["rows"].push_back({{"n", r.n}, {"value", r.value}});
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& r : rows) std::cout << "n=" << r.n << ": " << r.value << "\n";
    }
}

int run_tables(const std::string& kind, int n_max, int fit_n, std::uint32_t p,
               std::vector<std::uint32_t> primes, const std::string& format,
               const std::string& cache_dir, std::uint64_t budget) {
    CensusProvider census(cache_dir, budget);
    std::vector<TableRow> rows;
    bool ok = true;

    if (kind == "bell" || kind == "atomic") {
        auto ba = bell_and_atomic(n_max);
        for (int n = kind == "bell" ? 0 : 1; n <= n_max; ++n)
            rows.push_back({n, (kind == "bell" ? ba.bell[n] : ba.atomic[n]).get_str()});
        emit_table(kind, p, false, rows, format);
    } else if (kind == "k" || kind == "superclasses") {
        auto t = class_counts(census, p, n_max);
        for (int n = 0; n <= n_max; ++n)
            rows.push_back({n, (kind == "k" ? t.k[n] : t.superclasses[n]).get_str()});
        emit_table(kind, p, true, rows, format);
    } else if (kind == "c") {
        auto t = class_counts(census, p, n_max);
        auto c = c_sequence(t.k);
        for (int n = 1; n <= n_max; ++n) rows.push_back({n, c[n].get_str()});
        emit_table(kind, p, true, rows, format);
    } else if (kind == "inequality") {
        auto t = class_counts(census, p, n_max);
        auto ba = bell_and_atomic(n_max);
        auto rep = check_counting_inequality(t.k, ba.atomic, n_max);
        for (const auto& r : rep.rows)
            rows.push_back({r.n, r.lhs.get_str() + " >= " + r.rhs.get_str() + " (margin " +
                                     r.margin.get_str() + ")"});
        ok = rep.all_hold();
        emit_table(kind, p, true, rows, format);
    } else if (kind == "inequality2") {
        auto t = class_counts(census, p, n_max);
        auto c = c_sequence(t.k);
        auto rep = check_counting2(p, c, n_max);
        for (const auto& r : rep.rows)
            rows.push_back({r.n, r.lhs.get_str() + " >= " + r.rhs.get_str() + " (margin " +
                                     r.margin.get_str() + ")"});
        ok = rep.all_hold();
        emit_table(kind, p, true, rows, format);
    } else if (kind == "fit") {
        auto fit = fit_conjecture(census, fit_n, primes);
        rows.push_back({fit_n, fit.poly.str()});
        ok = fit.nonnegative;
        emit_table(kind, p, false, rows, format);
    } else if (kind == "lagrange") {
        // quotients of type series: cf/scf, scf/LxPi, cf/LxPi
        InstanceCfU cf(census, p);
        InstanceScfU scf(p);
        InstanceLxPi lp{InstanceL{}, InstancePi{}};
        auto ts_cf = type_series(cf, n_max);
        auto ts_scf = type_series(scf, n_max);
        auto ts_lp = type_series(lp, n_max);
        for (auto [label, num, den] :
             {std::tuple{"cf/scf", ts_cf, ts_scf}, std::tuple{"scf/LxPi", ts_scf, ts_lp},
              std::tuple{"cf/LxPi", ts_cf, ts_lp}}) {
            auto rep = lagrange_quotient_check(num, den);
            std::string line = std::string(label) + ":";
            for (const auto& q : rep.quotient) line += " " + q.str();
            line += rep.nonnegative_integers() ? "  [nonnegative integers]" : "  [VIOLATION]";
            rows.push_back({n_max, line});
            ok = ok && rep.nonnegative_integers();
        }
        emit_table(kind, p, true, rows, format);
    } else {
        std::cerr << "unknown table kind '" << kind << "'\n";
        return 2;
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hopf monoids of (super)class functions on unitriangular groups"};
    app.require_subcommand(1);

    std::string cache_flag;
    std::uint64_t budget = kDefaultCensusBudget;
    app.add_option("--cache-dir", cache_flag,
                   "census cache directory (default: $UNIHOPF_CACHE_DIR or ./unihopf-cache)");
    app.add_option("--budget", budget, "maximum census size in group elements");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for verify (output is schedule-independent)")
        ->check(CLI::PositiveNumber);

    auto* census_cmd = app.add_subcommand("census", "build or load a census and print counts");
    int cn = 3;
    std::uint32_t cp = 2;
    census_cmd->add_option("--n", cn, "matrix size")->required();
    census_cmd->add_option("--p", cp, "prime field size")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run the Hopf axiom/morphism checks");
    VerifyConfig vc;
    verify_cmd->add_option("--monoid", vc.monoid, "L, Pi, G, fU, cfU, scfU, LxPi, LxG, free-d")
        ->required();
    verify_cmd->add_option("--n-max", vc.n_max, "largest ground size");
    verify_cmd->add_option("--p", vc.p, "prime field size");
    verify_cmd->add_option("--basis", vc.basis, "kappa or lambda coordinates for fU/scfU")
        ->check(CLI::IsMember({"kappa", "lambda"}));
    bool expect_comm = false, expect_cocomm = false;
    verify_cmd->add_flag("--expect-commutative", expect_comm,
                         "require the product to be commutative");
    verify_cmd->add_flag("--expect-cocommutative", expect_cocomm,
                         "require the coproduct to be cocommutative");

    auto* tables_cmd = app.add_subcommand("tables", "emit counting tables and reports");
    std::string kind, format = "table";
    int n_max = 6, fit_n = 4;
    std::uint32_t tp = 2;
    std::vector<std::uint32_t> primes{2, 3, 5, 7};
    tables_cmd
        ->add_option("--kind", kind,
                     "bell, atomic, k, superclasses, c, inequality, inequality2, fit, lagrange")
        ->required();
    tables_cmd->add_option("--n-max", n_max, "largest n");
    tables_cmd->add_option("--n", fit_n, "n for --kind fit");
    tables_cmd->add_option("--p", tp, "prime field size");
    tables_cmd->add_option("--primes", primes, "primes for --kind fit")->delimiter(',');
    tables_cmd->add_option("--format", format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));

    CLI11_PARSE(app, argc, argv);
    const std::string cache_dir = default_cache_dir(cache_flag);

    try {
        if (census_cmd->parsed()) return run_census(cn, cp, cache_dir, budget);
        if (verify_cmd->parsed()) {
            vc.cache_dir = cache_dir;
            vc.budget = budget;
            vc.jobs = jobs;
            if (expect_comm) vc.expect_commutative = 1;
            if (expect_cocomm) vc.expect_cocommutative = 1;
            return run_verify(vc);
        }
        if (tables_cmd->parsed())
            return run_tables(kind, n_max, fit_n, tp, primes, format, cache_dir, budget);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
