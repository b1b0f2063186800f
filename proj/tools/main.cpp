// isoflow: exact verification suites and utilities for the rational
// symmetries of factored second-order operators.
//
//   isoflow verify <suite> [--order N] [--digits D] [--degree-cap C] [--json]
//   isoflow solve --system main --a1 81 --order 24
//   isoflow hunt --a1 625 [--system main] [--maxdeg 25] [--order 60]
//   isoflow pade-sing --preset P [--order 200] [--digits 40]
//   isoflow catalog [--export NAME]
//
// exit codes: 0 all checks pass, 1 any failure, 2 configuration error

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isoflow/catalog.hpp"
#include "isoflow/conjugation.hpp"
#include "isoflow/padehunt.hpp"
#include "isoflow/report.hpp"
#include "isoflow/rotabaxter.hpp"

using namespace isoflow;

namespace {

int cmd_verify(const std::string& suite, SuiteConfig cfg, bool json, bool timings) {
    cfg.timings = timings;
    std::vector<std::string> names;
    if (suite == "all") {
        names.push_back("all");
    } else {
        names.push_back(suite);
    }
    SuiteReport rep = run_suite(names.front(), cfg);
    std::cout << (json ? rep.to_json() : rep.to_text()) << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_solve(const std::string& system, const std::string& a1s, int order) {
    CovariantSystem<Rat> sys = system_by_name(system);
    Rat a1 = rat_from_string(a1s);
    FlowSeries<Rat> f = flow_solve(sys, a1, order);
    std::cout << f.series.str(order) << "\n";
    return 0;
}

int cmd_hunt(const std::string& system, const std::string& a1s, int maxdeg, int order) {
    CovariantSystem<Rat> sys = system_by_name(system);
    Rat a1 = rat_from_string(a1s);
    auto r = rational_hunt(sys, a1, maxdeg, order);
    if (!r) {
        std::cout << "not found up to degree " << maxdeg << "\n";
        return 1;
    }
    std::cout << r->str() << "\n";
    return 0;
}

int cmd_pade_sing(const std::string& preset, int order, unsigned digits) {
    TruncatedSeries<Rat> f;
    if (preset == "P") {
        f = p_series(order);
    } else if (preset == "S") {
        f = inverse_branch(iterate_Rm4(1), order);
    } else if (preset == "geometric") {
        f = rfq({1}, {1, -1}).series(order);
    } else {
        std::cerr << "unknown preset: " << preset << " (want P, S or geometric)\n";
        return 2;
    }
    auto est = singularity_scan(f, digits);
    PrecisionGuard g(digits + kGuardDigits);
    std::cout << "stable singularity estimates (" << est.size() << "):\n";
    for (const auto& e : est) {
        std::cout << "  " << e.location.re.str(12, std::ios_base::fixed);
        if (e.location.im != 0)
            std::cout << (e.location.im > 0 ? " + " : " - ")
                      << abs(e.location.im).str(12, std::ios_base::fixed) << " i";
        std::cout << "  |.| = " << e.modulus.str(12, std::ios_base::fixed);
        if (e.lattice_match)
            std::cout << "  lattice (m1,m2) = (" << e.lattice_match->first << ","
                      << e.lattice_match->second << ")";
        std::cout << "\n";
    }
    return 0;
}

int cmd_catalog(const std::string& export_name) {
    const Catalog& cat = main_catalog();
    if (export_name.empty()) {
        for (const auto& e : cat.rational)
            std::cout << e.name << "  (field Q, a1 = " << FieldTraits<Rat>::str(e.a1)
                      << ", degree " << e.R.degree() << ")\n";
        for (const auto& e : cat.gaussian)
            std::cout << e.name << "  (field Q(i), a1 = " << FieldTraits<GaussRat>::str(e.a1)
                      << ", degree " << e.R.degree() << ")\n";
        return 0;
    }
    auto dump = [](const auto& e) {
        nlohmann::json j;
        j["name"] = e.name;
        auto poly = [](const auto& p) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : p.coeffs()) arr.push_back(FieldTraits<
                std::decay_t<decltype(c)>>::str(c));
            return arr;
        };
        j["num"] = poly(e.R.num());
        j["den"] = poly(e.R.den());
        std::cout << j.dump(2) << "\n";
    };
    if (const auto* e = find_entry(cat.rational, export_name)) {
        dump(*e);
        return 0;
    }
    if (const auto* e = find_entry(cat.gaussian, export_name)) {
        dump(*e);
        return 0;
    }
    std::cerr << "no catalog entry named " << export_name << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of rational symmetries of factored operators"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    bool json = false, timings = false;
    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--order", cfg.order, "series truncation order");
    verify->add_option("--digits", cfg.digits, "working decimal digits");
    verify->add_option("--degree-cap", cfg.degree_cap, "exact-composition degree cap");
    verify->add_flag("--json", json, "emit a JSON report");
    verify->add_flag("--timings", timings, "include per-check timings in the report");

    std::string system = "main", a1 = "81";
    int order = 24, maxdeg = 10;
    auto* solve = app.add_subcommand("solve", "print a flow series");
    solve->add_option("--system", system, "covariant system preset");
    solve->add_option("--a1", a1, "multiplier (rational)");
    solve->add_option("--order", order, "series order");

    std::string hsystem = "main", ha1 = "81";
    int horder = 60, hmaxdeg = 10;
    auto* hunt = app.add_subcommand("hunt", "rational reconstruction of a flow member");
    hunt->add_option("--system", hsystem, "covariant system preset");
    hunt->add_option("--a1", ha1, "multiplier (rational)")->required();
    hunt->add_option("--maxdeg", hmaxdeg, "maximum numerator degree");
    hunt->add_option("--order", horder, "series order to reconstruct from");

    std::string preset = "P";
    int sorder = 200;
    unsigned sdigits = 40;
    auto* sing = app.add_subcommand("pade-sing", "singularity scan of a series preset");
    sing->add_option("--preset", preset, "series preset: P, S, geometric");
    sing->add_option("--order", sorder, "series order");
    sing->add_option("--digits", sdigits, "working decimal digits");

    std::string export_name;
    auto* catalog = app.add_subcommand("catalog", "list or export catalog entries");
    catalog->add_option("--export", export_name, "entry name to export as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(suite, cfg, json, timings);
        if (solve->parsed()) return cmd_solve(system, a1, order);
        if (hunt->parsed()) return cmd_hunt(hsystem, ha1, hmaxdeg, horder);
        if (sing->parsed()) return cmd_pade_sing(preset, sorder, sdigits);
        if (catalog->parsed()) return cmd_catalog(export_name);
    } catch (const BadConfig& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const UnknownSuite& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
