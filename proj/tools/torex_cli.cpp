#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torex/report.hpp"

using namespace torex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitAmbiguous = 3;
constexpr int kExitCertificate = 4;

double resolve_tol(double flag_tol, bool flag_given) {
    if (flag_given) return flag_tol;
    if (const char* env = std::getenv("TORUS_EXTREMAL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("TORUS_EXTREMAL_TOL must be a positive number");
    }
    return 1e-9;
}

struct Source {
    std::string file;
    std::string catalog;

    TorusInput load(double tol) const {
        if (file.empty() == catalog.empty()) {
            throw ParseError("provide exactly one lattice source: --file PATH or --catalog SPEC");
        }
        return file.empty() ? torus_from_catalog(catalog, tol) : torus_from_file(file, tol);
    }
};

void add_source(CLI::App* cmd, Source& src) {
    cmd->add_option("--file", src.file, "lattice JSON file");
    cmd->add_option("--catalog", src.catalog, "catalog spec, e.g. checkerboard(4)");
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int exit_for(const CheckOutput& check) {
    if (check.certificate_failure) return kExitCertificate;
    if (check.ambiguous()) return kExitAmbiguous;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flat-torus extremality checker"};
    app.require_subcommand(1);

    Source src;
    double tol_flag = 1e-9;
    bool tol_given = false;
    app.add_option_function<double>(
           "--tol",
           [&](double v) {
               tol_flag = v;
               tol_given = true;
           },
           "float-mode tolerance (overrides TORUS_EXTREMAL_TOL)")
        ->expected(1);

    auto* dual_cmd = app.add_subcommand("dual", "print the dual lattice basis");
    add_source(dual_cmd, src);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "enumerate eigenvalue levels");
    add_source(spectrum_cmd, src);
    int levels = 3;
    spectrum_cmd->add_option("--levels", levels, "number of levels to list");

    auto* kahler_cmd =
        app.add_subcommand("check-kahler", "extremality feasibility system at lambda_k");
    add_source(kahler_cmd, src);
    int k = 1;
    kahler_cmd->add_option("--k", k, "eigenvalue index (multiplicity-counted, 1-based)");

    auto* immersion_cmd =
        app.add_subcommand("check-immersion", "first-eigenfunction immersion system");
    add_source(immersion_cmd, src);

    auto* identities_cmd =
        app.add_subcommand("verify-identities", "eigenfunction identity suite on level 1");
    add_source(identities_cmd, src);
    int combos = 5;
    identities_cmd->add_option("--combos", combos, "random eigenspace combinations to test");

    auto* derivative_cmd = app.add_subcommand(
        "derivative-check", "one-sided eigenvalue derivatives vs the Q-form extremes");
    add_source(derivative_cmd, src);
    std::string alpha_path;
    derivative_cmd->add_option("--alpha", alpha_path, "deformation direction JSON file")
        ->required();
    derivative_cmd->add_option("--k", k, "eigenvalue index (multiplicity-counted, 1-based)");
    double step = 1e-4;
    derivative_cmd->add_option("--step", step, "finite-difference step");

    auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog lattice as a file");
    std::string catalog_name;
    catalog_cmd->add_option("name", catalog_name, "entry, e.g. gamma_ab(2,3)");
    std::string catalog_params;
    catalog_cmd->add_option("--params", catalog_params, "comma-separated parameters");
    bool list_entries = false;
    catalog_cmd->add_flag("--list", list_entries, "list known entries");

    auto* report_cmd = app.add_subcommand("report", "full analysis report");
    add_source(report_cmd, src);
    bool as_json = false;
    report_cmd->add_flag("--json", as_json, "emit the JSON report");
    report_cmd->add_option("--k", k, "eigenvalue index for the extremality check");
    int report_levels = 1;
    report_cmd->add_option("--levels", report_levels, "levels to include");
    report_cmd->add_option("--combos", combos, "random combinations in the identity suite");
    bool no_oracle = false;
    report_cmd->add_flag("--no-oracle", no_oracle, "skip the brute-force cross-check");
    bool no_identities = false;
    report_cmd->add_flag("--no-identities", no_identities, "skip the identity suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        const double tol = resolve_tol(tol_flag, tol_given);

        if (catalog_cmd->parsed()) {
            if (list_entries) {
                for (const auto& line : catalog_names()) std::cout << line << "\n";
                return kExitOk;
            }
            if (catalog_name.empty()) {
                throw ParseError("catalog: provide an entry name or --list");
            }
            std::string spec = catalog_name;
            if (!catalog_params.empty()) spec += "(" + catalog_params + ")";
            print_json(lattice_json(catalog_lookup(spec)));
            return kExitOk;
        }

        const TorusInput torus = src.load(tol);

        if (dual_cmd->parsed()) {
            print_json(dual_json(torus));
            return kExitOk;
        }
        if (spectrum_cmd->parsed()) {
            print_json(spectrum_json(torus, levels));
            return kExitOk;
        }
        if (kahler_cmd->parsed()) {
            const CheckOutput check = kahler_check_at(torus, k);
            print_json(check.json);
            return exit_for(check);
        }
        if (immersion_cmd->parsed()) {
            const CheckOutput check = immersion_check_first(torus);
            print_json(check.json);
            return exit_for(check);
        }
        if (identities_cmd->parsed()) {
            const IdentitySummary summary = identity_suite_first(torus, combos);
            for (const auto& check : summary.checks) {
                std::cout << (check.pass ? "pass  " : "FAIL  ") << check.name << "\n";
            }
            std::cout << (summary.all_pass() ? "all identities hold\n"
                                             : "identity check FAILED\n");
            return summary.all_pass() ? kExitOk : kExitCertificate;
        }
        if (derivative_cmd->parsed()) {
            const ordered_json j =
                derivative_check_json(torus, parse_alpha_file(alpha_path), k, step);
            print_json(j);
            return j["pass"].get<bool>() ? kExitOk : kExitCertificate;
        }
        if (report_cmd->parsed()) {
            ReportOptions opts;
            opts.k = k;
            opts.levels = report_levels;
            opts.identity_combos = combos;
            opts.run_identities = !no_identities;
            opts.run_oracle = !no_oracle;
            const ReportResult result = emit_report(torus, opts);
            if (as_json) {
                print_json(result.json);
            } else {
                std::cout << result.text;
            }
            if (result.certificate_failure) return kExitCertificate;
            if (result.ambiguous) return kExitAmbiguous;
            return kExitOk;
        }
        return kExitOk;
    } catch (const NumericallyAmbiguous& e) {
        std::cerr << "ambiguous: " << e.what() << "\n";
        return kExitAmbiguous;
    } catch (const CertificateRejected& e) {
        std::cerr << "certificate rejected: " << e.what() << "\n";
        return kExitCertificate;
    } catch (const CertificateInvalid& e) {
        std::cerr << "certificate invalid: " << e.what() << "\n";
        return kExitCertificate;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
}
