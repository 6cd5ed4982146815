#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torex/catalog.hpp"
#include "torex/identities.hpp"
#include "torex/io.hpp"

namespace torex {

/// A torus ready for analysis. Exactly one of `exact`, `floating`,
/// `real_only` is populated; `real_only` carries odd-dimensional real tori
/// (no complex structure, immersion-side checks only).
struct TorusInput {
    std::string label;
    std::optional<LatticeBasis<Rat>> exact;
    std::optional<LatticeBasis<double>> floating;
    std::optional<Mat<Rat>> real_only;
    std::vector<std::string> notes;

    bool complex_structure() const { return exact.has_value() || floating.has_value(); }
    bool exact_mode() const { return exact.has_value() || real_only.has_value(); }
};

TorusInput torus_from_catalog(const std::string& spec, double tol = 1e-9);
TorusInput torus_from_file(const std::string& path, double tol = 1e-9);

struct ReportOptions {
    int levels = 1;           // how many eigenvalue levels to list
    int k = 1;                // eigenvalue index targeted by the extremality check
    int identity_combos = 5;  // random combinations in the identity suite
    bool run_identities = true;
    bool run_oracle = true;
};

struct ReportResult {
    ordered_json json;
    std::string text;
    bool ambiguous = false;            // some verdict landed in the ambiguity band
    bool certificate_failure = false;  // internal re-verification or oracle cross-check failed
};

ReportResult emit_report(const TorusInput& torus, const ReportOptions& opts);

// Mode-dispatching operations on a TorusInput (exact / float / real-only),
// shared by the CLI and the Python bindings. Operations that need a complex
// structure throw DimensionMismatch on real-only tori.
struct CheckOutput;
ordered_json dual_json(const TorusInput& torus);
ordered_json spectrum_json(const TorusInput& torus, int count);
CheckOutput kahler_check_at(const TorusInput& torus, int k, bool run_oracle = true);
CheckOutput immersion_check_first(const TorusInput& torus, bool run_oracle = true);
IdentitySummary identity_suite_first(const TorusInput& torus, int combos,
                                     unsigned seed = 20260817u);
ordered_json derivative_check_json(const TorusInput& torus, const ParsedAlpha& alpha, int k,
                                   double h = 1e-4);

/// Enumerates enough levels that the multiplicity-counted index k is covered
/// (at least `at_least` levels either way).
template <class R>
std::vector<EigenLevel<R>> levels_covering_index(const DualLattice<R>& dual, int k,
                                                 int at_least = 1) {
    if (k < 1) throw IndexBeyondEnumeration("eigenvalue index must be >= 1");
    int count = std::max(1, at_least);
    for (;;) {
        auto levels = enumerate_levels(dual, count);
        int total = 0;
        for (const auto& level : levels) total += level.multiplicity();
        if (total >= k) return levels;
        count *= 2;
    }
}

/// Outcome of one feasibility check, ready for serialization.
struct CheckOutput {
    std::string status;  // "feasible" | "infeasible" | "ambiguous"
    ordered_json json;   // certificate + verification + oracle fields
    bool certificate_failure = false;

    bool ambiguous() const { return status == "ambiguous"; }
};

namespace detail {

template <class R>
void attach_oracle(CheckOutput& out, const FeasibilitySystem<R>& system, double tol) {
    try {
        const bool oracle_feasible = brute_force_oracle(system, tol);
        out.json["oracle_verdict"] = oracle_feasible ? "feasible" : "infeasible";
        if (out.status == "ambiguous") {
            out.json["oracle"] = "not conclusive (primary verdict ambiguous)";
        } else if ((out.status == "feasible") == oracle_feasible) {
            out.json["oracle"] = "agrees";
        } else {
            out.json["oracle"] = "disagrees";
            out.certificate_failure = true;
        }
    } catch (const TooLarge&) {
        out.json["oracle"] = "too large";
    }
}

template <class R>
struct SolvedSystem {
    CheckOutput out;
    std::optional<FeasibilityOutcome<R>> outcome;  // empty when ambiguous
};

template <class R>
SolvedSystem<R> solve_to_output(const FeasibilitySystem<R>& system, double tol) {
    SolvedSystem<R> solved;
    try {
        solved.outcome = solve_feasibility(system, tol);
    } catch (const NumericallyAmbiguous&) {
        solved.out.status = "ambiguous";
    }
    std::optional<VecX<R>> weights, farkas;
    std::optional<R> residual;
    if (solved.outcome) {
        if (solved.outcome->feasible()) {
            solved.out.status = "feasible";
            weights = solved.outcome->weights->weights;
            residual = solved.outcome->weights->residual;
        } else {
            solved.out.status = "infeasible";
            farkas = solved.outcome->farkas->y;
        }
    }
    solved.out.json = certificate_json(system, solved.out.status, weights, farkas, residual);
    return solved;
}

}  // namespace detail

/// Feasibility of the extremality system at one level, with certificate
/// re-verification against the eigenfunction calculus and an optional
/// brute-force cross-check.
template <class R>
CheckOutput kahler_check(const LatticeBasis<R>& lat, const EigenLevel<R>& level,
                         bool run_oracle = true) {
    const auto system = build_kahler_system(level, lat.n);
    auto solved = detail::solve_to_output(system, lat.tol);
    CheckOutput out = std::move(solved.out);
    if (out.status == "feasible") {
        try {
            const EigenBasis<R> basis(lat, level);
            const auto report = verify_certificate(level, *solved.outcome->weights, basis);
            out.json["verification"] =
                ordered_json{{"residual", scalar_json(report.residual)},
                             {"omega_scale", report.omega_scale.str()}};
        } catch (const CertificateRejected& e) {
            out.certificate_failure = true;
            out.json["verification"] = ordered_json{{"error", e.what()}};
        } catch (const CertificateInvalid& e) {
            out.certificate_failure = true;
            out.json["verification"] = ordered_json{{"error", e.what()}};
        }
    }
    if (multiplicity_shortcut(level, lat.n)) {
        out.json["shortcut"] = "not extremal (single dual pair with n >= 2)";
    }
    if (run_oracle) detail::attach_oracle(out, system, lat.tol);
    return out;
}

/// Feasibility of the first-eigenfunction immersion system for a level of an
/// m-dimensional real torus.
template <class R>
CheckOutput immersion_check(const EigenLevel<R>& level, int m, double tol,
                            bool run_oracle = true) {
    const auto system = build_immersion_system(level, m);
    CheckOutput out = detail::solve_to_output(system, tol).out;
    if (out.status == "feasible") {
        out.json["note"] = "weights are 4*pi^2 times the immersion coefficients c";
    }
    if (run_oracle) detail::attach_oracle(out, system, tol);
    return out;
}

}  // namespace torex
