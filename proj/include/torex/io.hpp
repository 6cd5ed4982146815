#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "torex/catalog.hpp"
#include "torex/deformation.hpp"
#include "torex/feasibility.hpp"

namespace torex {

using ordered_json = nlohmann::ordered_json;

/// A lattice read from a file: exactly one of the two modes is populated.
struct ParsedLattice {
    std::optional<LatticeBasis<Rat>> exact;
    std::optional<LatticeBasis<double>> floating;

    bool exact_mode() const { return exact.has_value(); }
};

/// Lattice file format:
///   { "n": int, "mode": "exact"|"float", "basis": [[entry x 2n] x 2n] }
/// with entry = rational string "p/q" (exact) or number (float); row index is
/// the real coordinate, column index the generator. Alternatively
/// "complex_basis": 2n rows of n pairs [re, im], one row per generator.
/// Exact mode iff every entry is a rational string; mixing kinds is rejected.
ParsedLattice parse_lattice_json(const ordered_json& j, double tol = 1e-9);
ParsedLattice parse_lattice_file(const std::string& path, double tol = 1e-9);

/// Canonical rational rendering "p/q" (or "p" for integers).
std::string rat_str(const Rat& v);

ordered_json scalar_json(const Rat& v);
ordered_json scalar_json(double v);

template <class R>
ordered_json vec_json(const VecX<R>& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(scalar_json(v[i]));
    return arr;
}

template <class R>
ordered_json basis_json(const Mat<R>& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Lattice-file JSON for a catalog entry (round-trips through
/// parse_lattice_json when the entry has a complex structure).
ordered_json lattice_json(const CatalogLattice& entry);

/// One eigenvalue level, serialized with its representatives.
template <class R>
ordered_json level_json(const EigenLevel<R>& level, int index) {
    ordered_json j;
    j["index"] = index;
    j["squared_norm"] = scalar_json(level.squared_norm);
    j["lambda"] = level.lambda().str();
    j["lambda_value"] = level.lambda_value();
    j["l"] = level.l();
    j["multiplicity"] = level.multiplicity();
    ordered_json reps = ordered_json::array();
    for (const auto& r : level.reps) reps.push_back(vec_json<R>(r));
    j["reps"] = std::move(reps);
    return j;
}

/// Certificate serialization:
///   { "status": ..., "weights"|"farkas": [...], "residual": ...,
///     "system": { "rows": m, "cols": l, "kind": "kahler"|"immersion" } }
template <class R>
ordered_json certificate_json(const FeasibilitySystem<R>& system,
                              const std::string& status,
                              const std::optional<VecX<R>>& weights,
                              const std::optional<VecX<R>>& farkas,
                              const std::optional<R>& residual) {
    ordered_json j;
    j["status"] = status;
    if (weights) j["weights"] = vec_json(*weights);
    if (farkas) j["farkas"] = vec_json(*farkas);
    if (residual) j["residual"] = scalar_json(*residual);
    j["system"] = {{"rows", system.rows()},
                   {"cols", system.cols()},
                   {"kind", system.kind == SystemKind::Kahler ? "kahler" : "immersion"}};
    return j;
}

ordered_json derivative_json(const DerivativeReport& report, const ordered_json& alpha_echo);

/// Deformation-direction file:
///   { "n": int, "hermitian": [[entry x n] x n] }
/// with entry = rational string "p/q" (real) or pair [re, im] of rational
/// strings. The direction used is alpha = i * H.
struct ParsedAlpha {
    int n = 0;
    std::vector<Complex<Rat>> hermitian;  // row-major
    ordered_json echo;
};
ParsedAlpha parse_alpha_json(const ordered_json& j);
ParsedAlpha parse_alpha_file(const std::string& path);

/// Builds the deformation direction alpha = i * H over the requested scalar.
template <class R>
HarmonicDeformation<R> deformation_from_alpha(const ParsedAlpha& alpha, R volume,
                                              double tol = 1e-9) {
    std::vector<Complex<R>> coeffs;
    coeffs.reserve(alpha.hermitian.size());
    for (const auto& h : alpha.hermitian) {
        Complex<R> c;
        if constexpr (scalar_traits<R>::exact) {
            c = h;
        } else {
            c = Complex<double>(scalar_traits<Rat>::to_double(h.re),
                                scalar_traits<Rat>::to_double(h.im));
        }
        coeffs.push_back(Complex<R>::i() * c);
    }
    return HarmonicDeformation<R>(Form11<R>::constant(alpha.n, std::move(volume), coeffs, tol));
}

}  // namespace torex
