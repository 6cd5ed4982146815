#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torex/lattice.hpp"

namespace torex {

/// A lattice produced by the built-in catalog. Entries with rational data
/// carry an exact basis; entries with trigonometric data carry a float basis.
/// Odd-dimensional real tori have no complex structure: `n` is absent and
/// only the immersion-side checks apply.
struct CatalogLattice {
    std::string name;                        // canonical echo, e.g. "checkerboard(4)"
    std::optional<int> n;                    // complex dimension, when one exists
    std::optional<Mat<Rat>> exact_basis;     // columns are generators
    std::optional<Mat<double>> float_basis;  // set instead when entries are irrational
    std::vector<std::string> notes;          // published claims and recorded discrepancies

    bool exact() const { return exact_basis.has_value(); }
    bool kahler_supported() const { return n.has_value(); }

    int real_dim() const {
        return static_cast<int>(exact() ? exact_basis->rows() : float_basis->rows());
    }

    /// The basis as doubles regardless of mode.
    Mat<double> float_matrix() const;

    /// Complex-torus views; require kahler_supported() and the matching mode.
    LatticeBasis<Rat> exact_lattice() const;
    LatticeBasis<double> float_lattice(double tol = 1e-9) const;
};

/// Parses a catalog spec string and builds the lattice. Grammar:
///   standard(n)            n >= 1                  Z^{2n}, exact
///   checkerboard(m)        m >= 3                  D_m; complex only for even m
///   gamma_ab(a,b)          rationals a, b > 1      rectangular family, exact
///   gamma_t(t)             0 < t < pi/12           trigonometric family, float
///   product(e1,e2)         nested entries          block-diagonal product
///   scaled(e,s)            rational s > 0          basis scaled by s
/// Throws UnknownEntry for unknown names, ParameterOutOfRange for parameters
/// outside their documented ranges, ParseError for malformed spec strings.
CatalogLattice catalog_lookup(const std::string& spec);

/// One-line usage summaries for the CLI.
const std::vector<std::string>& catalog_names();

}  // namespace torex
