#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torex/eigenbasis.hpp"

namespace torex {

enum class SystemKind { Kahler, Immersion };

inline const char* system_kind_name(SystemKind k) {
    return k == SystemKind::Kahler ? "kahler" : "immersion";
}

/// Linear feasibility system  A x = b, x >= 0  over real scalars; complex
/// constraints are already split into real and imaginary rows.
///
/// Kahler (system over weights R_nu): diagonal rows first (alpha = 1..n,
/// sum_nu R_nu |w_nu^alpha|^2 = 1), then for each alpha < beta in
/// lexicographic order the real and imaginary parts of
/// sum_nu R_nu conj(w_nu^alpha) w_nu^beta = 0.
///
/// Immersion (variables c_nu): the distinct entries of
/// 4 pi^2 sum_nu c_nu u_nu u_nu^T = I_m. To keep exact arithmetic rational
/// the tabulated columns drop the 4 pi^2 factor, so the solved variables are
/// y_nu = 4 pi^2 c_nu; diagonal rows (i = j) first, then i < j
/// lexicographic.
template <class R>
struct FeasibilitySystem {
    Mat<R> A;
    VecX<R> b;
    SystemKind kind = SystemKind::Kahler;
    std::vector<std::string> row_names;
    std::vector<std::string> var_names;

    Eigen::Index rows() const { return A.rows(); }
    Eigen::Index cols() const { return A.cols(); }
};

template <class R>
FeasibilitySystem<R> build_kahler_system(const EigenLevel<R>& level, int n) {
    using T = scalar_traits<R>;
    const int l = level.l();
    if (l == 0) throw DimensionMismatch("level has no representatives");
    if (level.reps[0].size() != 2 * n) {
        throw DimensionMismatch("representatives do not live in R^{2n}");
    }
    FeasibilitySystem<R> out;
    out.kind = SystemKind::Kahler;
    const Eigen::Index m = n + static_cast<Eigen::Index>(n) * (n - 1);
    out.A = Mat<R>::Zero(m, l);
    out.b = VecX<R>::Zero(m);
    Eigen::Index r = 0;
    for (int a = 1; a <= n; ++a, ++r) {
        for (int nu = 0; nu < l; ++nu) {
            out.A(r, nu) = complex_coord<R>(level.reps[nu], a).norm_sq();
        }
        out.b[r] = T::one();
        out.row_names.push_back("diag(" + std::to_string(a) + ")");
    }
    for (int a = 1; a <= n; ++a) {
        for (int c = a + 1; c <= n; ++c, r += 2) {
            for (int nu = 0; nu < l; ++nu) {
                const Complex<R> prod =
                    complex_coord<R>(level.reps[nu], a).conj() * complex_coord<R>(level.reps[nu], c);
                out.A(r, nu) = prod.re;
                out.A(r + 1, nu) = prod.im;
            }
            out.row_names.push_back("re(" + std::to_string(a) + "," + std::to_string(c) + ")");
            out.row_names.push_back("im(" + std::to_string(a) + "," + std::to_string(c) + ")");
        }
    }
    for (int nu = 1; nu <= l; ++nu) out.var_names.push_back("R_" + std::to_string(nu));
    return out;
}

template <class R>
FeasibilitySystem<R> build_immersion_system(const EigenLevel<R>& level, int m) {
    using T = scalar_traits<R>;
    const int l = level.l();
    if (l == 0) throw DimensionMismatch("level has no representatives");
    if (level.reps[0].size() != m) {
        throw DimensionMismatch("representatives do not live in R^m");
    }
    FeasibilitySystem<R> out;
    out.kind = SystemKind::Immersion;
    out.A = Mat<R>::Zero(static_cast<Eigen::Index>(m) * (m + 1) / 2, l);
    out.b = VecX<R>::Zero(out.A.rows());
    Eigen::Index r = 0;
    for (int i = 0; i < m; ++i, ++r) {
        for (int nu = 0; nu < l; ++nu) {
            const R& ui = level.reps[nu][i];
            out.A(r, nu) = ui * ui;
        }
        out.b[r] = T::one();
        out.row_names.push_back("diag(" + std::to_string(i + 1) + ")");
    }
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j, ++r) {
            for (int nu = 0; nu < l; ++nu) {
                out.A(r, nu) = level.reps[nu][i] * level.reps[nu][j];
            }
            out.row_names.push_back("offdiag(" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
        }
    }
    for (int nu = 1; nu <= l; ++nu) out.var_names.push_back("c_" + std::to_string(nu));
    return out;
}

template <class R>
struct WeightCertificate {
    VecX<R> weights;
    R residual{};  // max |A.R - b| entry
};

template <class R>
struct FarkasCertificate {
    VecX<R> y;  // y^T A <= 0 entrywise and y^T b > 0
};

template <class R>
struct SolveStats {
    long pivots = 0;
    R phase1_optimum{};
};

template <class R>
struct FeasibilityOutcome {
    std::optional<WeightCertificate<R>> weights;
    std::optional<FarkasCertificate<R>> farkas;
    SolveStats<R> stats;

    bool feasible() const { return weights.has_value(); }
};

template <class R>
R weight_residual(const FeasibilitySystem<R>& S, const VecX<R>& w) {
    using T = scalar_traits<R>;
    if (w.size() != S.cols()) throw DimensionMismatch("weight vector length mismatch");
    const VecX<R> r = S.A * w - S.b;
    R worst = T::zero();
    for (Eigen::Index i = 0; i < r.size(); ++i) worst = std::max(worst, T::abs(r[i]));
    return worst;
}

/// Checks y^T A <= 0 entrywise and y^T b > 0 (within `tol` in float mode).
template <class R>
bool farkas_valid(const FeasibilitySystem<R>& S, const VecX<R>& y, double tol) {
    using T = scalar_traits<R>;
    if (y.size() != S.rows()) throw DimensionMismatch("Farkas vector length mismatch");
    const VecX<R> yA = S.A.transpose() * y;
    for (Eigen::Index j = 0; j < yA.size(); ++j) {
        if constexpr (T::exact) {
            if (yA[j] > 0) return false;
        } else {
            if (T::to_double(yA[j]) > tol) return false;
        }
    }
    const R yb = y.dot(S.b);
    if constexpr (T::exact) {
        return yb > 0;
    } else {
        return T::to_double(yb) > tol;
    }
}

namespace detail {

template <class R>
struct SimplexResult {
    bool zero_optimum = false;  // phase-1 optimum reached zero (to tolerance)
    VecX<R> x;                  // basic solution of the original system
    VecX<R> y;                  // Farkas multipliers for the original system
    R optimum{};
    long pivots = 0;
};

/// Phase-1 simplex for {x >= 0 : Ax = b} with Bland's anti-cycling rule.
/// Exact scalars compare exactly; float scalars use `tol` on pivots and
/// ratios. Returns both the basic solution and the dual multipliers so the
/// caller can pick a weight or Farkas certificate.
template <class R>
SimplexResult<R> phase1_simplex(Mat<R> A, VecX<R> b, double tol) {
    using T = scalar_traits<R>;
    const Eigen::Index m = A.rows();
    const Eigen::Index l = A.cols();

    std::vector<int> flip(m, 1);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (b[i] < 0) {
            A.row(i) = -A.row(i);
            b[i] = -b[i];
            flip[i] = -1;
        }
    }

    // Tableau [A | I | b] with the artificial slack basis; slack columns hold
    // B^{-1}, which is where the Farkas multipliers are read off at the end.
    Mat<R> tab(m, l + m + 1);
    tab.leftCols(l) = A;
    tab.middleCols(l, m) = Mat<R>::Identity(m, m);
    tab.col(l + m) = b;
    std::vector<Eigen::Index> basis(m);
    for (Eigen::Index i = 0; i < m; ++i) basis[i] = l + i;

    const auto negative = [&](const R& v) {
        if constexpr (T::exact) {
            return v < 0;
        } else {
            return T::to_double(v) < -tol;
        }
    };
    const auto positive = [&](const R& v) {
        if constexpr (T::exact) {
            return v > 0;
        } else {
            return T::to_double(v) > tol;
        }
    };

    SimplexResult<R> res;
    const long pivot_cap = 100000;
    for (;;) {
        // Reduced costs r_j = c_j - c_B . tab(:,j) with c = (0,...,0, 1,...,1).
        VecX<R> mult = VecX<R>::Zero(m);  // c_B B^{-1}, accumulated row-wise
        for (Eigen::Index i = 0; i < m; ++i) {
            if (basis[i] >= l) mult[i] = T::one();
        }
        Eigen::Index entering = -1;
        for (Eigen::Index j = 0; j < l + m && entering < 0; ++j) {
            R rc = j >= l ? T::one() : T::zero();
            for (Eigen::Index i = 0; i < m; ++i) {
                if (basis[i] >= l) rc -= tab(i, j);
            }
            if (negative(rc)) entering = j;  // Bland: first improving index
        }
        if (entering < 0) break;

        Eigen::Index leaving = -1;
        R best_ratio{};
        for (Eigen::Index i = 0; i < m; ++i) {
            if (!positive(tab(i, entering))) continue;
            const R ratio = tab(i, l + m) / tab(i, entering);
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leaving])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) {
            // The phase-1 objective is bounded below by zero, so an unbounded
            // ray can only arise from tolerance misjudgment in float mode.
            if constexpr (T::exact) {
                throw CertificateInvalid("phase-1 simplex reported an unbounded ray");
            } else {
                throw NumericallyAmbiguous("phase-1 simplex lost boundedness to rounding");
            }
        }

        const R pivot = tab(leaving, entering);
        tab.row(leaving) /= pivot;
        for (Eigen::Index i = 0; i < m; ++i) {
            if (i == leaving) continue;
            const R f = tab(i, entering);
            if constexpr (T::exact) {
                if (f == 0) continue;
            }
            tab.row(i) -= f * tab.row(leaving);
        }
        basis[leaving] = entering;
        if (++res.pivots > pivot_cap) {
            if constexpr (T::exact) {
                throw CertificateInvalid("phase-1 simplex exceeded the pivot cap");
            } else {
                throw NumericallyAmbiguous("phase-1 simplex cycled under float tolerances");
            }
        }
    }

    R z = T::zero();
    for (Eigen::Index i = 0; i < m; ++i) {
        if (basis[i] >= l) z += tab(i, l + m);
    }
    res.optimum = z;
    if constexpr (T::exact) {
        res.zero_optimum = z == 0;
    } else {
        res.zero_optimum = T::to_double(z) <= tol;
    }

    res.x = VecX<R>::Zero(l);
    for (Eigen::Index i = 0; i < m; ++i) {
        if (basis[i] < l) res.x[basis[i]] = tab(i, l + m);
    }

    // Farkas multipliers y' = c_B B^{-1} read from the slack columns; undo
    // the row sign flips to act on the original system.
    res.y = VecX<R>::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        R acc = T::zero();
        for (Eigen::Index k = 0; k < m; ++k) {
            if (basis[k] >= l) acc += tab(k, l + i);
        }
        res.y[i] = flip[i] == 1 ? acc : R(-acc);
    }
    return res;
}

/// Rescales to max-norm 1 for deterministic, scale-free certificates.
template <class R>
void normalize_max_abs(VecX<R>& v) {
    using T = scalar_traits<R>;
    R peak = T::zero();
    for (Eigen::Index i = 0; i < v.size(); ++i) peak = std::max(peak, T::abs(v[i]));
    if (!T::is_zero(peak, 0.0)) v /= peak;
}

/// Structurally infeasible rows (e.g. 0 = 1) admit a single-row witness;
/// prefer it over the simplex duals, which may carry degenerate-basis noise.
template <class R>
std::optional<VecX<R>> trivial_farkas(const FeasibilitySystem<R>& S, double tol) {
    using T = scalar_traits<R>;
    for (Eigen::Index i = 0; i < S.rows(); ++i) {
        for (int sign : {1, -1}) {
            VecX<R> y = VecX<R>::Zero(S.rows());
            y[i] = T::from_long(sign);
            if (farkas_valid(S, y, tol)) return y;
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides {x >= 0 : Ax = b} by phase-1 simplex and re-verifies whichever
/// certificate comes out. Exact mode is fully rational; float mode uses `tol`
/// on pivots and flags near-boundary verdicts as NumericallyAmbiguous instead
/// of asserting them.
template <class R>
FeasibilityOutcome<R> solve_feasibility(const FeasibilitySystem<R>& S, double tol = 1e-9) {
    using T = scalar_traits<R>;
    auto res = detail::phase1_simplex<R>(S.A, S.b, tol);
    FeasibilityOutcome<R> out;
    out.stats.pivots = res.pivots;
    out.stats.phase1_optimum = res.optimum;

    if constexpr (T::exact) {
        if (res.zero_optimum) {
            const R residual = weight_residual(S, res.x);
            bool nonneg = true;
            for (Eigen::Index i = 0; i < res.x.size(); ++i) nonneg = nonneg && res.x[i] >= 0;
            if (residual != 0 || !nonneg) {
                throw CertificateInvalid("exact weight certificate failed re-verification");
            }
            out.weights = WeightCertificate<R>{std::move(res.x), residual};
        } else {
            if (auto trivial = detail::trivial_farkas(S, 0.0)) {
                res.y = std::move(*trivial);
            } else {
                detail::normalize_max_abs(res.y);
            }
            if (!farkas_valid(S, res.y, 0.0)) {
                throw CertificateInvalid("exact Farkas certificate failed re-verification");
            }
            out.farkas = FarkasCertificate<R>{std::move(res.y)};
        }
        return out;
    } else {
        const double boundary = 1e-6;  // ambiguity band around the feasibility boundary
        const double z = T::to_double(res.optimum);
        if (z <= boundary) {
            // Candidate weight certificate; it must stand on its own at the
            // solver tolerance, not at the looser boundary.
            for (Eigen::Index i = 0; i < res.x.size(); ++i) {
                if (res.x[i] < 0 && res.x[i] > -tol) res.x[i] = 0.0;
            }
            const R residual = weight_residual(S, res.x);
            bool nonneg = true;
            for (Eigen::Index i = 0; i < res.x.size(); ++i) nonneg = nonneg && res.x[i] >= 0;
            if (T::to_double(residual) > tol || !nonneg) {
                throw NumericallyAmbiguous(
                    "phase-1 optimum sits near zero but the weight certificate failed "
                    "re-verification");
            }
            out.weights = WeightCertificate<R>{std::move(res.x), residual};
        } else {
            if (auto trivial = detail::trivial_farkas(S, tol)) {
                res.y = std::move(*trivial);
            } else {
                detail::normalize_max_abs(res.y);
            }
            if (!farkas_valid(S, res.y, tol)) {
                throw CertificateInvalid("float Farkas certificate failed re-verification");
            }
            out.farkas = FarkasCertificate<R>{std::move(res.y)};
        }
        return out;
    }
}

/// Short-circuit verdict from the eigenspace dimension alone: a level with a
/// single antipodal pair on a torus of complex dimension >= 2 can never
/// satisfy the diagonal rows for every coordinate, so the metric is not
/// extremal for that eigenvalue. Empty when the shortcut is silent.
enum class ShortcutVerdict { NotExtremal };

template <class R>
std::optional<ShortcutVerdict> multiplicity_shortcut(const EigenLevel<R>& level, int n) {
    if (level.l() == 1 && n >= 2) return ShortcutVerdict::NotExtremal;
    return std::nullopt;
}

/// Successful verification report; verify_certificate throws otherwise.
template <class R>
struct CertificateReport {
    R residual{};              // check (i): max |A.R - b|
    PiScalar<R> omega_scale;   // check (ii): the a > 0 with the weighted sum = -a.omega
};

/// Three independent checks that a weight vector certifies extremality:
///   (i)   it solves the constraint system exactly (to tol in float mode),
///   (ii)  the weighted sum of projected pair forms is a negative multiple of
///         the Kahler form,
///   (iii) the weighted sum of pair L-images vanishes.
/// Throws CertificateRejected naming the failing check.
template <class R>
CertificateReport<R> verify_certificate(const EigenLevel<R>& level,
                                        const WeightCertificate<R>& cert,
                                        const EigenBasis<R>& basis) {
    using T = scalar_traits<R>;
    const int l = level.l();
    const int n = basis.n();
    const double tol = basis.tol();
    if (cert.weights.size() != l) {
        throw CertificateRejected("check (i): weight count does not match the level");
    }
    for (Eigen::Index i = 0; i < cert.weights.size(); ++i) {
        if (cert.weights[i] < 0) {
            throw CertificateRejected("check (i): negative weight at index " + std::to_string(i));
        }
    }

    const FeasibilitySystem<R> S = build_kahler_system(level, n);
    const R residual = weight_residual(S, cert.weights);
    const bool system_ok = T::exact ? residual == 0 : T::to_double(residual) <= tol;
    if (!system_ok) {
        throw CertificateRejected("check (i): constraint residual " + T::str(residual));
    }

    Form11<R> sum(n, basis.volume(), tol);
    for (int nu = 0; nu < l; ++nu) {
        if (T::is_zero(cert.weights[nu], 0.0)) continue;
        sum = sum + basis.pair_harmonic(nu).scaled(cert.weights[nu]);
    }
    // sum must equal -a.omega; omega has i/2 on the diagonal, so a is read
    // off the (1,1) entry as 2i times its constant coefficient.
    const PiScalar<R> a = sum.entry(0, 0).zero_mode().scaled(Complex<R>(T::zero(), T::from_long(2)));
    const Form11<R> defect = sum + Form11<R>::kahler(n, basis.volume(), tol).scaled(a);
    bool harmonic_ok = a.is_real(tol) && a.definite_sign(tol) == 1;
    for (int p = 0; p < n && harmonic_ok; ++p) {
        for (int q = 0; q < n && harmonic_ok; ++q) {
            harmonic_ok = defect.entry(p, q).is_zero(tol);
        }
    }
    if (!harmonic_ok) {
        throw CertificateRejected(
            "check (ii): weighted harmonic sum is not a negative multiple of the Kahler form");
    }

    TrigPoly<R> lsum(n, basis.volume(), tol);
    for (int nu = 0; nu < l; ++nu) {
        if (T::is_zero(cert.weights[nu], 0.0)) continue;
        lsum = lsum + basis.pair_l(nu).scaled(cert.weights[nu]);
    }
    if (!lsum.is_zero(tol)) {
        throw CertificateRejected("check (iii): weighted L-sum does not vanish");
    }

    return CertificateReport<R>{residual, a};
}

/// Exhaustive feasibility decision for desk-scale systems: every column
/// subset of size <= rows is solved exactly and tested for a nonnegative
/// solution with zero residual. Independent of the simplex code path.
template <class R>
bool brute_force_oracle(const FeasibilitySystem<R>& S, double tol = 1e-9) {
    using T = scalar_traits<R>;
    const Eigen::Index m = S.rows();
    const Eigen::Index l = S.cols();
    if (l > 14 || m > 40) {
        throw TooLarge("brute-force oracle is limited to 14 columns and 40 rows");
    }

    const auto consistent = [&](const VecX<R>& x, const Mat<R>& cols_mat) {
        const VecX<R> r = cols_mat * x - S.b;
        for (Eigen::Index i = 0; i < r.size(); ++i) {
            if (!T::is_zero(r[i], tol)) return false;
        }
        for (Eigen::Index i = 0; i < x.size(); ++i) {
            if constexpr (T::exact) {
                if (x[i] < 0) return false;
            } else {
                if (T::to_double(x[i]) < -tol) return false;
            }
        }
        return true;
    };

    // Empty subset: feasible iff b = 0 (covers the no-constraints case too).
    bool b_zero = true;
    for (Eigen::Index i = 0; i < m; ++i) b_zero = b_zero && T::is_zero(S.b[i], tol);
    if (b_zero) return true;

    const int max_size = static_cast<int>(std::min<Eigen::Index>(l, m));
    for (unsigned mask = 1; mask < (1u << l); ++mask) {
        const int k = __builtin_popcount(mask);
        if (k > max_size) continue;
        Mat<R> sub(m, k);
        int c = 0;
        for (Eigen::Index j = 0; j < l; ++j) {
            if (mask & (1u << j)) sub.col(c++) = S.A.col(j);
        }
        const Eigen::FullPivLU<Mat<R>> lu(sub);
        const VecX<R> x = lu.solve(S.b);
        if (consistent(x, sub)) return true;
    }
    return false;
}

}  // namespace torex
