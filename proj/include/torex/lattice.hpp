#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "torex/linalg.hpp"

namespace torex {

/// Full-rank lattice in C^n, stored over R^{2n} with interleaved coordinates
/// (Re z^1, Im z^1, ..., Re z^n, Im z^n). Columns of `basis` are generators.
template <class R>
struct LatticeBasis {
    int n = 0;
    Mat<R> basis;
    double tol = 1e-9;  // float-mode comparison tolerance; ignored in exact mode

    LatticeBasis() = default;
    LatticeBasis(int n_, Mat<R> basis_, double tol_ = 1e-9)
        : n(n_), basis(std::move(basis_)), tol(tol_) {
        if (n < 1) throw DimensionMismatch("complex dimension must be >= 1");
        if (basis.rows() != 2 * n || basis.cols() != 2 * n) {
            throw DimensionMismatch("basis must be 2n x 2n");
        }
        if constexpr (scalar_traits<R>::exact) {
            if (mat_det(basis) == 0) throw SingularBasis("lattice basis is singular");
        } else {
            if (!Eigen::FullPivLU<Mat<double>>(basis).isInvertible()) {
                throw SingularBasis("lattice basis is numerically singular");
            }
        }
    }

    int real_dim() const { return 2 * n; }

    /// |det B| = volume of the torus R^{2n} / lattice.
    R volume() const {
        R d = mat_det(basis);
        return d < 0 ? R(-d) : d;
    }
};

/// Dual lattice basis: columns pair integrally against the primal generators.
template <class R>
struct DualLattice {
    int n = 0;
    Mat<R> basis;
    double tol = 1e-9;

    int real_dim() const { return 2 * n; }
};

/// Inverse-transpose of the primal basis; the columns generate
/// { w : Re(<gamma, w>) in Z for every lattice vector gamma }.
template <class R>
DualLattice<R> dual_basis(const LatticeBasis<R>& lat) {
    return DualLattice<R>{lat.n, mat_inverse<R>(lat.basis.transpose()), lat.tol};
}

template <class R>
Mat<R> gram_matrix(const Mat<R>& basis) {
    return basis.transpose() * basis;
}

/// One Laplacian eigenvalue level: lambda = 4 pi^2 * squared_norm, together
/// with one representative per antipodal pair of dual vectors realizing it.
/// Representatives are canonical (first nonzero coordinate positive) and
/// sorted lexicographically; the eigenspace dimension is 2 * reps.size().
template <class R>
struct EigenLevel {
    R squared_norm{};
    std::vector<VecX<R>> reps;

    int l() const { return static_cast<int>(reps.size()); }
    int multiplicity() const { return 2 * l(); }
    PiScalar<R> lambda() const {
        return PiScalar<R>::monomial(Complex<R>(squared_norm * scalar_traits<R>::from_long(4)), 2);
    }
    double lambda_value() const {
        return 4.0 * PiScalar<R>::pi_value() * PiScalar<R>::pi_value() *
               scalar_traits<R>::to_double(squared_norm);
    }
};

namespace detail {

/// Quadratic-form coefficients for Fincke-Pohst: Q(x) = sum_i q[i][i] *
/// (x_i + sum_{j>i} q[i][j] x_j)^2. Division-only, so exact over rationals.
template <class R>
Mat<R> fp_decompose(Mat<R> q) {
    const auto m = q.rows();
    for (Eigen::Index i = 0; i < m; ++i) {
        if (!(q(i, i) > 0)) throw SingularBasis("Gram matrix is not positive definite");
        // eliminate with the raw row i, then normalize it to the mu factors
        for (Eigen::Index k = i + 1; k < m; ++k) {
            for (Eigen::Index l = k; l < m; ++l) q(k, l) -= q(i, k) * q(i, l) / q(i, i);
        }
        for (Eigen::Index j = i + 1; j < m; ++j) q(i, j) = q(i, j) / q(i, i);
    }
    return q;
}

template <class R>
struct FpContext {
    const Mat<R>& q;
    const R& bound;
    std::size_t cap;
    std::size_t count = 0;
    std::vector<long> x;
    std::vector<std::pair<R, std::vector<long>>> found;
};

/// Integer range [lo, hi] with q*(t + u)^2 <= budget, located by a floating
/// guess and fixed up with exact comparisons.
template <class R>
std::pair<long, long> fp_range(const R& q, const R& u, const R& budget) {
    using T = scalar_traits<R>;
    const double radius = std::sqrt(std::max(0.0, T::to_double(budget) / T::to_double(q)));
    const double center = -T::to_double(u);
    auto fits = [&](long t) {
        const R s = T::from_long(t) + u;
        return q * s * s <= budget;
    };
    long hi = static_cast<long>(std::floor(center + radius));
    while (fits(hi + 1)) ++hi;
    while (hi >= static_cast<long>(std::ceil(center - radius)) - 2 && !fits(hi)) --hi;
    long lo = static_cast<long>(std::ceil(center - radius));
    while (fits(lo - 1)) --lo;
    while (lo <= hi && !fits(lo)) ++lo;
    return {lo, hi};
}

template <class R>
void fp_recurse(FpContext<R>& ctx, int i, const R& used) {
    const auto m = ctx.q.rows();
    R u = scalar_traits<R>::zero();
    for (Eigen::Index j = i + 1; j < m; ++j) {
        u += ctx.q(i, j) * scalar_traits<R>::from_long(ctx.x[j]);
    }
    const R budget = ctx.bound - used;
    const auto [lo, hi] = fp_range<R>(ctx.q(i, i), u, budget);
    for (long t = lo; t <= hi; ++t) {
        ctx.x[i] = t;
        const R s = scalar_traits<R>::from_long(t) + u;
        const R used2 = used + ctx.q(i, i) * s * s;
        if (i == 0) {
            if (std::all_of(ctx.x.begin(), ctx.x.end(), [](long v) { return v == 0; })) continue;
            if (++ctx.count > ctx.cap) {
                throw EnumerationOverflow("short-vector candidate cap exceeded");
            }
            ctx.found.emplace_back(used2, ctx.x);
        } else {
            fp_recurse(ctx, i - 1, used2);
        }
    }
}

/// All nonzero integer coefficient vectors with x^T G x <= bound.
template <class R>
std::vector<std::pair<R, std::vector<long>>> fp_enumerate(const Mat<R>& gram, const R& bound,
                                                          std::size_t cap) {
    FpContext<R> ctx{fp_decompose<R>(gram), bound, cap};
    ctx.x.assign(gram.rows(), 0);
    fp_recurse(ctx, static_cast<int>(gram.rows()) - 1, scalar_traits<R>::zero());
    return ctx.found;
}

template <class R>
bool lex_less(const VecX<R>& a, const VecX<R>& b) {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (b[i] < a[i]) return false;
    }
    return false;
}

/// Flips the sign so the first coordinate that is nonzero (beyond tol) is
/// positive; this picks one representative per antipodal pair.
template <class R>
VecX<R> canonical_rep(VecX<R> u, double tol) {
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (scalar_traits<R>::is_zero(u[i], tol)) continue;
        if (u[i] < 0) u = -u;
        break;
    }
    return u;
}

}  // namespace detail

/// Options for enumerate_levels; `cap` bounds the candidate count.
struct EnumerateOptions {
    std::size_t cap = 1'000'000;
};

/// The `count` smallest distinct nonzero squared norms on the lattice
/// spanned by the columns of `dual_basis` (any real dimension), each with its
/// complete set of antipodal-pair representatives. Float mode groups norms
/// within relative tolerance `tol`.
template <class R>
std::vector<EigenLevel<R>> enumerate_levels_basis(const Mat<R>& dual_basis, double tol, int count,
                                                  const EnumerateOptions& opts = {}) {
    using T = scalar_traits<R>;
    if (count <= 0) return {};
    const Mat<R> gram = gram_matrix<R>(dual_basis);

    R bound = gram(0, 0);
    for (Eigen::Index i = 1; i < gram.rows(); ++i) bound = std::min(bound, gram(i, i));

    // Grow the search radius until `count` distinct norm groups are inside,
    // then re-enumerate with a bound that provably covers the last group.
    for (;;) {
        const auto cands = detail::fp_enumerate<R>(gram, bound, opts.cap);
        std::vector<R> values;
        values.reserve(cands.size());
        for (const auto& [v, x] : cands) values.push_back(v);
        std::sort(values.begin(), values.end());
        int distinct = 0;
        R target = bound;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i == 0 || !T::eq(values[i], values[i - 1], tol)) {
                if (++distinct == count) target = values[i];
            }
        }
        if (distinct >= count) {
            bound = target;
            break;
        }
        bound = bound * T::from_long(2);
    }
    if constexpr (!scalar_traits<R>::exact) {
        bound += tol * std::max(1.0, bound);  // keep tolerance-equal stragglers inside
    }
    auto cands = detail::fp_enumerate<R>(gram, bound, opts.cap);

    std::sort(cands.begin(), cands.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<EigenLevel<R>> levels;
    for (const auto& [value, x] : cands) {
        const bool new_level = levels.empty() || !T::eq(value, levels.back().squared_norm, tol);
        if (new_level) {
            if (static_cast<int>(levels.size()) == count) break;
            levels.push_back(EigenLevel<R>{value, {}});
        }
        VecX<R> u = VecX<R>::Zero(dual_basis.rows());
        for (Eigen::Index j = 0; j < dual_basis.cols(); ++j) {
            if (x[j] != 0) u += dual_basis.col(j) * T::from_long(x[j]);
        }
        levels.back().reps.push_back(detail::canonical_rep<R>(std::move(u), tol));
    }

    for (auto& level : levels) {
        std::sort(level.reps.begin(), level.reps.end(), detail::lex_less<R>);
        level.reps.erase(std::unique(level.reps.begin(), level.reps.end(),
                                     [&](const VecX<R>& a, const VecX<R>& b) {
                                         for (Eigen::Index i = 0; i < a.size(); ++i) {
                                             if (!T::eq(a[i], b[i], tol)) return false;
                                         }
                                         return true;
                                     }),
                         level.reps.end());
    }
    return levels;
}

/// The `count` smallest levels of the dual lattice of a complex torus.
template <class R>
std::vector<EigenLevel<R>> enumerate_levels(const DualLattice<R>& dual, int count,
                                            const EnumerateOptions& opts = {}) {
    return enumerate_levels_basis<R>(dual.basis, dual.tol, count, opts);
}

/// Locates the level containing the multiplicity-counted eigenvalue index k
/// (1-based over the positive spectrum). The flags drive the one-sided
/// derivative predictions: lambda_k > lambda_{k-1} iff k is the first index
/// of its level (k = 1 counts, since lambda_1 > 0), lambda_k < lambda_{k+1}
/// iff k is the last index of its level.
struct LevelIndexInfo {
    int level_index;  // 0-based into the enumerated levels
    bool strictly_above_prev;
    bool strictly_below_next;
};

template <class R>
LevelIndexInfo level_for_index(const std::vector<EigenLevel<R>>& levels, int k) {
    if (k < 1) throw IndexBeyondEnumeration("eigenvalue index must be >= 1");
    int first = 1;
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const int last = first + levels[j].multiplicity() - 1;
        if (k <= last) {
            return LevelIndexInfo{static_cast<int>(j), k == first, k == last};
        }
        first = last + 1;
    }
    throw IndexBeyondEnumeration("eigenvalue index " + std::to_string(k) +
                                 " lies beyond the enumerated levels");
}

/// Orthogonal product: block-diagonal basis on C^{n1+n2}.
template <class R>
LatticeBasis<R> product_lattice(const LatticeBasis<R>& a, const LatticeBasis<R>& b) {
    const int n = a.n + b.n;
    Mat<R> basis = Mat<R>::Zero(2 * n, 2 * n);
    basis.topLeftCorner(2 * a.n, 2 * a.n) = a.basis;
    basis.bottomRightCorner(2 * b.n, 2 * b.n) = b.basis;
    return LatticeBasis<R>(n, std::move(basis), std::max(a.tol, b.tol));
}

}  // namespace torex
