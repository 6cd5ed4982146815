#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <utility>
#include <vector>

#include "torex/eigenbasis.hpp"

namespace torex {

/// Deformation direction for the metric family: a constant real (1,1)-form
/// alpha, stored together with the Hermitian matrix A defined by alpha = i A
/// (so the deformed Kahler form omega + t.alpha corresponds to the Hermitian
/// matrix H_t = I/2 + t A). Spectra stay exactly computable because constant
/// directions keep the metric flat.
template <class R>
struct HarmonicDeformation {
    Form11<R> alpha;
    bool trace_zero = false;

    explicit HarmonicDeformation(Form11<R> direction) : alpha(std::move(direction)) {
        if (!constant_coefficients()) {
            throw NonRealInput("deformation direction must have constant coefficients");
        }
        if (!alpha.is_real(alpha.tol())) {
            throw NonRealInput("deformation direction must be a real (1,1)-form");
        }
        // trace-zero <=> the L2 pairing with the Kahler form vanishes.
        const PiScalar<R> pairing =
            form_inner(alpha, Form11<R>::kahler(alpha.n(), alpha.volume(), alpha.tol()))
                .integrate();
        trace_zero = pairing.is_zero(alpha.tol());
    }

    int n() const { return alpha.n(); }

    /// Entry A_pq of the Hermitian matrix with alpha = i A.
    Complex<R> a_entry(int p, int q) const {
        const Complex<R> c = alpha.entry(p, q).zero_mode().coeff(0);
        return Complex<R>(c.im, -c.re);  // -i * c
    }

    /// A as a complex double matrix.
    Eigen::MatrixXcd a_numeric() const {
        const int dim = n();
        Eigen::MatrixXcd a(dim, dim);
        for (int p = 0; p < dim; ++p) {
            for (int q = 0; q < dim; ++q) a(p, q) = a_entry(p, q).to_std();
        }
        return a;
    }

  private:
    bool constant_coefficients() const {
        const VecX<R> zero = VecX<R>::Zero(2 * alpha.n());
        for (int p = 0; p < alpha.n(); ++p) {
            for (int q = 0; q < alpha.n(); ++q) {
                for (const auto& [u, c] : alpha.entry(p, q).terms()) {
                    if (u != zero) return false;
                    for (const auto& [power, coeff] : c.terms()) {
                        if (power != 0) return false;
                    }
                }
            }
        }
        return true;
    }
};

namespace detail {

/// Interleaved real 2n x 2n matrix of the Hermitian form H: the (p,q) block
/// is [[re, -im], [im, re]] scaled by 2, i.e. the metric tensor G with
/// G = 2 rho(H).
inline Eigen::MatrixXd metric_from_hermitian(const Eigen::MatrixXcd& h) {
    const Eigen::Index n = h.rows();
    Eigen::MatrixXd g(2 * n, 2 * n);
    for (Eigen::Index p = 0; p < n; ++p) {
        for (Eigen::Index q = 0; q < n; ++q) {
            const double re = 2.0 * h(p, q).real();
            const double im = 2.0 * h(p, q).imag();
            g(2 * p, 2 * q) = re;
            g(2 * p, 2 * q + 1) = -im;
            g(2 * p + 1, 2 * q) = im;
            g(2 * p + 1, 2 * q + 1) = re;
        }
    }
    return g;
}

/// k-th smallest value (counted with one slot per lattice vector, both signs)
/// of x^T gram x over nonzero integer vectors.
inline double kth_gram_value(const Mat<double>& gram, int k, std::size_t cap = 1'000'000) {
    if (k < 1) throw IndexBeyondEnumeration("eigenvalue index must be >= 1");
    double bound = gram(0, 0);
    for (Eigen::Index i = 1; i < gram.rows(); ++i) bound = std::min(bound, gram(i, i));
    for (;;) {
        auto cands = fp_enumerate<double>(gram, bound, cap);
        if (static_cast<int>(cands.size()) >= k) {
            std::vector<double> vals;
            vals.reserve(cands.size());
            for (const auto& [v, x] : cands) vals.push_back(v);
            std::nth_element(vals.begin(), vals.begin() + (k - 1), vals.end());
            return vals[static_cast<std::size_t>(k - 1)];
        }
        bound *= 2.0;
    }
}

}  // namespace detail

/// The k-th (1-based, multiplicity-counted) Laplace eigenvalue of the
/// volume-normalized deformed metric g_t on the torus of B. The deformed
/// Kahler form omega + t.alpha must stay positive.
template <class R>
double deformed_spectrum(const LatticeBasis<R>& B, const HarmonicDeformation<R>& d, double t,
                         int k) {
    if (d.n() != B.n) throw DimensionMismatch("deformation dimension does not match the lattice");
    const int n = B.n;

    Eigen::MatrixXcd h = 0.5 * Eigen::MatrixXcd::Identity(n, n) + t * d.a_numeric();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.eigenvalues().minCoeff() <= 1e-12) {
        throw NotPositive("omega + t*alpha is not positive at t = " + std::to_string(t));
    }

    const Eigen::MatrixXd g = detail::metric_from_hermitian(h);
    const auto dual = dual_basis(B);
    Eigen::MatrixXd dual_num(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < dual_num.rows(); ++i) {
        for (Eigen::Index j = 0; j < dual_num.cols(); ++j) {
            dual_num(i, j) = scalar_traits<R>::to_double(dual.basis(i, j));
        }
    }
    const Eigen::MatrixXd gram = dual_num.transpose() * g.ldlt().solve(dual_num);
    const double value = detail::kth_gram_value(gram, k);

    // Volume normalization: scaling g_t by (Vol(g~_t)/Vol(g))^{-1/n} keeps the
    // volume fixed and multiplies eigenvalues by the inverse factor;
    // Vol(g~_t)/Vol(g) = sqrt(det G_t) since G_0 = I.
    const double ratio = std::sqrt(g.determinant());
    const double pi = PiScalar<R>::pi_value();
    return std::pow(ratio, 1.0 / n) * 4.0 * pi * pi * value;
}

/// Exact Gram matrix of the quadratic form Q_alpha over the 2l normalized
/// eigenfunctions of a level; entries are real Laurent polynomials in pi.
template <class R>
struct QGramMatrix {
    int size = 0;
    std::vector<PiScalar<R>> entries;  // row-major, symmetric

    const PiScalar<R>& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * size + j];
    }

    Eigen::MatrixXd numeric() const {
        Eigen::MatrixXd m(size, size);
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) m(i, j) = at(i, j).eval().real();
        }
        return m;
    }

    PiScalar<R> trace() const {
        PiScalar<R> acc;
        for (int i = 0; i < size; ++i) acc += at(i, i);
        return acc;
    }
};

template <class R>
QGramMatrix<R> q_gram(const EigenBasis<R>& basis, const HarmonicDeformation<R>& d) {
    using T = scalar_traits<R>;
    if (d.n() != basis.n()) {
        throw DimensionMismatch("deformation dimension does not match the basis");
    }
    if (!d.trace_zero) {
        throw TraceNotZero("deformation direction must pair to zero with the Kahler form");
    }
    require_admissible_direction(d.alpha, std::max(basis.tol(), d.alpha.tol()));

    QGramMatrix<R> out;
    out.size = basis.size();
    out.entries.assign(static_cast<std::size_t>(out.size) * out.size, PiScalar<R>{});
    const R norm_sq = basis.norm_sq();
    for (int i = 0; i < out.size; ++i) {
        const TrigPoly<R> fi = basis.basis_raw(i);
        for (int j = i; j < out.size; ++j) {
            PiScalar<R> value = detail::q_raw(fi, basis.basis_raw(j), d.alpha).scaled(norm_sq);
            if (!value.is_real(basis.tol())) {
                throw NonRealInput("Q entries must be real for a real direction");
            }
            // Drop numerically-dead imaginary dust in float mode.
            if constexpr (!T::exact) {
                PiScalar<R> cleaned;
                for (const auto& [power, c] : value.terms()) {
                    cleaned += PiScalar<R>::monomial(Complex<R>(c.re), power);
                }
                value = cleaned;
            }
            out.entries[static_cast<std::size_t>(i) * out.size + j] = value;
            out.entries[static_cast<std::size_t>(j) * out.size + i] = value;
        }
    }
    return out;
}

struct QGramExtremes {
    double min_eig = 0.0;
    double max_eig = 0.0;
};

template <class R>
QGramExtremes qgram_extremes(const QGramMatrix<R>& q) {
    if (q.size == 0) return {};
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q.numeric());
    return QGramExtremes{es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

struct DerivativeReport {
    int k = 0;
    double d_left = 0.0;
    double d_right = 0.0;
    double qgram_min = 0.0;
    double qgram_max = 0.0;
    double tolerance = 0.0;
    bool first_of_cluster = false;
    bool last_of_cluster = false;
    bool pass = false;
};

namespace detail {

/// Second-order one-sided finite differences of f at 0 with step h > 0:
/// (left derivative, right derivative).
template <class F>
std::pair<double, double> one_sided_fd(F&& f, double h) {
    const double f0 = f(0.0);
    const double right = (-3.0 * f0 + 4.0 * f(h) - f(2.0 * h)) / (2.0 * h);
    const double left = (3.0 * f0 - 4.0 * f(-h) + f(-2.0 * h)) / (2.0 * h);
    return {left, right};
}

}  // namespace detail

/// Compares one-sided eigenvalue derivatives of the deformed family against
/// the extreme eigenvalues of the Q_alpha Gram matrix: at the low end of a
/// cluster lambda_k splits upward on the left and downward on the right
/// (derivatives = max/min), at the high end the roles swap, and inside a
/// cluster both derivatives must land inside the extremes.
template <class R>
DerivativeReport derivative_check(const LatticeBasis<R>& B, const HarmonicDeformation<R>& d,
                                  int k, double h = 1e-4) {
    if (k < 1) throw IndexBeyondEnumeration("eigenvalue index must be >= 1");
    const auto dual = dual_basis(B);
    int count = 1;
    std::vector<EigenLevel<R>> levels;
    for (;;) {
        levels = enumerate_levels(dual, count);
        int total = 0;
        for (const auto& level : levels) total += level.multiplicity();
        if (total >= k) break;
        count *= 2;
    }
    const LevelIndexInfo info = level_for_index(levels, k);
    const EigenBasis<R> basis(B, levels[static_cast<std::size_t>(info.level_index)]);

    const auto extremes = qgram_extremes(q_gram(basis, d));

    DerivativeReport report;
    report.k = k;
    report.qgram_min = extremes.min_eig;
    report.qgram_max = extremes.max_eig;
    report.first_of_cluster = info.strictly_above_prev;
    report.last_of_cluster = info.strictly_below_next;
    report.tolerance = std::max(1e-6, 10.0 * h * h);

    const auto lambda_at = [&](double t) { return deformed_spectrum(B, d, t, k); };
    const auto matches = [&](double left, double right) {
        const double tol = report.tolerance;
        if (info.strictly_above_prev && info.strictly_below_next) {
            // Simple eigenvalue in the multiplicity count (cluster of one):
            // both derivatives agree with the single Q eigenvalue.
            return std::abs(left - extremes.max_eig) <= tol &&
                   std::abs(right - extremes.min_eig) <= tol &&
                   std::abs(left - right) <= 2 * tol;
        }
        if (info.strictly_above_prev) {
            return std::abs(left - extremes.max_eig) <= tol &&
                   std::abs(right - extremes.min_eig) <= tol;
        }
        if (info.strictly_below_next) {
            return std::abs(left - extremes.min_eig) <= tol &&
                   std::abs(right - extremes.max_eig) <= tol;
        }
        return extremes.min_eig - tol <= left && left <= extremes.max_eig + tol &&
               extremes.min_eig - tol <= right && right <= extremes.max_eig + tol;
    };

    auto [left, right] = detail::one_sided_fd(lambda_at, h);
    if (!matches(left, right)) {
        // Richardson fallback: combine steps h and h/2 to cancel the O(h^2)
        // truncation term of the one-sided stencils.
        const auto [left_half, right_half] = detail::one_sided_fd(lambda_at, h / 2.0);
        left = (4.0 * left_half - left) / 3.0;
        right = (4.0 * right_half - right) / 3.0;
    }
    report.d_left = left;
    report.d_right = right;
    report.pass = matches(left, right);
    return report;
}

}  // namespace torex
