#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "torex/errors.hpp"
#include "torex/pi_scalar.hpp"
#include "torex/rational.hpp"

namespace torex {

template <class R>
using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
template <class R>
using VecX = Eigen::Matrix<R, Eigen::Dynamic, 1>;

template <class R>
R mat_det(const Mat<R>& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
    return Eigen::FullPivLU<Mat<R>>(a).determinant();
}

template <class R>
Mat<R> mat_inverse(const Mat<R>& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
    Eigen::FullPivLU<Mat<R>> lu(a);
    const R det = lu.determinant();
    if constexpr (scalar_traits<R>::exact) {
        if (det == 0) throw SingularBasis("basis matrix is singular");
    } else {
        if (!lu.isInvertible()) throw SingularBasis("basis matrix is numerically singular");
    }
    return lu.inverse();
}

/// Complex coordinate alpha (1-based) of an interleaved real vector:
/// w^alpha = u^{2*alpha-1} + i * u^{2*alpha}.
template <class R>
Complex<R> complex_coord(const VecX<R>& u, int alpha) {
    return Complex<R>(u[2 * alpha - 2], u[2 * alpha - 1]);
}

/// Inverse of complex_coord over all coordinates.
template <class R>
VecX<R> interleave(const std::vector<Complex<R>>& w) {
    VecX<R> u(2 * static_cast<Eigen::Index>(w.size()));
    for (std::size_t a = 0; a < w.size(); ++a) {
        u[2 * a] = w[a].re;
        u[2 * a + 1] = w[a].im;
    }
    return u;
}

}  // namespace torex
