#pragma once

#include <utility>
#include <vector>

#include "torex/codiff.hpp"

namespace torex {

/// Real orthonormal basis of one Laplace eigenspace on the torus, one
/// cosine/sine pair per antipodal frequency representative. The common
/// normalization constant sqrt(2/Vol) is irrational, so basis functions are
/// stored unnormalized and `norm_sq` = 2/Vol is applied by every quantity
/// that is quadratic in the basis function (all quantities used here are).
template <class R>
class EigenBasis {
  public:
    EigenBasis(const LatticeBasis<R>& lat, const EigenLevel<R>& level)
        : n_(lat.n),
          volume_(lat.volume()),
          tol_(lat.tol),
          sqnorm_(level.squared_norm),
          reps_(level.reps) {
        if (reps_.empty()) throw DimensionMismatch("eigen level has no representatives");
    }

    int n() const { return n_; }
    const R& volume() const { return volume_; }
    double tol() const { return tol_; }
    int l() const { return static_cast<int>(reps_.size()); }
    /// dim of the eigenspace = 2l.
    int size() const { return 2 * l(); }
    const R& squared_norm() const { return sqnorm_; }
    const VecX<R>& rep(int nu) const { return reps_.at(static_cast<size_t>(nu)); }

    /// Eigenvalue 4 pi^2 |w|^2 as an exact pi-monomial.
    PiScalar<R> lambda() const {
        return PiScalar<R>::monomial(Complex<R>(sqnorm_ * scalar_traits<R>::from_long(4)), 2);
    }

    /// Square of the L2 normalization constant: 2 / Vol.
    R norm_sq() const { return scalar_traits<R>::from_long(2) / volume_; }

    /// Unnormalized cosine eigenfunction cos(2 pi <w_nu, x>).
    TrigPoly<R> phi_raw(int nu) const {
        return TrigPoly<R>::cosine(n_, volume_, rep(nu), tol_);
    }
    /// Unnormalized sine eigenfunction sin(2 pi <w_nu, x>).
    TrigPoly<R> psi_raw(int nu) const {
        return TrigPoly<R>::sine(n_, volume_, rep(nu), tol_);
    }
    /// Interleaved indexing [phi_0, psi_0, phi_1, psi_1, ...] used by Gram
    /// matrices over the eigenspace.
    TrigPoly<R> basis_raw(int i) const {
        return (i % 2 == 0) ? phi_raw(i / 2) : psi_raw(i / 2);
    }

    /// Normalized harmonic part H(phi ddc phi) + H(psi ddc psi) for pair nu:
    /// a constant (1,1)-form with entries -4 pi^2 i wbar^p w^q / Vol.
    Form11<R> pair_harmonic(int nu) const {
        const TrigPoly<R> c = phi_raw(nu);
        const TrigPoly<R> s = psi_raw(nu);
        const Form11<R> sum = ddc(c).mul_function(c) + ddc(s).mul_function(s);
        return sum.harmonic_project().scaled(norm_sq());
    }

    /// Normalized delta^c delta(phi ddc phi) + delta^c delta(psi ddc psi).
    TrigPoly<R> pair_l(int nu) const {
        const TrigPoly<R> sum = l_op(phi_raw(nu)) + l_op(psi_raw(nu));
        return sum.scaled(norm_sq());
    }

  private:
    int n_;
    R volume_;
    double tol_;
    R sqnorm_;
    std::vector<VecX<R>> reps_;
};

namespace detail {

/// Unvalidated polarized form (1/2) integral <f ddc g + g ddc f, alpha>.
template <class R>
PiScalar<R> q_raw(const TrigPoly<R>& f, const TrigPoly<R>& g, const Form11<R>& alpha) {
    const Form11<R> mixed = ddc(g).mul_function(f) + ddc(f).mul_function(g);
    const R half = scalar_traits<R>::one() / scalar_traits<R>::from_long(2);
    return form_inner(mixed, alpha).integrate().scaled(half);
}

}  // namespace detail

/// Validates the deformation direction for the quadratic form: a real closed
/// (1,1)-form.
template <class R>
void require_admissible_direction(const Form11<R>& alpha, double tol) {
    if (!alpha.is_real(tol)) {
        throw NonRealInput("deformation direction must be a real (1,1)-form");
    }
    if (!ext_d(GeneralForm<R>::from_form11(alpha)).is_zero(tol)) {
        throw NonRealInput("deformation direction must be a closed (1,1)-form");
    }
}

/// Quadratic form Q_alpha(f) = integral <f ddc f, alpha> giving the
/// first-order eigenvalue response along alpha. Real-valued for real f.
template <class R>
PiScalar<R> q_alpha(const TrigPoly<R>& f, const Form11<R>& alpha) {
    require_admissible_direction(alpha, std::max(f.tol(), alpha.tol()));
    return detail::q_raw(f, f, alpha);
}

/// Polarization of q_alpha: symmetric bilinear, q_bilinear(f, f, .) ==
/// q_alpha(f, .).
template <class R>
PiScalar<R> q_bilinear(const TrigPoly<R>& f, const TrigPoly<R>& g, const Form11<R>& alpha) {
    require_admissible_direction(alpha, std::max(f.tol(), alpha.tol()));
    return detail::q_raw(f, g, alpha);
}

}  // namespace torex
