#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>

#include "torex/lattice.hpp"

namespace torex {

/// Strict weak order on frequency vectors. Exact mode compares rationals
/// lexicographically; float mode compares coordinates rounded to 12 decimal
/// digits so nearby frequencies collapse to one map key.
template <class R>
struct FreqLess {
    static long long key(double x) { return std::llround(x * 1e12); }
    bool operator()(const VecX<R>& a, const VecX<R>& b) const {
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if constexpr (scalar_traits<R>::exact) {
                if (a[i] < b[i]) return true;
                if (b[i] < a[i]) return false;
            } else {
                const auto ka = key(a[i]), kb = key(b[i]);
                if (ka < kb) return true;
                if (kb < ka) return false;
            }
        }
        return false;
    }
};

/// Finite Fourier sum f(x) = sum_u c_u exp(2 pi i <u, x>) on the torus
/// R^{2n}/lattice; coefficients are pi-graded complex scalars and exactly-zero
/// coefficients are never stored. `volume` rides along so integration against
/// the flat measure needs no further context.
template <class R>
class TrigPoly {
  public:
    using Coeff = PiScalar<R>;
    using Map = std::map<VecX<R>, Coeff, FreqLess<R>>;

    TrigPoly(int n, R volume, double tol = 1e-9)
        : n_(n), volume_(std::move(volume)), tol_(tol) {
        if (n_ < 1) throw DimensionMismatch("complex dimension must be >= 1");
    }

    static TrigPoly constant(int n, R volume, Coeff value, double tol = 1e-9) {
        TrigPoly f(n, std::move(volume), tol);
        f.add_mode(VecX<R>::Zero(2 * n), std::move(value));
        return f;
    }
    /// cos(2 pi <u, x>) — no normalization factor.
    static TrigPoly cosine(int n, R volume, const VecX<R>& u, double tol = 1e-9) {
        TrigPoly f(n, std::move(volume), tol);
        const auto half = Coeff::from_real(scalar_traits<R>::one() / scalar_traits<R>::from_long(2));
        f.add_mode(u, half);
        f.add_mode(-u, half);
        return f;
    }
    /// sin(2 pi <u, x>) — no normalization factor.
    static TrigPoly sine(int n, R volume, const VecX<R>& u, double tol = 1e-9) {
        TrigPoly f(n, std::move(volume), tol);
        const R half = scalar_traits<R>::one() / scalar_traits<R>::from_long(2);
        f.add_mode(u, Coeff::from(Complex<R>(scalar_traits<R>::zero(), -half)));
        f.add_mode(-u, Coeff::from(Complex<R>(scalar_traits<R>::zero(), half)));
        return f;
    }

    int n() const { return n_; }
    int real_dim() const { return 2 * n_; }
    const R& volume() const { return volume_; }
    double tol() const { return tol_; }
    const Map& terms() const { return coeffs_; }
    bool empty() const { return coeffs_.empty(); }

    Coeff coeff(const VecX<R>& u) const {
        auto it = coeffs_.find(u);
        return it == coeffs_.end() ? Coeff() : it->second;
    }
    Coeff zero_mode() const { return coeff(VecX<R>::Zero(2 * n_)); }

    void add_mode(VecX<R> u, const Coeff& c) {
        if (u.size() != 2 * n_) throw DimensionMismatch("frequency has wrong dimension");
        if (c.empty()) return;
        auto it = coeffs_.find(u);
        if (it == coeffs_.end()) {
            coeffs_.emplace(std::move(u), c);
        } else {
            it->second += c;
            if (it->second.empty()) coeffs_.erase(it);
        }
    }

    TrigPoly operator+(const TrigPoly& o) const {
        require_compatible(o);
        TrigPoly out(*this);
        out.tol_ = std::max(tol_, o.tol_);
        for (const auto& [u, c] : o.coeffs_) out.add_mode(u, c);
        return out;
    }
    TrigPoly operator-(const TrigPoly& o) const { return *this + (-o); }
    TrigPoly operator-() const {
        TrigPoly out(n_, volume_, tol_);
        for (const auto& [u, c] : coeffs_) out.coeffs_.emplace(u, -c);
        return out;
    }
    TrigPoly scaled(const Coeff& s) const {
        TrigPoly out(n_, volume_, tol_);
        for (const auto& [u, c] : coeffs_) {
            auto sc = c * s;
            if (!sc.empty()) out.coeffs_.emplace(u, std::move(sc));
        }
        return out;
    }
    TrigPoly scaled(const R& s) const { return scaled(Coeff::from_real(s)); }

    /// Pointwise product (frequency convolution).
    TrigPoly operator*(const TrigPoly& o) const {
        require_compatible(o);
        TrigPoly out(n_, volume_, std::max(tol_, o.tol_));
        for (const auto& [u, cu] : coeffs_) {
            for (const auto& [v, cv] : o.coeffs_) out.add_mode(u + v, cu * cv);
        }
        return out;
    }

    /// Complex conjugate: conjugated coefficients on negated frequencies.
    TrigPoly conj() const {
        TrigPoly out(n_, volume_, tol_);
        for (const auto& [u, c] : coeffs_) out.coeffs_.emplace(-u, c.conj());
        return out;
    }

    bool is_zero(double tol) const {
        for (const auto& [u, c] : coeffs_) {
            if (!c.is_zero(tol)) return false;
        }
        return true;
    }
    bool eq(const TrigPoly& o, double tol) const { return (*this - o).is_zero(tol); }
    /// Real-valued iff coeff(-u) == conj(coeff(u)) throughout.
    bool is_real(double tol) const { return eq(conj(), tol); }

    /// Integral against the flat measure: volume * zero-frequency coefficient.
    Coeff integrate() const { return zero_mode().scaled(volume_); }

    /// Laplace-Beltrami of the flat metric: mode u scales by 4 pi^2 |u|^2.
    TrigPoly laplacian() const {
        TrigPoly out(n_, volume_, tol_);
        for (const auto& [u, c] : coeffs_) {
            const R sq = u.dot(u);
            if (scalar_traits<R>::is_zero(sq, 0.0)) continue;
            out.coeffs_.emplace(
                u, c.pi_shifted(2).scaled(sq * scalar_traits<R>::from_long(4)));
        }
        return out;
    }

    /// Numeric evaluation at a point given in real coordinates.
    std::complex<double> eval(const Eigen::VectorXd& x) const {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [u, c] : coeffs_) {
            double phase = 0;
            for (Eigen::Index i = 0; i < x.size(); ++i) {
                phase += scalar_traits<R>::to_double(u[i]) * x[i];
            }
            const double arg = 2.0 * Coeff::pi_value() * phase;
            acc += c.eval() * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        return acc;
    }

    void require_compatible(const TrigPoly& o) const {
        if (n_ != o.n_) throw DimensionMismatch("mixing functions on different tori");
        if (!scalar_traits<R>::eq(volume_, o.volume_, std::max(tol_, o.tol_))) {
            throw DimensionMismatch("mixing functions with different torus volumes");
        }
    }

  private:
    int n_;
    R volume_;
    double tol_;
    Map coeffs_;
};

/// Riemannian inner product of gradients: for modes u, v the pointwise value
/// is -4 pi^2 (u . v) e_{u+v}; the sign makes grad_inner(cos_u, cos_u) equal
/// 4 pi^2 |u|^2 sin_u^2.
template <class R>
TrigPoly<R> grad_inner(const TrigPoly<R>& f, const TrigPoly<R>& g) {
    f.require_compatible(g);
    TrigPoly<R> out(f.n(), f.volume(), std::max(f.tol(), g.tol()));
    for (const auto& [u, cu] : f.terms()) {
        for (const auto& [v, cv] : g.terms()) {
            const R dot = u.dot(v);
            if (scalar_traits<R>::is_zero(dot, 0.0)) continue;
            out.add_mode(u + v, (cu * cv)
                                    .pi_shifted(2)
                                    .scaled(dot * scalar_traits<R>::from_long(-4)));
        }
    }
    return out;
}

}  // namespace torex
