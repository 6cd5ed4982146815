#pragma once

#include <utility>
#include <vector>

#include "torex/trigpoly.hpp"

namespace torex {

/// (1,1)-form a = sum_{alpha,beta} a_{alpha beta} dz^alpha wedge dzbar^beta
/// with trig-polynomial entries, stored as an n x n row-major grid.
template <class R>
class Form11 {
  public:
    Form11(int n, R volume, double tol = 1e-9)
        : n_(n), volume_(std::move(volume)), tol_(tol) {
        if (n_ < 1) throw DimensionMismatch("complex dimension must be >= 1");
        entries_.assign(static_cast<size_t>(n_) * n_, TrigPoly<R>(n_, volume_, tol_));
    }

    /// Constant form from an n x n complex coefficient grid (row-major).
    static Form11 constant(int n, R volume, const std::vector<Complex<R>>& coeffs,
                           double tol = 1e-9) {
        Form11 a(n, std::move(volume), tol);
        if (coeffs.size() != static_cast<size_t>(n) * n) {
            throw DimensionMismatch("constant form needs n*n coefficients");
        }
        const VecX<R> zero = VecX<R>::Zero(2 * n);
        for (int p = 0; p < n; ++p) {
            for (int q = 0; q < n; ++q) {
                a.entry(p, q).add_mode(zero,
                                       PiScalar<R>::from(coeffs[static_cast<size_t>(p) * n + q]));
            }
        }
        return a;
    }

    /// Flat Kaehler form (i/2) sum_alpha dz^alpha wedge dzbar^alpha.
    static Form11 kahler(int n, R volume, double tol = 1e-9) {
        std::vector<Complex<R>> coeffs(static_cast<size_t>(n) * n);
        const R half = scalar_traits<R>::one() / scalar_traits<R>::from_long(2);
        for (int p = 0; p < n; ++p) {
            coeffs[static_cast<size_t>(p) * n + p] = Complex<R>(scalar_traits<R>::zero(), half);
        }
        return constant(n, std::move(volume), coeffs, tol);
    }

    int n() const { return n_; }
    const R& volume() const { return volume_; }
    double tol() const { return tol_; }

    TrigPoly<R>& entry(int p, int q) { return entries_[static_cast<size_t>(p) * n_ + q]; }
    const TrigPoly<R>& entry(int p, int q) const {
        return entries_[static_cast<size_t>(p) * n_ + q];
    }

    Form11 operator+(const Form11& o) const {
        require_compatible(o);
        Form11 out(*this);
        for (int p = 0; p < n_; ++p) {
            for (int q = 0; q < n_; ++q) out.entry(p, q) = entry(p, q) + o.entry(p, q);
        }
        return out;
    }
    Form11 operator-(const Form11& o) const { return *this + (-o); }
    Form11 operator-() const {
        Form11 out(*this);
        for (auto& e : out.entries_) e = -e;
        return out;
    }
    Form11 scaled(const PiScalar<R>& s) const {
        Form11 out(*this);
        for (auto& e : out.entries_) e = e.scaled(s);
        return out;
    }
    Form11 scaled(const R& s) const { return scaled(PiScalar<R>::from_real(s)); }

    /// Pointwise product with a function.
    Form11 mul_function(const TrigPoly<R>& f) const {
        Form11 out(*this);
        for (auto& e : out.entries_) e = e * f;
        return out;
    }

    bool is_zero(double tol) const {
        for (const auto& e : entries_) {
            if (!e.is_zero(tol)) return false;
        }
        return true;
    }
    bool eq(const Form11& o, double tol) const { return (*this - o).is_zero(tol); }

    /// Real form: entry(q,p) == -conj(entry(p,q)), i.e. the coefficient matrix
    /// is i times a Hermitian matrix of functions.
    bool is_real(double tol) const {
        for (int p = 0; p < n_; ++p) {
            for (int q = 0; q < n_; ++q) {
                if (!entry(q, p).eq(-entry(p, q).conj(), tol)) return false;
            }
        }
        return true;
    }

    /// Projection onto constants (the zero-frequency part), which on a flat
    /// torus is exactly the harmonic part of each coefficient.
    Form11 harmonic_project() const {
        Form11 out(n_, volume_, tol_);
        const VecX<R> zero = VecX<R>::Zero(2 * n_);
        for (int p = 0; p < n_; ++p) {
            for (int q = 0; q < n_; ++q) {
                out.entry(p, q).add_mode(zero, entry(p, q).zero_mode());
            }
        }
        return out;
    }

    void require_compatible(const Form11& o) const {
        if (n_ != o.n_) throw DimensionMismatch("mixing forms on different tori");
        if (!scalar_traits<R>::eq(volume_, o.volume_, std::max(tol_, o.tol_))) {
            throw DimensionMismatch("mixing forms with different torus volumes");
        }
    }

  private:
    int n_;
    R volume_;
    double tol_;
    std::vector<TrigPoly<R>> entries_;
};

/// dd^c f as a (1,1)-form: the mode e_u contributes
/// -2 pi^2 i wbar^alpha w^beta f_u to entry (alpha, beta), where
/// w^alpha = u_{2alpha-1} + i u_{2alpha} is the alpha-th complex coordinate of
/// the frequency.
template <class R>
Form11<R> ddc(const TrigPoly<R>& f) {
    Form11<R> out(f.n(), f.volume(), f.tol());
    const Complex<R> minus_two_i(scalar_traits<R>::zero(), scalar_traits<R>::from_long(-2));
    for (const auto& [u, c] : f.terms()) {
        for (int p = 0; p < f.n(); ++p) {
            const Complex<R> wbar = complex_coord(u, p + 1).conj();
            for (int q = 0; q < f.n(); ++q) {
                const Complex<R> w = complex_coord(u, q + 1);
                const Complex<R> factor = minus_two_i * wbar * w;
                if (factor.is_zero(0.0)) continue;
                out.entry(p, q).add_mode(u, c.pi_shifted(2).scaled(factor));
            }
        }
    }
    return out;
}

/// Pointwise Hermitian inner product of (1,1)-forms for the flat metric:
/// <a, b> = 4 sum_{p,q} a_{pq} conj(b_{pq}).
template <class R>
TrigPoly<R> form_inner(const Form11<R>& a, const Form11<R>& b) {
    a.require_compatible(b);
    TrigPoly<R> out(a.n(), a.volume(), std::max(a.tol(), b.tol()));
    for (int p = 0; p < a.n(); ++p) {
        for (int q = 0; q < a.n(); ++q) {
            const TrigPoly<R> prod = a.entry(p, q) * b.entry(p, q).conj();
            for (const auto& [u, c] : prod.terms()) {
                out.add_mode(u, c.scaled(scalar_traits<R>::from_long(4)));
            }
        }
    }
    return out;
}

}  // namespace torex
