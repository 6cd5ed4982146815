#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "torex/rational.hpp"

namespace torex {

/// Complex number over the active scalar mode (exact Q(i) or double pairs).
template <class R>
struct Complex {
    R re{scalar_traits<R>::zero()};
    R im{scalar_traits<R>::zero()};

    Complex() = default;
    explicit Complex(R real) : re(std::move(real)) {}
    Complex(R real, R imag) : re(std::move(real)), im(std::move(imag)) {}

    static Complex i() { return Complex(scalar_traits<R>::zero(), scalar_traits<R>::one()); }

    Complex conj() const { return Complex(re, -im); }
    Complex operator-() const { return Complex(-re, -im); }
    Complex operator+(const Complex& o) const { return Complex(re + o.re, im + o.im); }
    Complex operator-(const Complex& o) const { return Complex(re - o.re, im - o.im); }
    Complex operator*(const Complex& o) const {
        return Complex(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    Complex operator*(const R& s) const { return Complex(re * s, im * s); }
    Complex& operator+=(const Complex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }

    /// Squared modulus (exact in exact mode).
    R norm_sq() const { return re * re + im * im; }

    bool is_zero(double tol) const {
        using T = scalar_traits<R>;
        return T::is_zero(re, tol) && T::is_zero(im, tol);
    }
    bool eq(const Complex& o, double tol) const {
        using T = scalar_traits<R>;
        return T::eq(re, o.re, tol) && T::eq(im, o.im, tol);
    }
    std::complex<double> to_std() const {
        using T = scalar_traits<R>;
        return {T::to_double(re), T::to_double(im)};
    }
};

/// Sparse Laurent polynomial in pi with Complex<R> coefficients.
///
/// Every quantity in the calculus carries a definite pi-grading (e.g. the
/// Laplacian contributes pi^2, codifferentials pi^1, immersion weights pi^-2),
/// so keeping the exponent symbolic makes identity checks exact in exact mode.
/// Exactly-zero coefficients are never stored.
template <class R>
class PiScalar {
  public:
    PiScalar() = default;

    static PiScalar monomial(Complex<R> c, int pi_power) {
        PiScalar s;
        if (!c.is_zero(0.0)) s.terms_.emplace(pi_power, std::move(c));
        return s;
    }
    static PiScalar from(Complex<R> c) { return monomial(std::move(c), 0); }
    static PiScalar from_real(R r) { return from(Complex<R>(std::move(r))); }

    const std::map<int, Complex<R>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Complex<R> coeff(int pi_power) const {
        auto it = terms_.find(pi_power);
        return it == terms_.end() ? Complex<R>() : it->second;
    }

    PiScalar operator+(const PiScalar& o) const {
        PiScalar out(*this);
        for (const auto& [k, c] : o.terms_) out.add_term(k, c);
        return out;
    }
    PiScalar operator-(const PiScalar& o) const {
        PiScalar out(*this);
        for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
        return out;
    }
    PiScalar& operator+=(const PiScalar& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    PiScalar operator-() const {
        PiScalar out;
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
        return out;
    }
    PiScalar operator*(const PiScalar& o) const {
        PiScalar out;
        for (const auto& [ka, ca] : terms_) {
            for (const auto& [kb, cb] : o.terms_) out.add_term(ka + kb, ca * cb);
        }
        return out;
    }
    PiScalar scaled(const Complex<R>& c) const {
        PiScalar out;
        for (const auto& [k, t] : terms_) out.add_term(k, t * c);
        return out;
    }
    PiScalar scaled(const R& r) const { return scaled(Complex<R>(r)); }
    /// Multiplies by pi^k.
    PiScalar pi_shifted(int k) const {
        PiScalar out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
        return out;
    }
    PiScalar conj() const {
        PiScalar out;
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, c.conj());
        return out;
    }

    bool is_zero(double tol) const {
        for (const auto& [k, c] : terms_) {
            if (!c.is_zero(tol)) return false;
        }
        return true;
    }
    bool eq(const PiScalar& o, double tol) const { return (*this - o).is_zero(tol); }
    bool is_real(double tol) const {
        for (const auto& [k, c] : terms_) {
            if (!scalar_traits<R>::is_zero(c.im, tol)) return false;
        }
        return true;
    }

    /// Numeric value with pi substituted.
    std::complex<double> eval() const {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [k, c] : terms_) acc += c.to_std() * std::pow(pi_value(), k);
        return acc;
    }

    /// +1 / -1 when provably positive/negative (real terms of uniform sign),
    /// 0 when zero, nullopt when the sign is not certified term-wise.
    std::optional<int> definite_sign(double tol) const {
        int sign = 0;
        for (const auto& [k, c] : terms_) {
            if (c.is_zero(tol)) continue;
            if (!scalar_traits<R>::is_zero(c.im, tol)) return std::nullopt;
            const int s = scalar_traits<R>::to_double(c.re) > 0 ? 1 : -1;
            if (sign == 0) sign = s;
            if (s != sign) return std::nullopt;
        }
        return sign;
    }

    /// Renders e.g. "8*pi^2", "1/4 - 2*pi^-2", "(1/2+3i)*pi^4".
    std::string str() const {
        using T = scalar_traits<R>;
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string coeff;
            const bool has_im = !T::is_zero(c.im, 0.0);
            if (has_im) {
                coeff = "(" + T::str(c.re) + (T::to_double(c.im) < 0 ? "-" : "+") +
                        T::str(T::abs(c.im)) + "i)";
            } else {
                coeff = T::str(c.re);
            }
            if (!out.empty()) {
                if (!has_im && coeff.size() && coeff[0] == '-') {
                    out += " - ";
                    coeff = coeff.substr(1);
                } else {
                    out += " + ";
                }
            }
            if (k == 0) {
                out += coeff;
            } else if (!has_im && coeff == "1") {
                out += "pi^" + std::to_string(k);
            } else if (!has_im && coeff == "-1") {
                out += "-pi^" + std::to_string(k);
            } else {
                out += coeff + "*pi^" + std::to_string(k);
            }
        }
        return out;
    }

    static double pi_value() { return 3.14159265358979323846; }

  private:
    void add_term(int k, const Complex<R>& c) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero(0.0)) terms_.erase(it);
        } else if (it->second.is_zero(0.0)) {
            terms_.erase(it);
        }
    }

    std::map<int, Complex<R>> terms_;
};

}  // namespace torex
