#pragma once

#include <bit>
#include <map>
#include <utility>

#include "torex/forms.hpp"

namespace torex {

namespace detail {

/// Sign picked up when dz^alpha is wedged onto the front of dz^I: it moves
/// past the holomorphic covectors with smaller index.
inline int wedge_sign_dz(unsigned I, int alpha) {
    const unsigned below = I & ((1u << alpha) - 1u);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

/// Sign for dzbar^beta wedged into dz^I dzbar^J: it moves past all of dz^I
/// plus the antiholomorphic covectors with smaller index.
inline int wedge_sign_dzbar(unsigned I, unsigned J, int beta) {
    const unsigned below = J & ((1u << beta) - 1u);
    const int crossings = std::popcount(I) + std::popcount(below);
    return (crossings % 2 == 0) ? 1 : -1;
}

}  // namespace detail

/// Mixed-degree complex differential form with trig-polynomial coefficients.
/// Components are keyed by (holomorphic mask, antiholomorphic mask): the pair
/// (I, J) holds the coefficient of dz^I wedge dzbar^J with both index sets
/// written in increasing order.
template <class R>
class GeneralForm {
  public:
    using Key = std::pair<unsigned, unsigned>;
    using Map = std::map<Key, TrigPoly<R>>;

    GeneralForm(int n, R volume, double tol = 1e-9)
        : n_(n), volume_(std::move(volume)), tol_(tol) {
        if (n_ < 1) throw DimensionMismatch("complex dimension must be >= 1");
    }

    static GeneralForm from_function(const TrigPoly<R>& f) {
        GeneralForm a(f.n(), f.volume(), f.tol());
        a.add_component(0u, 0u, f);
        return a;
    }

    static GeneralForm from_form11(const Form11<R>& b) {
        GeneralForm a(b.n(), b.volume(), b.tol());
        for (int p = 0; p < b.n(); ++p) {
            for (int q = 0; q < b.n(); ++q) {
                a.add_component(1u << p, 1u << q, b.entry(p, q));
            }
        }
        return a;
    }

    int n() const { return n_; }
    const R& volume() const { return volume_; }
    double tol() const { return tol_; }
    const Map& components() const { return comps_; }

    TrigPoly<R> component(unsigned I, unsigned J) const {
        auto it = comps_.find(Key{I, J});
        return it == comps_.end() ? TrigPoly<R>(n_, volume_, tol_) : it->second;
    }

    void add_component(unsigned I, unsigned J, const TrigPoly<R>& f) {
        if (f.empty()) return;
        auto it = comps_.find(Key{I, J});
        if (it == comps_.end()) {
            comps_.emplace(Key{I, J}, f);
        } else {
            it->second = it->second + f;
            if (it->second.empty()) comps_.erase(it);
        }
    }

    /// The scalar part; callers that require purity check the rest themselves.
    TrigPoly<R> to_function() const { return component(0u, 0u); }

    Form11<R> to_form11() const {
        Form11<R> b(n_, volume_, tol_);
        for (const auto& [key, f] : comps_) {
            const auto [I, J] = key;
            if (std::popcount(I) == 1 && std::popcount(J) == 1) {
                b.entry(std::countr_zero(I), std::countr_zero(J)) =
                    b.entry(std::countr_zero(I), std::countr_zero(J)) + f;
            }
        }
        return b;
    }

    GeneralForm operator+(const GeneralForm& o) const {
        require_compatible(o);
        GeneralForm out(*this);
        out.tol_ = std::max(tol_, o.tol_);
        for (const auto& [key, f] : o.comps_) out.add_component(key.first, key.second, f);
        return out;
    }
    GeneralForm operator-() const {
        GeneralForm out(n_, volume_, tol_);
        for (const auto& [key, f] : comps_) out.comps_.emplace(key, -f);
        return out;
    }
    GeneralForm operator-(const GeneralForm& o) const { return *this + (-o); }
    GeneralForm scaled(const PiScalar<R>& s) const {
        GeneralForm out(n_, volume_, tol_);
        for (const auto& [key, f] : comps_) {
            auto sf = f.scaled(s);
            if (!sf.empty()) out.comps_.emplace(key, std::move(sf));
        }
        return out;
    }

    bool is_zero(double tol) const {
        for (const auto& [key, f] : comps_) {
            if (!f.is_zero(tol)) return false;
        }
        return true;
    }
    bool eq(const GeneralForm& o, double tol) const { return (*this - o).is_zero(tol); }

    void require_compatible(const GeneralForm& o) const {
        if (n_ != o.n_) throw DimensionMismatch("mixing forms on different tori");
        if (!scalar_traits<R>::eq(volume_, o.volume_, std::max(tol_, o.tol_))) {
            throw DimensionMismatch("mixing forms with different torus volumes");
        }
    }

  private:
    int n_;
    R volume_;
    double tol_;
    Map comps_;
};

namespace detail {

/// Shared body of the four first-order operators. Each is, per Fourier mode
/// and per complex direction, either a wedge (ext = true) or a metric
/// contraction (ext = false, carrying the factor 2 from the covector norm),
/// with direction-dependent complex weights supplied by the caller:
/// the dz^alpha channel gets hol(w^alpha) and the dzbar^alpha channel gets
/// anti(w^alpha), both pi-degree one.
template <class R, class HolWeight, class AntiWeight>
GeneralForm<R> first_order_op(const GeneralForm<R>& a, bool ext, HolWeight hol,
                              AntiWeight anti) {
    GeneralForm<R> out(a.n(), a.volume(), a.tol());
    for (const auto& [key, poly] : a.components()) {
        const auto [I, J] = key;
        for (const auto& [u, c] : poly.terms()) {
            for (int alpha = 0; alpha < a.n(); ++alpha) {
                const unsigned bit = 1u << alpha;
                const Complex<R> w = complex_coord(u, alpha + 1);

                const bool has_hol = (I & bit) != 0;
                if (ext != has_hol) {  // wedge needs absent, contraction present
                    const Complex<R> weight = hol(w);
                    if (!weight.is_zero(0.0)) {
                        const int sign = wedge_sign_dz(I, alpha);
                        TrigPoly<R> term(a.n(), a.volume(), a.tol());
                        term.add_mode(u, c.pi_shifted(1).scaled(
                                             sign > 0 ? weight : -weight));
                        out.add_component(ext ? (I | bit) : (I & ~bit), J, term);
                    }
                }

                const bool has_anti = (J & bit) != 0;
                if (ext != has_anti) {
                    const Complex<R> weight = anti(w);
                    if (!weight.is_zero(0.0)) {
                        const int sign = wedge_sign_dzbar(I, J, alpha);
                        TrigPoly<R> term(a.n(), a.volume(), a.tol());
                        term.add_mode(u, c.pi_shifted(1).scaled(
                                             sign > 0 ? weight : -weight));
                        out.add_component(I, ext ? (J | bit) : (J & ~bit), term);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace detail

/// Exterior derivative d: per mode, pi i wbar^alpha on the dz channel and
/// pi i w^alpha on the dzbar channel.
template <class R>
GeneralForm<R> ext_d(const GeneralForm<R>& a) {
    const Complex<R> i = Complex<R>::i();
    return detail::first_order_op(
        a, true, [&](const Complex<R>& w) { return i * w.conj(); },
        [&](const Complex<R>& w) { return i * w; });
}

/// Twisted derivative d^c = i(dbar - del): pi wbar^alpha on dz, -pi w^alpha
/// on dzbar.
template <class R>
GeneralForm<R> ext_dc(const GeneralForm<R>& a) {
    return detail::first_order_op(
        a, true, [](const Complex<R>& w) { return w.conj(); },
        [](const Complex<R>& w) { return -w; });
}

/// Codifferential (formal adjoint of d): contraction with weights
/// -2 pi i w^alpha on dz and -2 pi i wbar^alpha on dzbar.
template <class R>
GeneralForm<R> codiff(const GeneralForm<R>& a) {
    const Complex<R> m2i(scalar_traits<R>::zero(), scalar_traits<R>::from_long(-2));
    return detail::first_order_op(
        a, false, [&](const Complex<R>& w) { return m2i * w; },
        [&](const Complex<R>& w) { return m2i * w.conj(); });
}

/// Adjoint of d^c: contraction with weights 2 pi w^alpha on dz and
/// -2 pi wbar^alpha on dzbar.
template <class R>
GeneralForm<R> codiff_c(const GeneralForm<R>& a) {
    const R two = scalar_traits<R>::from_long(2);
    return detail::first_order_op(
        a, false, [&](const Complex<R>& w) { return w * two; },
        [&](const Complex<R>& w) { return -(w.conj() * two); });
}

/// Pointwise Hermitian inner product: matching components pair with metric
/// factor 2^{|I|+|J|}, distinct components are orthogonal.
template <class R>
TrigPoly<R> pointwise_inner(const GeneralForm<R>& a, const GeneralForm<R>& b) {
    a.require_compatible(b);
    TrigPoly<R> out(a.n(), a.volume(), std::max(a.tol(), b.tol()));
    for (const auto& [key, f] : a.components()) {
        const auto it = b.components().find(key);
        if (it == b.components().end()) continue;
        const int weight_log2 = std::popcount(key.first) + std::popcount(key.second);
        const TrigPoly<R> prod = f * it->second.conj();
        for (const auto& [u, c] : prod.terms()) {
            out.add_mode(u, c.scaled(scalar_traits<R>::from_long(1L << weight_log2)));
        }
    }
    return out;
}

/// L2 inner product over the torus.
template <class R>
PiScalar<R> l2_inner(const GeneralForm<R>& a, const GeneralForm<R>& b) {
    return pointwise_inner(a, b).integrate();
}

/// The fourth-order operator delta^c delta (f dd^c f) entering the
/// extremality certificate. Always a genuine function (the two contractions
/// exhaust the (1,1) part).
template <class R>
TrigPoly<R> l_op(const TrigPoly<R>& f) {
    const Form11<R> fd = ddc(f).mul_function(f);
    return codiff_c(codiff(GeneralForm<R>::from_form11(fd))).to_function();
}

/// Closed-form value of delta^c delta (f dd^c f) for an eigenfunction with
/// Laplace eigenvalue lambda:
///   lambda^2 f^2 - 2 lambda |grad f|^2 + |dd^c f|^2.
/// Throws NotAnEigenfunction when the eigenvalue relation fails.
template <class R>
TrigPoly<R> l_rhs(const TrigPoly<R>& f, const PiScalar<R>& lambda, double tol) {
    if (!f.laplacian().eq(f.scaled(lambda), tol)) {
        throw NotAnEigenfunction("function is not a Laplace eigenfunction for the given eigenvalue");
    }
    const Form11<R> df = ddc(f);
    const TrigPoly<R> sq = (f * f).scaled(lambda * lambda);
    const TrigPoly<R> grad = grad_inner(f, f).scaled(lambda + lambda);
    return sq - grad + form_inner(df, df);
}

}  // namespace torex
