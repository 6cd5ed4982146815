#pragma once

// Shared test utilities: an independent brute-force level oracle and a
// deterministic random-lattice generator. The oracle deliberately avoids the
// library's recursive enumeration: it scans an integer box whose half-widths
// come from the ellipsoid bound x_i^2 <= (G^{-1})_ii * (x^T G x).

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "torex/codiff.hpp"
#include "torex/lattice.hpp"

namespace torex_test {

using namespace torex;

template <class R>
std::vector<EigenLevel<R>> naive_levels(const DualLattice<R>& dual, int count) {
    using T = scalar_traits<R>;
    const Mat<R> gram = gram_matrix<R>(dual.basis);
    const Mat<R> ginv = mat_inverse<R>(gram);
    const int m = static_cast<int>(gram.rows());

    R cutoff = gram(0, 0);
    for (int i = 1; i < m; ++i) cutoff = std::min(cutoff, gram(i, i));

    std::vector<std::pair<R, std::vector<long>>> hits;
    for (;;) {
        hits.clear();
        std::vector<long> radius(m), x(m);
        for (int i = 0; i < m; ++i) {
            radius[i] = static_cast<long>(
                            std::floor(std::sqrt(T::to_double(cutoff) * T::to_double(ginv(i, i))))) +
                        2;
            x[i] = -radius[i];
        }
        for (;;) {
            bool zero = std::all_of(x.begin(), x.end(), [](long v) { return v == 0; });
            if (!zero) {
                R q = T::zero();
                for (int i = 0; i < m; ++i) {
                    for (int j = 0; j < m; ++j) {
                        q += gram(i, j) * T::from_long(x[i]) * T::from_long(x[j]);
                    }
                }
                if (q <= cutoff) hits.emplace_back(q, x);
            }
            int pos = m - 1;
            while (pos >= 0 && x[pos] == radius[pos]) {
                x[pos] = -radius[pos];
                --pos;
            }
            if (pos < 0) break;
            ++x[pos];
        }
        std::vector<R> values;
        for (auto& [v, xx] : hits) values.push_back(v);
        std::sort(values.begin(), values.end());
        int distinct = 0;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i == 0 || !T::eq(values[i], values[i - 1], dual.tol)) ++distinct;
        }
        if (distinct >= count) break;
        cutoff = cutoff * T::from_long(2);
    }

    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<EigenLevel<R>> levels;
    for (const auto& [value, x] : hits) {
        if (levels.empty() || !T::eq(value, levels.back().squared_norm, dual.tol)) {
            if (static_cast<int>(levels.size()) == count) break;
            levels.push_back(EigenLevel<R>{value, {}});
        }
        VecX<R> u = VecX<R>::Zero(m);
        for (int j = 0; j < m; ++j) u += dual.basis.col(j) * T::from_long(x[j]);
        levels.back().reps.push_back(detail::canonical_rep<R>(std::move(u), dual.tol));
    }
    for (auto& level : levels) {
        std::sort(level.reps.begin(), level.reps.end(), detail::lex_less<R>);
        level.reps.erase(std::unique(level.reps.begin(), level.reps.end()), level.reps.end());
    }
    return levels;
}

/// Deterministic random rational lattice: identity plus small perturbations.
/// Avoids std::uniform_int_distribution (implementation-defined sequences).
inline LatticeBasis<Rat> random_rational_lattice(std::mt19937_64& rng, int n) {
    for (;;) {
        Mat<Rat> b = Mat<Rat>::Identity(2 * n, 2 * n);
        for (int i = 0; i < 2 * n; ++i) {
            for (int j = 0; j < 2 * n; ++j) {
                const long num = static_cast<long>(rng() % 5) - 2;  // -2..2
                const long den = 2 + static_cast<long>(rng() % 3);  // 2..4
                b(i, j) += Rat(num, den * 4);
            }
        }
        if (mat_det<Rat>(b) != 0) return LatticeBasis<Rat>(n, std::move(b));
    }
}

/// Exact grid quadrature oracle: for f with frequencies in the dual lattice
/// of basis B, the integral over the torus equals Vol times the average of f
/// over the uniform grid {B t : t in (k/g)_{k=0..g-1}^{2n}} once g exceeds
/// twice the largest integer frequency coordinate (no aliasing). Completely
/// independent of TrigPoly::integrate.
template <class R>
std::complex<double> quadrature_integral(const TrigPoly<R>& f, const Mat<R>& basis, int grid) {
    using T = scalar_traits<R>;
    const int m = static_cast<int>(basis.rows());
    Eigen::MatrixXd bd(m, m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) bd(i, j) = T::to_double(basis(i, j));
    }
    std::vector<int> idx(static_cast<size_t>(m), 0);
    std::complex<double> acc{0.0, 0.0};
    long samples = 0;
    for (;;) {
        Eigen::VectorXd t(m);
        for (int i = 0; i < m; ++i) t[i] = static_cast<double>(idx[static_cast<size_t>(i)]) / grid;
        acc += f.eval(bd * t);
        ++samples;
        int pos = 0;
        while (pos < m && ++idx[static_cast<size_t>(pos)] == grid) {
            idx[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == m) break;
    }
    return acc * (T::to_double(f.volume()) / static_cast<double>(samples));
}

/// Random real trig polynomial spanned by cos/sin at the given frequencies,
/// with small random rational coefficients (possibly zero).
template <class R>
TrigPoly<R> random_real_poly(std::mt19937_64& rng, int n, const R& volume,
                             const std::vector<VecX<R>>& freqs, double tol = 1e-9) {
    TrigPoly<R> f(n, volume, tol);
    for (const auto& u : freqs) {
        const long cnum = static_cast<long>(rng() % 7) - 3;
        const long snum = static_cast<long>(rng() % 7) - 3;
        const long den = 1 + static_cast<long>(rng() % 3);
        if (cnum != 0) {
            f = f + TrigPoly<R>::cosine(n, volume, u, tol)
                        .scaled(scalar_traits<R>::from_long(cnum) /
                                scalar_traits<R>::from_long(den));
        }
        if (snum != 0) {
            f = f + TrigPoly<R>::sine(n, volume, u, tol)
                        .scaled(scalar_traits<R>::from_long(snum) /
                                scalar_traits<R>::from_long(den));
        }
    }
    return f;
}

/// Random mixed-degree form: a handful of components with random index masks
/// and random complex rational trig coefficients at the given frequencies.
template <class R>
GeneralForm<R> random_form(std::mt19937_64& rng, int n, const R& volume,
                           const std::vector<VecX<R>>& freqs, int pieces, double tol = 1e-9) {
    GeneralForm<R> a(n, volume, tol);
    const unsigned full = (1u << n) - 1u;
    for (int p = 0; p < pieces; ++p) {
        const unsigned I = static_cast<unsigned>(rng()) & full;
        const unsigned J = static_cast<unsigned>(rng()) & full;
        const auto& u = freqs[rng() % freqs.size()];
        const long re = static_cast<long>(rng() % 9) - 4;
        const long im = static_cast<long>(rng() % 9) - 4;
        const long den = 1 + static_cast<long>(rng() % 3);
        TrigPoly<R> c(n, volume, tol);
        c.add_mode(u, PiScalar<R>::from(Complex<R>(
                          scalar_traits<R>::from_long(re) / scalar_traits<R>::from_long(den),
                          scalar_traits<R>::from_long(im) / scalar_traits<R>::from_long(den))));
        a.add_component(I, J, c);
    }
    return a;
}

template <class R>
bool same_levels(const std::vector<EigenLevel<R>>& a, const std::vector<EigenLevel<R>>& b,
                 double tol) {
    using T = scalar_traits<R>;
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!T::eq(a[i].squared_norm, b[i].squared_norm, tol)) return false;
        if (a[i].reps.size() != b[i].reps.size()) return false;
        for (std::size_t r = 0; r < a[i].reps.size(); ++r) {
            for (Eigen::Index c = 0; c < a[i].reps[r].size(); ++c) {
                if (!T::eq(a[i].reps[r][c], b[i].reps[r][c], tol)) return false;
            }
        }
    }
    return true;
}

}  // namespace torex_test
