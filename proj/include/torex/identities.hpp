#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torex/eigenbasis.hpp"

namespace torex {

struct IdentityCheck {
    std::string name;
    bool pass = false;
};

struct IdentitySummary {
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks) {
            if (!c.pass) return false;
        }
        return true;
    }
};

/// Verifies the eigenfunction identities on one level, exactly in exact mode:
/// for each pair (phi, psi) of cosine/sine modes,
///   |grad phi|^2 = lambda psi^2,
///   |grad psi|^2 = lambda phi^2,
///   |ddc phi|^2  = lambda^2 phi^2,
///   L(phi) + L(psi) = 0,
/// and for `random_combos` random rational eigenspace combinations f,
///   L(f) = lambda^2 f^2 - 2 lambda |grad f|^2 + |ddc f|^2.
template <class R>
IdentitySummary identity_suite(const LatticeBasis<R>& lat, const EigenLevel<R>& level,
                               int random_combos = 0, std::uint64_t seed = 1) {
    using T = scalar_traits<R>;
    const double tol = T::exact ? 0.0 : lat.tol;
    const EigenBasis<R> basis(lat, level);
    const PiScalar<R> lambda = level.lambda();
    IdentitySummary out;

    for (int nu = 0; nu < level.l(); ++nu) {
        const TrigPoly<R> phi = basis.phi_raw(nu);
        const TrigPoly<R> psi = basis.psi_raw(nu);
        const std::string tag = "pair " + std::to_string(nu + 1) + ": ";
        out.checks.push_back({tag + "|grad phi|^2 = lambda psi^2",
                              grad_inner(phi, phi).eq((psi * psi).scaled(lambda), tol)});
        out.checks.push_back({tag + "|grad psi|^2 = lambda phi^2",
                              grad_inner(psi, psi).eq((phi * phi).scaled(lambda), tol)});
        const Form11<R> dphi = ddc(phi);
        out.checks.push_back(
            {tag + "|ddc phi|^2 = lambda^2 phi^2",
             form_inner(dphi, dphi).eq((phi * phi).scaled(lambda * lambda), tol)});
        out.checks.push_back({tag + "L(phi) + L(psi) = 0", basis.pair_l(nu).is_zero(tol)});
    }

    if (random_combos > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> coeff(-3, 3);
        bool all = true;
        for (int trial = 0; trial < random_combos; ++trial) {
            TrigPoly<R> f(lat.n, basis.volume(), lat.tol);
            bool nonzero = false;
            for (int i = 0; i < basis.size(); ++i) {
                const int c = coeff(rng);
                if (c == 0) continue;
                nonzero = true;
                f = f + basis.basis_raw(i).scaled(T::from_long(c));
            }
            if (!nonzero) f = basis.phi_raw(0);
            all = all && l_op(f).eq(l_rhs(f, lambda, tol), tol);
        }
        out.checks.push_back({"closed form of L on " + std::to_string(random_combos) +
                                  " random eigenspace combinations",
                              all});
    }
    return out;
}

}  // namespace torex
