#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <string>

#include "torex/errors.hpp"

namespace torex {

/// Arbitrary-precision rational; GMP canonical form (lowest terms, q > 0).
using Rat = boost::multiprecision::mpq_rational;

/// Parses "p", "-p", or "p/q" (q != 0). Throws ParseError otherwise.
Rat parse_rational(const std::string& text);

/// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rat& value);

inline double rat_to_double(const Rat& value) { return value.template convert_to<double>(); }

/// Uniform compile-time interface over the two scalar modes.
/// Exact mode (Rat): equality is literal, tolerances are ignored.
/// Float mode (double): equality within relative tolerance
///   |a-b| <= tol * max(1, |a|, |b|).
template <class R>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static constexpr bool exact = true;
    static const char* mode_name() { return "exact"; }
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_long(long n) { return Rat(n); }
    static bool eq(const Rat& a, const Rat& b, double) { return a == b; }
    static bool is_zero(const Rat& a, double) { return a.is_zero(); }
    static double to_double(const Rat& a) { return rat_to_double(a); }
    static Rat abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }
    static std::string str(const Rat& a) { return format_rational(a); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static const char* mode_name() { return "float"; }
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_long(long n) { return static_cast<double>(n); }
    static bool eq(double a, double b, double tol) {
        const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        return std::fabs(a - b) <= tol * scale;
    }
    static bool is_zero(double a, double tol) { return std::fabs(a) <= tol; }
    static double to_double(double a) { return a; }
    static double abs(double a) { return std::fabs(a); }
    static std::string str(double a);
};

}  // namespace torex
