#pragma once

#include "ckrep/radical.hpp"
#include "ckrep/rational.hpp"

#include <cmath>
#include <complex>

namespace ckrep {

/// Uniform interface over the value scalars the representation engines run
/// on: exact radicals (rational mode), doubles, and complex doubles.
/// Geometry (breakpoints, interval endpoints) is exact rational in every
/// mode; only cell amplitudes switch type.
template <class V>
struct scalar_traits;

template <>
struct scalar_traits<Radical> {
    static constexpr bool exact = true;
    static Radical zero() { return Radical(); }
    static Radical one() { return Radical(Rational(1)); }
    static Radical from_rational(const Rational& q) { return Radical(q); }
    static Radical sqrt_rational(const Rational& q) { return Radical::sqrt_of(q); }
    static Radical conj(const Radical& v) { return v; }
    static bool is_zero(const Radical& v) { return v.is_zero(); }
    static double real_to_double(const Radical& v) { return v.to_double(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_rational(const Rational& q) { return to_double(q); }
    static double sqrt_rational(const Rational& q) { return std::sqrt(to_double(q)); }
    static double conj(double v) { return v; }
    static bool is_zero(double v) { return v == 0.0; }
    static double real_to_double(double v) { return v; }
};

template <>
struct scalar_traits<std::complex<double>> {
    static constexpr bool exact = false;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_rational(const Rational& q) { return {to_double(q), 0.0}; }
    static std::complex<double> sqrt_rational(const Rational& q) {
        return {std::sqrt(to_double(q)), 0.0};
    }
    static std::complex<double> conj(const std::complex<double>& v) { return std::conj(v); }
    static bool is_zero(const std::complex<double>& v) { return v == std::complex<double>{}; }
    static double real_to_double(const std::complex<double>& v) { return v.real(); }
};

}  // namespace ckrep
