#pragma once

#include <cmath>
#include <numbers>

#include "hamq/errors.hpp"
#include "hamq/quaternion.hpp"

// Complex scalar helpers with one fixed branch convention everywhere:
// the principal argument lives in (-pi, pi]. Everything downstream (Cjs
// form, closed-form alpha, powers) assumes exactly this convention.

namespace hamq {

/// Principal argument in (-pi, pi]. atan2 can return -pi for arguments on
/// the negative real axis with a negative-zero imaginary part; that edge is
/// folded onto +pi.
inline double principal_arg(const Complex& z) {
    const double t = std::atan2(z.imag(), z.real());
    return t == -std::numbers::pi ? std::numbers::pi : t;
}

/// Principal square root: Re >= 0, and Im >= 0 on the branch cut, so
/// csqrt(-r) = i*sqrt(r) for r > 0 regardless of the sign of zero in the
/// imaginary part.
inline Complex csqrt(const Complex& z) {
    if (z == Complex{}) return {};
    const double r = std::sqrt(std::abs(z));
    const double t = 0.5 * principal_arg(z);
    return {r * std::cos(t), r * std::sin(t)};
}

/// Ln(z) = ln|z| + i Arg(z).
inline Complex cln(const Complex& z) {
    if (z == Complex{}) throw LogOfZero{};
    return {std::log(std::abs(z)), principal_arg(z)};
}

/// Tan^-1(z) = (i/2) Ln((i+z)/(i-z)). Finite arbitrarily close to the poles;
/// exactly at z = +-i the defining quotient degenerates.
inline Complex catan(const Complex& z) {
    if (z.real() == 0.0 && std::abs(z.imag()) == 1.0) throw AtanPole{};
    const Complex i{0.0, 1.0};
    return Complex{0.0, 0.5} * cln((i + z) / (i - z));
}

/// sin(x+iy) = sin x cosh y + i cos x sinh y.
inline Complex csin(const Complex& z) {
    const double x = z.real();
    const double y = z.imag();
    return {std::sin(x) * std::cosh(y), std::cos(x) * std::sinh(y)};
}

/// cos(x+iy) = cos x cosh y - i sin x sinh y.
inline Complex ccos(const Complex& z) {
    const double x = z.real();
    const double y = z.imag();
    return {std::cos(x) * std::cosh(y), -std::sin(x) * std::sinh(y)};
}

/// cis(t) = cos t + i sin t = e^{it} for real t.
inline Complex cis(double t) { return {std::cos(t), std::sin(t)}; }

/// e^{x+iy} = e^x cis(y).
inline Complex cexp(const Complex& z) {
    const double r = std::exp(z.real());
    return {r * std::cos(z.imag()), r * std::sin(z.imag())};
}

/// z^n for nonnegative integer n by squaring; branch-free.
inline Complex cpow_int(Complex z, unsigned n) {
    Complex acc{1.0, 0.0};
    while (n != 0) {
        if (n & 1u) acc *= z;
        z *= z;
        n >>= 1u;
    }
    return acc;
}

}  // namespace hamq
