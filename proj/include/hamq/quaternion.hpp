#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "hamq/errors.hpp"

namespace hamq {

using Complex = std::complex<double>;

/// Hamilton quaternion a + bi + cj + dk over double. Values are immutable in
/// spirit: every operation returns a new value, nothing mutates in place, so
/// concurrent use needs no synchronization.
struct Quaternion {
    double a{0.0};
    double b{0.0};
    double c{0.0};
    double d{0.0};

    constexpr Quaternion() = default;
    constexpr Quaternion(double a_, double b_, double c_, double d_)
        : a(a_), b(b_), c(c_), d(d_) {}

    static constexpr Quaternion zero() { return {}; }
    static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }
    static constexpr Quaternion from_real(double x) { return {x, 0.0, 0.0, 0.0}; }

    /// Exact componentwise equality. Tolerance-based comparison is
    /// approx_equal below.
    friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
}

constexpr Quaternion operator-(const Quaternion& q) {
    return {-q.a, -q.b, -q.c, -q.d};
}

constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
}

/// Hamilton product. Not commutative: ij = k = -ji.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
            p.a * q.b + q.a * p.b + p.c * q.d - q.c * p.d,
            p.a * q.c + q.a * p.c - p.b * q.d + q.b * p.d,
            p.a * q.d + q.a * p.d + p.b * q.c - q.b * p.c};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.a, s * q.b, s * q.c, s * q.d};
}

constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

constexpr Quaternion scalar_mul(double s, const Quaternion& q) { return s * q; }

constexpr Quaternion conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

/// q * conj(q), collapsed to the real number a^2 + b^2 + c^2 + d^2.
constexpr double mul_conj(const Quaternion& q) {
    return q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
}

/// Squared norm; identical to mul_conj, kept as its own operation because
/// the two concepts enter different identities.
constexpr double norm_sq(const Quaternion& q) { return mul_conj(q); }

inline double modulus(const Quaternion& q) { return std::sqrt(mul_conj(q)); }

constexpr bool is_zero(const Quaternion& q) { return q == Quaternion{}; }

inline Quaternion inverse(const Quaternion& q) {
    if (is_zero(q)) throw ZeroDivisor{};
    const double n = norm_sq(q);
    return {q.a / n, -q.b / n, -q.c / n, -q.d / n};
}

/// Right division p * q^-1 (the only division exposed; the algebra is not
/// commutative, so p * q^-1 != q^-1 * p in general).
inline Quaternion operator/(const Quaternion& p, const Quaternion& q) {
    return p * inverse(q);
}

inline Quaternion div_right(const Quaternion& p, const Quaternion& q) { return p / q; }

inline bool is_unit(const Quaternion& q, double tol) {
    return std::abs(norm_sq(q) - 1.0) <= tol;
}

/// Max-componentwise absolute comparison.
inline bool approx_equal(const Quaternion& p, const Quaternion& q, double tol = 1e-12) {
    return std::abs(p.a - q.a) <= tol && std::abs(p.b - q.b) <= tol &&
           std::abs(p.c - q.c) <= tol && std::abs(p.d - q.d) <= tol;
}

// --- symplectic decomposition q = z1 + z2*j ---------------------------------

struct ComplexPair {
    Complex z1;  // a + bi
    Complex z2;  // c + di
};

constexpr ComplexPair to_complex_pair(const Quaternion& q) {
    return {Complex{q.a, q.b}, Complex{q.c, q.d}};
}

constexpr Quaternion from_complex_pair(const ComplexPair& p) {
    return {p.z1.real(), p.z1.imag(), p.z2.real(), p.z2.imag()};
}

/// Embed a complex number into the (1, i) plane of H. Note the swap rule
/// j * embed(z) = embed(conj(z)) * j.
constexpr Quaternion embed(const Complex& z) { return {z.real(), z.imag(), 0.0, 0.0}; }

// --- scalar + vector view ----------------------------------------------------

struct ScalarVector {
    double s{0.0};
    std::array<double, 3> v{0.0, 0.0, 0.0};

    friend constexpr bool operator==(const ScalarVector&, const ScalarVector&) = default;
};

constexpr ScalarVector to_scalar_vector(const Quaternion& q) {
    return {q.a, {q.b, q.c, q.d}};
}

constexpr Quaternion from_scalar_vector(const ScalarVector& sv) {
    return {sv.s, sv.v[0], sv.v[1], sv.v[2]};
}

constexpr ScalarVector conj(const ScalarVector& sv) {
    return {sv.s, {-sv.v[0], -sv.v[1], -sv.v[2]}};
}

/// (s, v)(s', v') = (ss' - v.v', s v' + s' v + v x v'). Terms are ordered
/// exactly as in the componentwise Hamilton product so the two routes agree
/// bit for bit, not just to rounding.
constexpr ScalarVector operator*(const ScalarVector& p, const ScalarVector& q) {
    const auto& v = p.v;
    const auto& w = q.v;
    return {p.s * q.s - v[0] * w[0] - v[1] * w[1] - v[2] * w[2],
            {p.s * w[0] + q.s * v[0] + v[1] * w[2] - w[1] * v[2],
             p.s * w[1] + q.s * v[1] - v[0] * w[2] + w[0] * v[2],
             p.s * w[2] + q.s * v[2] + v[0] * w[1] - w[0] * v[1]}};
}

constexpr ScalarVector mul_scalar_vector(const ScalarVector& p, const ScalarVector& q) {
    return p * q;
}

}  // namespace hamq
