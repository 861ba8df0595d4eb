#pragma once

#include <array>

#include "hamq/quaternion.hpp"

namespace hamq {

/// Minimal 2x2 complex matrix; just enough for the representation work.
struct Mat2c {
    std::array<std::array<Complex, 2>, 2> m{};

    Complex& operator()(int r, int c) { return m[r][c]; }
    const Complex& operator()(int r, int c) const { return m[r][c]; }

    friend bool operator==(const Mat2c&, const Mat2c&) = default;
};

Mat2c operator+(const Mat2c& x, const Mat2c& y);
Mat2c operator*(const Mat2c& x, const Mat2c& y);
Complex det(const Mat2c& x);
/// Largest entrywise |x - y|.
double max_abs_diff(const Mat2c& x, const Mat2c& y);

/// The quaternion as [[a+bi, c+di], [-c+di, a-bi]].
using MatrixForm = Mat2c;

/// Planar polar data of the two complex slots: a+bi = rho cis(theta),
/// c+di = rho0 cis(beta).
struct TrigForm {
    double rho{0.0};
    double theta{0.0};
    double rho0{0.0};
    double beta{0.0};
};

/// Same parameters as TrigForm read through e^{i t}: q = rho e^{i theta}
/// + rho0 e^{i beta} j.
struct ExpForm {
    double rho{0.0};
    double theta{0.0};
    double rho0{0.0};
    double beta{0.0};
};

/// q = rho * (cos(alpha) + sin(alpha) j) with complex radius and angle.
/// rho^2 = z1^2 + z2^2, which is NOT the squared modulus unless b = d = 0.
struct CjsForm {
    Complex rho;
    Complex alpha;
};

struct SphericalForm {
    double rho{0.0};       // modulus
    double theta{0.0};     // in [0, pi]
    double vartheta{0.0};  // in [0, pi]
    double psi{0.0};       // in [0, 2*pi)
};

/// Componentwise natural logs; exists only for strictly positive components.
struct LogForm {
    double la{0.0};
    double lb{0.0};
    double lc{0.0};
    double ld{0.0};
};

/// [[rho cis(theta), rho0 cis(beta)], [-rho0 cis(-beta), rho cis(-theta)]].
struct TrigMatrixForm {
    Mat2c m;
};

MatrixForm to_matrix(const Quaternion& q);
/// Validates the quaternionic structure (m11 = conj(m00), m10 = -conj(m01))
/// within `tol`; throws NotQuaternionic otherwise.
Quaternion from_matrix(const MatrixForm& m, double tol = 1e-9);

TrigForm to_trig(const Quaternion& q);
Quaternion from_trig(const TrigForm& t);

ExpForm to_exp(const Quaternion& q);
Quaternion from_exp(const ExpForm& e);

/// Throws CjsDegenerate for nonzero q with z1^2 + z2^2 = 0 (e.g. 1 + k);
/// that is exactly the set where the complex radius would vanish while
/// q does not. to_cjs(0) = (0, 0) by convention.
CjsForm to_cjs(const Quaternion& q);
Quaternion from_cjs(const CjsForm& f);

/// alpha = (i/2) Ln((a+d+(b-c)i) / (a-d+(b+c)i)); agrees with
/// catan(z2/z1) mod pi wherever both are defined. Throws DegenerateAlpha
/// when the denominator vanishes (LogOfZero propagates when the numerator
/// does).
Complex alpha_log_form(const Quaternion& q);

/// rho1 cis(beta) * (cos(x+iy) + sin(x+iy) j), assembled by genuine
/// noncommutative multiplication. For beta = 0 the components reduce to
/// (rho1 cos x cosh y, -rho1 sin x sinh y, rho1 sin x cosh y,
///  rho1 cos x sinh y).
Quaternion cjs_component_decomposition(double rho1, double beta, double x, double y);

SphericalForm to_spherical(const Quaternion& q);
Quaternion from_spherical(const SphericalForm& s);

/// Requires a, b, c, d > 0; throws LogDomain otherwise.
LogForm to_log(const Quaternion& q);
Quaternion from_log(const LogForm& l);

TrigMatrixForm to_trig_matrix(const Quaternion& q);
/// Splits into diagonal-cosine, diagonal-i-sine, off-diagonal-cosine and
/// off-diagonal-sine matrices; the four always sum back to t.m entrywise.
std::array<Mat2c, 4> decompose4(const TrigMatrixForm& t);

}  // namespace hamq
