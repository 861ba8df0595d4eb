#include "hamq/forms.hpp"

#include <cmath>
#include <numbers>

#include "hamq/complex_kernel.hpp"

namespace hamq {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double x) { return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace

Mat2c operator+(const Mat2c& x, const Mat2c& y) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = x.m[i][j] + y.m[i][j];
    return r;
}

Mat2c operator*(const Mat2c& x, const Mat2c& y) {
    Mat2c r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.m[i][j] = x.m[i][0] * y.m[0][j] + x.m[i][1] * y.m[1][j];
    return r;
}

Complex det(const Mat2c& x) { return x.m[0][0] * x.m[1][1] - x.m[0][1] * x.m[1][0]; }

double max_abs_diff(const Mat2c& x, const Mat2c& y) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) worst = std::max(worst, std::abs(x.m[i][j] - y.m[i][j]));
    return worst;
}

MatrixForm to_matrix(const Quaternion& q) {
    Mat2c r;
    r.m[0][0] = Complex{q.a, q.b};
    r.m[0][1] = Complex{q.c, q.d};
    r.m[1][0] = Complex{-q.c, q.d};
    r.m[1][1] = Complex{q.a, -q.b};
    return r;
}

Quaternion from_matrix(const MatrixForm& m, double tol) {
    if (std::abs(m.m[1][1] - std::conj(m.m[0][0])) > tol ||
        std::abs(m.m[1][0] + std::conj(m.m[0][1])) > tol)
        throw NotQuaternionic{};
    return {m.m[0][0].real(), m.m[0][0].imag(), m.m[0][1].real(), m.m[0][1].imag()};
}

TrigForm to_trig(const Quaternion& q) {
    const Complex z1{q.a, q.b};
    const Complex z2{q.c, q.d};
    TrigForm t;
    t.rho = std::abs(z1);
    t.theta = t.rho == 0.0 ? 0.0 : principal_arg(z1);
    t.rho0 = std::abs(z2);
    t.beta = t.rho0 == 0.0 ? 0.0 : principal_arg(z2);
    return t;
}

Quaternion from_trig(const TrigForm& t) {
    const Complex z1 = t.rho * cis(t.theta);
    const Complex z2 = t.rho0 * cis(t.beta);
    return from_complex_pair({z1, z2});
}

ExpForm to_exp(const Quaternion& q) {
    const TrigForm t = to_trig(q);
    return {t.rho, t.theta, t.rho0, t.beta};
}

Quaternion from_exp(const ExpForm& e) { return from_trig({e.rho, e.theta, e.rho0, e.beta}); }

CjsForm to_cjs(const Quaternion& q) {
    if (is_zero(q)) return {Complex{}, Complex{}};
    const ComplexPair p = to_complex_pair(q);
    const Complex s = p.z1 * p.z1 + p.z2 * p.z2;
    const double scale = std::norm(p.z1) + std::norm(p.z2);
    if (std::abs(s) <= 1e-12 * scale) throw CjsDegenerate{};

    const Complex rho = csqrt(s);
    Complex alpha;
    if (p.z1 == Complex{}) {
        // cos(alpha) = 0: pick the half-pi whose sine reproduces z2.
        alpha = std::abs(rho - p.z2) <= std::abs(rho + p.z2) ? Complex{kPi / 2, 0.0}
                                                             : Complex{-kPi / 2, 0.0};
    } else {
        alpha = catan(p.z2 / p.z1);
        // catan fixes alpha only mod pi; both reconstruction equations must
        // hold, and they flip sign together, so one shift settles it.
        const Complex rec = rho * ccos(alpha);
        if (std::abs(rec - p.z1) > std::abs(rec + p.z1)) alpha += kPi;
    }
    return {rho, alpha};
}

Quaternion from_cjs(const CjsForm& f) {
    return from_complex_pair({f.rho * ccos(f.alpha), f.rho * csin(f.alpha)});
}

Complex alpha_log_form(const Quaternion& q) {
    const Complex den{q.a - q.d, q.b + q.c};
    if (den == Complex{}) throw DegenerateAlpha{};
    const Complex num{q.a + q.d, q.b - q.c};
    return Complex{0.0, 0.5} * cln(num / den);
}

Quaternion cjs_component_decomposition(double rho1, double beta, double x, double y) {
    const Complex alpha{x, y};
    const Quaternion front = embed(rho1 * cis(beta));
    const Quaternion cjs_factor = from_complex_pair({ccos(alpha), csin(alpha)});
    return front * cjs_factor;
}

SphericalForm to_spherical(const Quaternion& q) {
    SphericalForm s;
    s.rho = modulus(q);
    if (s.rho == 0.0) return s;
    s.theta = std::acos(clamp_unit(q.a / s.rho));
    const double st = std::sin(s.theta);
    if (st != 0.0) {
        s.vartheta = std::acos(clamp_unit(q.b / (s.rho * st)));
        if (std::sin(s.vartheta) != 0.0) {
            s.psi = std::atan2(q.d, q.c);
            if (s.psi < 0.0) s.psi += 2.0 * kPi;
        }
    }
    return s;
}

Quaternion from_spherical(const SphericalForm& s) {
    const double st = std::sin(s.theta);
    const double sv = std::sin(s.vartheta);
    return {s.rho * std::cos(s.theta),
            s.rho * st * std::cos(s.vartheta),
            s.rho * st * sv * std::cos(s.psi),
            s.rho * st * sv * std::sin(s.psi)};
}

LogForm to_log(const Quaternion& q) {
    if (!(q.a > 0.0 && q.b > 0.0 && q.c > 0.0 && q.d > 0.0)) throw LogDomain{};
    return {std::log(q.a), std::log(q.b), std::log(q.c), std::log(q.d)};
}

Quaternion from_log(const LogForm& l) {
    return {std::exp(l.la), std::exp(l.lb), std::exp(l.lc), std::exp(l.ld)};
}

TrigMatrixForm to_trig_matrix(const Quaternion& q) {
    const TrigForm t = to_trig(q);
    TrigMatrixForm f;
    f.m.m[0][0] = t.rho * cis(t.theta);
    f.m.m[0][1] = t.rho0 * cis(t.beta);
    f.m.m[1][0] = -t.rho0 * cis(-t.beta);
    f.m.m[1][1] = t.rho * cis(-t.theta);
    return f;
}

std::array<Mat2c, 4> decompose4(const TrigMatrixForm& t) {
    Mat2c diag_cos, diag_isin, off_cos, off_sin;
    diag_cos.m[0][0] = t.m.m[0][0].real();
    diag_cos.m[1][1] = t.m.m[1][1].real();
    diag_isin.m[0][0] = Complex{0.0, t.m.m[0][0].imag()};
    diag_isin.m[1][1] = Complex{0.0, t.m.m[1][1].imag()};
    off_cos.m[0][1] = t.m.m[0][1].real();
    off_cos.m[1][0] = t.m.m[1][0].real();
    off_sin.m[0][1] = Complex{0.0, t.m.m[0][1].imag()};
    off_sin.m[1][0] = Complex{0.0, t.m.m[1][0].imag()};
    return {diag_cos, diag_isin, off_cos, off_sin};
}

}  // namespace hamq
