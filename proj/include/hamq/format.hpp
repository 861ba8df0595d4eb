#pragma once

#include <string>

#include "hamq/forms.hpp"
#include "hamq/quaternion.hpp"

namespace hamq {

/// Shortest representation that parses back to the same double, capped at
/// `max_sig` significant digits. "-0" is normalized to "0".
std::string format_real(double x, int max_sig = 12);

/// "a + bi + cj + dk" with sign-aware joining ("1 - 2i - 3j + 4k").
std::string format_quaternion(const Quaternion& q, int max_sig = 12);

/// "re + imi" / "re - imi".
std::string format_complex(const Complex& z, int max_sig = 12);

/// "(a, b, c, d)".
std::string format_components(const Quaternion& q, int max_sig = 12);

/// "[[z00, z01], [z10, z11]]".
std::string format_matrix(const Mat2c& m, int max_sig = 12);

/// Fixed scientific notation with six fractional digits ("1.234568e-03");
/// the audit report and residual printouts use this.
std::string format_sci(double x);

}  // namespace hamq
