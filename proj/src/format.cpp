#include "hamq/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hamq {

std::string format_real(double x, int max_sig) {
    if (x == 0.0) return "0";  // covers -0
    char buf[48];
    for (int p = 1; p < max_sig; ++p) {
        std::snprintf(buf, sizeof buf, "%.*g", p, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    std::snprintf(buf, sizeof buf, "%.*g", max_sig, x);
    return buf;
}

namespace {

void append_term(std::string& out, double x, const char* unit, int max_sig) {
    if (std::signbit(x) && x != 0.0) {
        out += " - ";
        out += format_real(-x, max_sig);
    } else {
        out += " + ";
        out += format_real(x, max_sig);
    }
    out += unit;
}

}  // namespace

std::string format_quaternion(const Quaternion& q, int max_sig) {
    std::string out = format_real(q.a, max_sig);
    append_term(out, q.b, "i", max_sig);
    append_term(out, q.c, "j", max_sig);
    append_term(out, q.d, "k", max_sig);
    return out;
}

std::string format_complex(const Complex& z, int max_sig) {
    std::string out = format_real(z.real(), max_sig);
    append_term(out, z.imag(), "i", max_sig);
    return out;
}

std::string format_components(const Quaternion& q, int max_sig) {
    return "(" + format_real(q.a, max_sig) + ", " + format_real(q.b, max_sig) + ", " +
           format_real(q.c, max_sig) + ", " + format_real(q.d, max_sig) + ")";
}

std::string format_matrix(const Mat2c& m, int max_sig) {
    return "[[" + format_complex(m.m[0][0], max_sig) + ", " + format_complex(m.m[0][1], max_sig) +
           "], [" + format_complex(m.m[1][0], max_sig) + ", " + format_complex(m.m[1][1], max_sig) +
           "]]";
}

std::string format_sci(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

}  // namespace hamq
