#include "hamq/powers.hpp"

#include "hamq/complex_kernel.hpp"
#include "hamq/forms.hpp"

namespace hamq {

Quaternion pow_oracle(const Quaternion& q, unsigned n) {
    Quaternion acc = Quaternion::one();
    Quaternion base = q;
    while (n != 0) {
        if (n & 1u) acc = acc * base;
        base = base * base;
        n >>= 1u;
    }
    return acc;
}

Quaternion pow_cjs(const Quaternion& q, unsigned n) {
    const CjsForm f = to_cjs(q);
    return from_cjs({cpow_int(f.rho, n), static_cast<double>(n) * f.alpha});
}

Quaternion pow_binomial(const Quaternion& q, unsigned n) {
    const Quaternion z1{q.a, q.b, 0.0, 0.0};
    const Quaternion z2j{0.0, 0.0, q.c, q.d};
    Quaternion sum;
    double binom = 1.0;  // multiply-then-divide keeps these exact integers
    for (unsigned h = 0; h <= n; ++h) {
        if (h > 0) binom = binom * static_cast<double>(n - h + 1) / static_cast<double>(h);
        sum = sum + binom * (pow_oracle(z1, n - h) * pow_oracle(z2j, h));
    }
    return sum;
}

Quaternion pow_binomial_factored(const Quaternion& q, unsigned n) {
    const Complex z1{q.a, q.b};
    if (z1 == Complex{}) throw ZeroLeadingComplex{};
    const Complex w = Complex{q.c, q.d} / z1;
    const Quaternion wj{0.0, 0.0, w.real(), w.imag()};
    Quaternion sum;
    double binom = 1.0;
    for (unsigned h = 0; h <= n; ++h) {
        if (h > 0) binom = binom * static_cast<double>(n - h + 1) / static_cast<double>(h);
        sum = sum + binom * pow_oracle(wj, h);
    }
    return pow_oracle({q.a, q.b, 0.0, 0.0}, n) * sum;
}

}  // namespace hamq
