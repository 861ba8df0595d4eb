#pragma once

#include "hamq/quaternion.hpp"

namespace hamq {

/// q^n by exponentiation by squaring (sound: the product is associative).
/// Ground truth the other power routes are measured against. n >= 0.
Quaternion pow_oracle(const Quaternion& q, unsigned n);

/// De Moivre through the Cjs form: rho^n Cjs(n alpha). Coincides with
/// pow_oracle on the b = d = 0 subspace; elsewhere it evaluates the formula
/// as written and generally deviates (the auditor measures by how much).
/// CjsDegenerate propagates from to_cjs.
Quaternion pow_cjs(const Quaternion& q, unsigned n);

/// Newton binomial sum over (z1)^(n-h) (z2 j)^h with the printed factor
/// order. Coincides with pow_oracle whenever b = 0 (z1 real).
Quaternion pow_binomial(const Quaternion& q, unsigned n);

/// Factored variant z1^n * sum C(n,h) ((z2/z1) j)^h; requires z1 != 0
/// (throws ZeroLeadingComplex).
Quaternion pow_binomial_factored(const Quaternion& q, unsigned n);

}  // namespace hamq
