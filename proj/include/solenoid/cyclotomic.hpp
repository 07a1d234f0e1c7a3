#pragma once

// Exact arithmetic with roots of unity.  Elements of Q(zeta_n) are carried
// as group-algebra coefficient vectors (c_0, ..., c_{n-1}) standing for
// sum c_k zeta^k; products are convolutions mod zeta^n = 1, and equality or
// rationality questions are settled by reducing the corresponding polynomial
// mod the n-th cyclotomic polynomial (the minimal polynomial of zeta_n).

#include "solenoid/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace solenoid {

// Dense polynomial over Q: coefficients ascending, no trailing zeros.
using Poly = std::vector<Rational>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b);

// Memoized and safe to call concurrently.
const Poly& cyclotomic_polynomial(const Int& n);

using Cyclo = std::vector<Rational>;

Cyclo cyclo_zero(const Int& n);
Cyclo cyclo_one(const Int& n);
Cyclo cyclo_root_power(const Int& n, const Int& k);  // zeta_n^k
Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b);
void cyclo_add_scaled(Cyclo& a, const Rational& w, const Cyclo& b);

bool cyclo_is_zero(const Cyclo& a);
// The value as a rational number, when it is one.
std::optional<Rational> cyclo_rational(const Cyclo& a);

}  // namespace solenoid
