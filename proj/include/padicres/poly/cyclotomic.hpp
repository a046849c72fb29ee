#pragma once

#include "padicres/poly/integer.hpp"
#include "padicres/poly/uni_poly.hpp"

namespace padicres::poly {

/// Phi_{p^j}(t). Phi_1 = t - 1; for j >= 1 the sum of t^{k p^{j-1}}, k < p.
IntPoly cyclotomic(Prime p, unsigned long j);

/// Euler phi of p^j (1 for j = 0).
unsigned long phi_prime_power(Prime p, unsigned long j);

/// t^{p^n} - 1.
IntPoly cyclic_modulus(Prime p, unsigned long n);

} // namespace padicres::poly
