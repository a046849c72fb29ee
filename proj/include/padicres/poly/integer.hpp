#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace padicres {

using Integer = mpz_class;
using Rational = mpq_class;

/// A rational prime. Construction checks primality.
class Prime {
public:
    explicit Prime(unsigned long value);

    unsigned long value() const noexcept { return value_; }
    Integer as_integer() const { return Integer(value_); }
    bool is_two() const noexcept { return value_ == 2; }

    friend bool operator==(Prime, Prime) = default;

private:
    unsigned long value_;
};

bool is_prime(unsigned long n);

/// p^e as a big integer.
Integer power(const Integer& base, unsigned long exponent);
Integer prime_power(Prime p, unsigned long exponent);

/// Removes every factor p from x in place and returns how many were removed.
/// x must be nonzero.
unsigned long remove_factor(Integer& x, Prime p);

/// Non-negative residue of x modulo m.
Integer mod_floor(const Integer& x, const Integer& m);

/// Inverse of x modulo m; x must be invertible.
Integer inverse_mod(const Integer& x, const Integer& m);

int sign(const Integer& x);

} // namespace padicres
