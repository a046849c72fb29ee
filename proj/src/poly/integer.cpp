#include "padicres/poly/integer.hpp"

#include "padicres/error.hpp"

namespace padicres {

bool is_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Prime::Prime(unsigned long value) : value_(value)
{
    if (!is_prime(value))
        throw DomainError(std::to_string(value) + " is not prime");
}

Integer power(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer prime_power(Prime p, unsigned long exponent)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p.value(), exponent);
    return r;
}

unsigned long remove_factor(Integer& x, Prime p)
{
    if (x == 0)
        throw DomainError("valuation of zero");
    Integer pz = p.as_integer();
    return mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
}

Integer mod_floor(const Integer& x, const Integer& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer inverse_mod(const Integer& x, const Integer& m)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw DomainError("element is not invertible modulo " + m.get_str());
    return r;
}

int sign(const Integer& x)
{
    return sgn(x);
}

} // namespace padicres
