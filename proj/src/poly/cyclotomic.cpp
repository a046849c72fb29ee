#include "padicres/poly/cyclotomic.hpp"

#include "padicres/error.hpp"

namespace padicres::poly {

namespace {

unsigned long checked_prime_power(Prime p, unsigned long e)
{
    const Integer q = prime_power(p, e);
    if (!q.fits_ulong_p() || q > (1ul << 40))
        throw BudgetError("p^" + std::to_string(e) + " is too large for a dense polynomial");
    return q.get_ui();
}

} // namespace

unsigned long phi_prime_power(Prime p, unsigned long j)
{
    if (j == 0)
        return 1;
    return checked_prime_power(p, j - 1) * (p.value() - 1);
}

IntPoly cyclotomic(Prime p, unsigned long j)
{
    if (j == 0)
        return int_poly({-1, 1});
    const unsigned long step = checked_prime_power(p, j - 1);
    std::vector<Integer> c(step * (p.value() - 1) + 1, Integer(0));
    for (unsigned long k = 0; k < p.value(); ++k)
        c[k * step] = 1;
    return int_poly(std::move(c));
}

IntPoly cyclic_modulus(Prime p, unsigned long n)
{
    const unsigned long q = checked_prime_power(p, n);
    std::vector<Integer> c(q + 1, Integer(0));
    c[0] = -1;
    c[q] = 1;
    return int_poly(std::move(c));
}

} // namespace padicres::poly
