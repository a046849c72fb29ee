#include "padicres/resultant/mpfr_complex.hpp"

namespace padicres::resultant {

Complex root_of_unity(unsigned long k, unsigned long n, mpfr_prec_t prec)
{
    Complex z(prec);
    Real angle(prec + 16);
    mpfr_const_pi(angle.get(), MPFR_RNDN);
    mpfr_mul_ui(angle.get(), angle.get(), 2 * (k % n), MPFR_RNDN);
    mpfr_div_ui(angle.get(), angle.get(), n, MPFR_RNDN);
    mpfr_sin_cos(z.im.get(), z.re.get(), angle.get(), MPFR_RNDN);
    return z;
}

void mul_assign(Complex& acc, const Complex& z)
{
    const mpfr_prec_t prec = acc.re.precision();
    Real ac(prec), bd(prec), ad(prec), bc(prec);
    mpfr_mul(ac.get(), acc.re.get(), z.re.get(), MPFR_RNDN);
    mpfr_mul(bd.get(), acc.im.get(), z.im.get(), MPFR_RNDN);
    mpfr_mul(ad.get(), acc.re.get(), z.im.get(), MPFR_RNDN);
    mpfr_mul(bc.get(), acc.im.get(), z.re.get(), MPFR_RNDN);
    mpfr_sub(acc.re.get(), ac.get(), bd.get(), MPFR_RNDN);
    mpfr_add(acc.im.get(), ad.get(), bc.get(), MPFR_RNDN);
}

Integer round_to_integer(const Real& x, double* error)
{
    Integer z;
    mpfr_get_z(z.get_mpz_t(), x.get(), MPFR_RNDN);
    if (error) {
        Real diff(x.precision());
        mpfr_sub_z(diff.get(), x.get(), z.get_mpz_t(), MPFR_RNDN);
        *error = std::abs(mpfr_get_d(diff.get(), MPFR_RNDN));
    }
    return z;
}

} // namespace padicres::resultant
