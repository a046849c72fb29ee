#pragma once

#include <mpfr.h>

#include "padicres/poly/integer.hpp"

namespace padicres::resultant {

/// Owning MPFR real at a fixed precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o)
    {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() noexcept { return v_; }
    mpfr_srcptr get() const noexcept { return v_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

private:
    mpfr_t v_;
};

/// Complex number as a pair of MPFR reals.
struct Complex {
    explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}

    Real re;
    Real im;
};

/// e^{2 pi i k / n}.
Complex root_of_unity(unsigned long k, unsigned long n, mpfr_prec_t prec);

/// acc *= z.
void mul_assign(Complex& acc, const Complex& z);

/// Nearest integer to x, and |x - nearest| through `error` (may be null).
Integer round_to_integer(const Real& x, double* error);

} // namespace padicres::resultant
