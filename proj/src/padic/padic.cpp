#include "padicres/padic/padic.hpp"

#include <algorithm>

#include "padicres/error.hpp"

namespace padicres::padic {

unsigned long vp(const Integer& x, Prime p)
{
    Integer y = x;
    return remove_factor(y, p);
}

Integer nonp_part(const Integer& x, Prime p)
{
    Integer y = x;
    remove_factor(y, p);
    return y;
}

PadicApprox PadicApprox::from_integer(const Integer& x, Prime p, unsigned long precision)
{
    if (precision == 0)
        throw DomainError("p-adic precision must be at least 1");
    PadicApprox r(p, precision);
    Integer y = mod_floor(x, prime_power(p, precision));
    if (y == 0)
        return r;
    r.zero_ = false;
    r.valuation_ = remove_factor(y, p);
    r.unit_ = mod_floor(y, prime_power(p, precision - r.valuation_));
    return r;
}

PadicApprox PadicApprox::zero(Prime p, unsigned long precision)
{
    if (precision == 0)
        throw DomainError("p-adic precision must be at least 1");
    return PadicApprox(p, precision);
}

unsigned long PadicApprox::valuation() const
{
    if (zero_)
        throw DomainError("valuation of a value indistinguishable from 0 mod " + std::to_string(p_.value()) + "^"
                          + std::to_string(precision_));
    return valuation_;
}

Integer PadicApprox::residue() const
{
    if (zero_)
        return 0;
    return unit_ * prime_power(p_, valuation_);
}

PadicApprox PadicApprox::truncated(unsigned long precision) const
{
    return from_integer(residue(), p_, std::min(precision, precision_));
}

unsigned long PadicApprox::agreeing_digits(const PadicApprox& o) const
{
    if (!(o.p_ == p_))
        throw DomainError("comparing p-adic values for different primes");
    const unsigned long k = std::min(precision_, o.precision_);
    const Integer diff = mod_floor(residue() - o.residue(), prime_power(p_, k));
    return diff == 0 ? k : vp(diff, p_);
}

namespace {

void check_same_prime(const PadicApprox& a, const PadicApprox& b)
{
    if (!(a.prime() == b.prime()))
        throw DomainError("p-adic values for different primes");
}

} // namespace

PadicApprox PadicApprox::operator-() const
{
    return from_integer(-residue(), p_, precision_);
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b)
{
    check_same_prime(a, b);
    return PadicApprox::from_integer(a.residue() + b.residue(), a.p_, std::min(a.precision_, b.precision_));
}

PadicApprox operator-(const PadicApprox& a, const PadicApprox& b)
{
    check_same_prime(a, b);
    return PadicApprox::from_integer(a.residue() - b.residue(), a.p_, std::min(a.precision_, b.precision_));
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b)
{
    check_same_prime(a, b);
    // (x + p^Ka e)(y + p^Kb e') is known modulo p^{min(Ka + v(y), Kb + v(x))}.
    const unsigned long va = a.zero_ ? a.precision_ : a.valuation_;
    const unsigned long vb = b.zero_ ? b.precision_ : b.valuation_;
    const unsigned long k = std::min(a.precision_ + vb, b.precision_ + va);
    return PadicApprox::from_integer(a.residue() * b.residue(), a.p_, k);
}

PadicApprox PadicApprox::inverse() const
{
    if (zero_ || valuation_ != 0)
        throw DomainError("inverting a p-adic non-unit");
    return from_integer(inverse_mod(unit_, prime_power(p_, precision_)), p_, precision_);
}

std::string PadicApprox::to_string() const
{
    const std::string modulus = " mod " + std::to_string(p_.value()) + "^" + std::to_string(precision_);
    if (zero_)
        return "0" + modulus;
    return std::to_string(p_.value()) + "^" + std::to_string(valuation_) + " * " + unit_.get_str() + modulus;
}

PadicApprox teichmuller(const Integer& x, Prime p, unsigned long precision)
{
    if (mpz_divisible_ui_p(x.get_mpz_t(), p.value()))
        return PadicApprox::zero(p, precision);
    const Integer modulus = prime_power(p, precision);
    Integer y = mod_floor(x, modulus);
    for (;;) {
        Integer next;
        mpz_powm_ui(next.get_mpz_t(), y.get_mpz_t(), p.value(), modulus.get_mpz_t());
        if (next == y)
            break;
        y = next;
    }
    return PadicApprox::from_integer(y, p, precision);
}

PadicApprox padic_log(const PadicApprox& u)
{
    const Prime p = u.prime();
    const unsigned long K = u.precision();
    const Integer x = u.residue() - 1;
    const unsigned long needed = p.is_two() ? 2 : 1;
    const PadicApprox xa = PadicApprox::from_integer(x, p, K);
    if (!xa.is_zero() && xa.valuation() < needed)
        throw DomainError("p-adic log needs u = 1 mod " + std::to_string(p.is_two() ? 4 : p.value()));
    if (xa.is_zero())
        return PadicApprox::zero(p, K);
    const unsigned long a = xa.valuation();
    const Integer modulus = prime_power(p, K);
    Integer sum = 0;
    Integer xk = 1;
    for (unsigned long k = 1;; ++k) {
        // floor(log_p k) bounds v_p(k); once k*a - floor(log_p k) >= K every
        // later term vanishes mod p^K too.
        unsigned long log_k = 0;
        for (unsigned long q = p.value(); q <= k; q *= p.value())
            ++log_k;
        if (k * a >= K + log_k)
            break;
        xk *= x;
        Integer kk = k;
        const unsigned long vk = remove_factor(kk, p);
        Integer term = xk / prime_power(p, vk);
        term = mod_floor(term * inverse_mod(kk, modulus), modulus);
        if (k % 2)
            sum += term;
        else
            sum -= term;
    }
    return PadicApprox::from_integer(sum, p, K);
}

PadicApprox padic_log_unit(const PadicApprox& u)
{
    if (u.is_zero() || u.valuation() != 0)
        throw DomainError("p-adic log of a non-unit");
    const Prime p = u.prime();
    const unsigned long K = u.precision();
    const Integer modulus = prime_power(p, K);
    const unsigned long e = p.is_two() ? 2 : p.value() - 1;
    Integer powered;
    mpz_powm_ui(powered.get_mpz_t(), u.residue().get_mpz_t(), e, modulus.get_mpz_t());
    const PadicApprox l = padic_log(PadicApprox::from_integer(powered, p, K));
    if (!p.is_two())
        return l * PadicApprox::from_integer(e, p, K).inverse();
    // log(u^2) = 0 mod 8; halve it and give up the digit it costs.
    if (K < 2)
        return PadicApprox::zero(p, 1);
    const Integer half = l.residue() / 2;
    return PadicApprox::from_integer(half, p, K - 1);
}

} // namespace padicres::padic
