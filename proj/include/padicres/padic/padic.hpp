#pragma once

#include <string>

#include "padicres/poly/integer.hpp"

namespace padicres::padic {

/// v_p(x); throws DomainError for x = 0.
unsigned long vp(const Integer& x, Prime p);

/// x with every factor p removed, sign preserved; throws DomainError for x = 0.
Integer nonp_part(const Integer& x, Prime p);

/// A p-adic integer known modulo p^K, stored as p^v * u with u a unit in
/// [1, p^{K-v}). When v >= K the value is indistinguishable from 0 and only
/// the precision is kept.
class PadicApprox {
public:
    /// x mod p^K. K must be at least 1.
    static PadicApprox from_integer(const Integer& x, Prime p, unsigned long precision);
    /// The class of 0 at precision K.
    static PadicApprox zero(Prime p, unsigned long precision);

    Prime prime() const noexcept { return p_; }
    unsigned long precision() const noexcept { return precision_; }
    bool is_zero() const noexcept { return zero_; }
    /// Throws DomainError for a value indistinguishable from 0.
    unsigned long valuation() const;
    /// Unit part; 0 for a value indistinguishable from 0.
    const Integer& unit() const noexcept { return unit_; }
    /// Representative in [0, p^K).
    Integer residue() const;

    /// Same value at a lower precision.
    PadicApprox truncated(unsigned long precision) const;

    /// Number of leading p-adic digits on which the two values agree, capped
    /// by the smaller precision.
    unsigned long agreeing_digits(const PadicApprox& o) const;

    PadicApprox operator-() const;
    friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b);
    friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
    /// Inverse of a unit; throws DomainError otherwise.
    PadicApprox inverse() const;

    /// "p^v * u mod p^K", or "0 mod p^K".
    std::string to_string() const;

private:
    PadicApprox(Prime p, unsigned long precision) : p_(p), precision_(precision) {}

    Prime p_;
    unsigned long precision_;
    bool zero_ = true;
    unsigned long valuation_ = 0;
    Integer unit_ = 0;
};

/// Teichmueller representative of x: for p not dividing x, the root of unity
/// congruent to x mod p, found by iterating y <- y^p mod p^K to a fixed point
/// (for p = 2 this fixed point is 1). For p | x, exact 0 by convention.
PadicApprox teichmuller(const Integer& x, Prime p, unsigned long precision);

/// log(u) by the truncated series sum (-1)^{k+1} (u-1)^k / k. Requires
/// u = 1 mod p (mod 4 for p = 2); the result has the precision of u.
PadicApprox padic_log(const PadicApprox& u);

/// log of an arbitrary unit: log(u^{p-1})/(p-1) for odd p (precision kept),
/// log(u^2)/2 for p = 2 (one digit of precision lost to the halving).
PadicApprox padic_log_unit(const PadicApprox& u);

} // namespace padicres::padic
