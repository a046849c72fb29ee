#pragma once

#include <utility>
#include <vector>

#include "padicres/padic/padic.hpp"
#include "padicres/poly/integer.hpp"
#include "padicres/poly/multi_poly.hpp"

namespace padicres::padic {

/// Element of Z_p[zeta_{p^m}] modulo p^K, stored as residues of its
/// coordinates in the basis 1, zeta, ..., zeta^{phi(p^m)-1}. Level m = 0 is
/// Z_p itself (zeta = 1).
class CycloPadic {
public:
    /// Reduces an arbitrary-length coefficient vector (coeffs[i] multiplies
    /// zeta^i) modulo Phi_{p^m} and p^K.
    static CycloPadic make(Prime p, unsigned long level, unsigned long precision, std::vector<Integer> coeffs);
    static CycloPadic from_integer(Prime p, unsigned long level, unsigned long precision, const Integer& x);
    /// zeta^e for any integer e (negative powers allowed).
    static CycloPadic zeta_power(Prime p, unsigned long level, unsigned long precision, long e);

    Prime prime() const noexcept { return p_; }
    unsigned long level() const noexcept { return level_; }
    unsigned long precision() const noexcept { return precision_; }
    /// Coordinates in [0, p^K); length phi(p^m).
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const;

    CycloPadic operator-() const;
    friend CycloPadic operator+(const CycloPadic& a, const CycloPadic& b);
    friend CycloPadic operator-(const CycloPadic& a, const CycloPadic& b);
    friend CycloPadic operator*(const CycloPadic& a, const CycloPadic& b);
    friend bool operator==(const CycloPadic& a, const CycloPadic& b);
    CycloPadic pow(const Integer& e) const;

    /// True iff the element is a unit, i.e. its image in the residue field
    /// F_p (zeta -> 1) is nonzero.
    bool is_unit() const;
    /// Inverse of a unit by Newton iteration; throws DomainError otherwise.
    CycloPadic invert_unit() const;

    /// Same element at a lower precision.
    CycloPadic truncated(unsigned long precision) const;
    /// Divides every coordinate by p^e; the coordinates must all be divisible
    /// and the precision drops by e.
    CycloPadic divided_by_p_power(unsigned long e) const;

    /// Norm to Z_p of the stored representative: Res(Phi_{p^m}, x) over the
    /// integers. Congruent to the true norm modulo p^K.
    Integer norm_of_representative() const;

    /// v_pi(x) with pi = 1 - zeta, so v_pi(p) = phi(p^m). Computed as v_p of
    /// the integer norm. Throws PrecisionError when x is indistinguishable from
    /// 0 at this precision.
    unsigned long pi_valuation() const;

private:
    CycloPadic(Prime p, unsigned long level, unsigned long precision) : p_(p), level_(level), precision_(precision) {}

    void check_compatible(const CycloPadic& o) const;

    Prime p_;
    unsigned long level_;
    unsigned long precision_;
    std::vector<Integer> coeffs_;
};

/// log of a principal unit of Z_p[zeta_{p^m}], returned scaled:
/// log(x) = p^{exponent} * value with exponent <= 0. value = log(x^{p^N}) for
/// the least N with v_p(x^{p^N} - 1) > 1/(p-1), where the series converges.
/// value.precision() reports the digits that survive the series' divisions.
struct ScaledLog {
    CycloPadic value;
    long exponent;
};
ScaledLog cyclo_log(const CycloPadic& x);

/// v_2 (normalized so v_2(2) = 1) of log((m z + m + 1)/(m z + m + z)) for z a
/// primitive 2^level-th root of unity, level >= 2. m = 0 makes the argument a
/// root of unity whose log vanishes: throws DegenerateInput. Working
/// precision starts at `precision` and is raised if the valuation is not
/// visible.
Rational nu_zeta(const Integer& m, unsigned long level, unsigned long precision = 32);

/// The Whitehead argument (m z + m + 1)/(m z + m + z) at level j, p = 2.
CycloPadic whitehead_argument(const Integer& m, unsigned long level, unsigned long precision);

/// f at the root-of-unity tuple (zeta_{p^{j_1}}^{k_1}, ..., zeta_{p^{j_d}}^{k_d}),
/// computed inside Z_p[zeta_{p^M}] with M = max j_i using
/// zeta_{p^a} = zeta_{p^M}^{p^{M-a}}.
CycloPadic evaluate_at_roots(const poly::MultiPoly& f, Prime p,
                             const std::vector<std::pair<unsigned long, unsigned long>>& roots, unsigned long precision);

} // namespace padicres::padic
