#pragma once

#include <limits>
#include <string>
#include <vector>

#include "padicres/padic/padic.hpp"
#include "padicres/poly/multi_poly.hpp"
#include "padicres/poly/uni_poly.hpp"
#include "padicres/resultant/cyclic.hpp"

namespace padicres::limits {

using padic::PadicApprox;
using poly::IntPoly;
using poly::MultiPoly;
using resultant::CyclicMask;

inline constexpr unsigned long unlimited_digits = std::numeric_limits<unsigned long>::max();

/// True iff f(1, ..., 1) = 0 mod p, i.e. the limit of r (and r') is 0.
bool zero_limit_predicate(const MultiPoly& f, Prime p);

/// Which sequence a limit refers to: the resultants themselves, or their
/// non-p parts.
enum class Sequence { raw, nonp };

struct LimitOptions {
    /// Bound on prod p^{n_i} over the largest level vector evaluated.
    unsigned long level_budget = 65536;
    unsigned threads = 1;
};

/// Reads PADIC_RES_BUDGET if set, else the default.
LimitOptions default_limit_options();

struct LimitEstimate {
    PadicApprox value;
    /// p-adic digits of `value` that are certified; unlimited_digits for an
    /// exact 0.
    unsigned long certified_digits;
    /// Diagonal levels whose resultants were computed.
    std::vector<unsigned long> levels_used;
    /// Non-p part: the last two diagonal values agree on every reported
    /// digit. Always true for the raw sequence.
    bool stabilized;
    bool exact_zero = false;
};

/// Limit of r_{n,...,n}(f) (or r' / its non-p part) from diagonal levels.
///
/// Raw sequence: the value at (K, ..., K), certified to K digits by the
/// congruence r_N = r_n mod p^{min n}; exactly 0 when the zero-limit
/// predicate holds. Non-p part: equal to the raw value when p does not divide
/// f(1, ..., 1); otherwise the non-p parts at levels K and K+1 are compared,
/// the value is taken from K+1 and only the digits on which they agree (at
/// most K) are certified.
LimitEstimate limit_estimate(const MultiPoly& f, Prime p, unsigned long K, CyclicMask::Kind mask, Sequence sequence,
                             const LimitOptions& options = default_limit_options());

/// Predicted sign of the masked resultant at `levels` without computing it:
/// odd p, full mask: sign f(1, ..., 1); p = 2, full mask: sign r_{1,...,1}(f);
/// r' mask: +1 for odd p, sign f(-1, ..., -1) for p = 2. Throws
/// DegenerateInput when the predicted value is 0.
int sign_of(const MultiPoly& f, Prime p, const std::vector<unsigned long>& levels, CyclicMask::Kind mask);

struct IwasawaInvariants {
    unsigned long lambda = 0;
    unsigned long mu = 0;
    long nu = 0;
    /// Levels [first, last] on which e_n = lambda n + mu p^n + nu held exactly.
    unsigned long window_first = 0;
    unsigned long window_last = 0;
    /// e_1 .. e_{n_max}.
    std::vector<unsigned long> exponents;
};

/// e_n = v_p(Res(t^{p^n} - 1, f)) for n = 1..n_max, with (lambda, mu, nu)
/// solved from the last three levels and the window extended backwards
/// while the law stays exact. Throws DomainError when n_max < 3 or the fit is
/// not integral, DegenerateInput when a resultant vanishes.
IwasawaInvariants iwasawa_fit(const IntPoly& f, Prime p, unsigned long n_max);

struct LambdaMu {
    unsigned long lambda;
    unsigned long mu;
};

/// mu = v_p(content f); lambda = number of roots of (f / p^mu)(1 + s) with
/// positive valuation, read off the Newton polygon. Requires f(1) != 0.
LambdaMu lambda_mu_structural(const IntPoly& f, Prime p);

/// Closed-form limit of r_{n,...,n}(f) for f = a t1^n + g(t2, ..., td).
/// `g` lives in the variables t2..td (num_vars = d - 1), or is an integer
/// constant when d = 1 (pass a one-variable constant polynomial).
///
///   p | f(1,...,1)            -> 0
///   d >= 2                    -> omega_p(f(1,...,1)) (odd p), 1 (p = 2)
///   d = 1                     -> (omega(g) + omega(a))^{p^{v_p(n)}} (odd p),
///                                (omega(g) - omega(a))^{2^{v_2(n)}} (p = 2)
PadicApprox separated_limit_closed_form(const Integer& a, unsigned long n, const MultiPoly& g, bool univariate,
                                        Prime p, unsigned long K);

/// f = a t1^n + g as a polynomial in d variables.
MultiPoly separated_polynomial(const Integer& a, unsigned long n, const MultiPoly& g, bool univariate);

/// Compares the closed form with limit_estimate on the raw sequence at K digits.
struct SeparatedCheck {
    PadicApprox closed_form;
    LimitEstimate estimate;
    bool agree;
};
SeparatedCheck verify_separated_limit(const Integer& a, unsigned long n, const MultiPoly& g, bool univariate, Prime p,
                                      unsigned long K, const LimitOptions& options = default_limit_options());

struct OrderInvarianceReport {
    bool ok = true;
    std::string detail;
};

/// (i) the value is unchanged when variables and levels are permuted
/// together; (ii) raising the levels by one, one variable at a time in every
/// order, keeps every value congruent to the starting one mod p^{min level}.
OrderInvarianceReport order_invariance_check(const MultiPoly& f, Prime p, const std::vector<unsigned long>& levels,
                                             CyclicMask::Kind mask);

CyclicMask mask_of(CyclicMask::Kind kind);

} // namespace padicres::limits
