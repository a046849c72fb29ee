#include "padicres/padic/cyclo.hpp"

#include <algorithm>

#include "padicres/error.hpp"
#include "padicres/poly/cyclotomic.hpp"
#include "padicres/resultant/cyclic.hpp"

namespace padicres::padic {

namespace {

// x^i for i >= phi rewritten with x^phi = -(1 + x^s + ... + x^{(p-2)s}), s = p^{m-1}.
void reduce_cyclotomic(std::vector<Integer>& c, Prime p, unsigned long level, const Integer& modulus)
{
    const unsigned long phi = poly::phi_prime_power(p, level);
    if (level == 0) {
        Integer sum = 0;
        for (const auto& x : c)
            sum += x;
        c.assign(1, mod_floor(sum, modulus));
        return;
    }
    const unsigned long s = phi / (p.value() - 1);
    for (std::size_t i = c.size(); i-- > phi;) {
        if (c[i] == 0)
            continue;
        const Integer top = c[i];
        for (unsigned long k = 0; k + 1 < p.value(); ++k)
            c[i - phi + k * s] -= top;
        c[i] = 0;
    }
    c.resize(phi, Integer(0));
    for (auto& x : c)
        x = mod_floor(x, modulus);
}

} // namespace

CycloPadic CycloPadic::make(Prime p, unsigned long level, unsigned long precision, std::vector<Integer> coeffs)
{
    if (precision == 0)
        throw DomainError("p-adic precision must be at least 1");
    CycloPadic r(p, level, precision);
    reduce_cyclotomic(coeffs, p, level, prime_power(p, precision));
    r.coeffs_ = std::move(coeffs);
    return r;
}

CycloPadic CycloPadic::from_integer(Prime p, unsigned long level, unsigned long precision, const Integer& x)
{
    return make(p, level, precision, {x});
}

CycloPadic CycloPadic::zeta_power(Prime p, unsigned long level, unsigned long precision, long e)
{
    const Integer order = prime_power(p, level);
    const unsigned long idx = mod_floor(Integer(e), order).get_ui();
    std::vector<Integer> c(idx + 1, Integer(0));
    c[idx] = 1;
    return make(p, level, precision, std::move(c));
}

bool CycloPadic::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& x) { return x == 0; });
}

void CycloPadic::check_compatible(const CycloPadic& o) const
{
    if (!(o.p_ == p_) || o.level_ != level_)
        throw DomainError("cyclotomic elements from different rings");
}

CycloPadic CycloPadic::operator-() const
{
    std::vector<Integer> c = coeffs_;
    for (auto& x : c)
        x = -x;
    return make(p_, level_, precision_, std::move(c));
}

CycloPadic operator+(const CycloPadic& a, const CycloPadic& b)
{
    a.check_compatible(b);
    std::vector<Integer> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += b.coeffs_[i];
    return CycloPadic::make(a.p_, a.level_, std::min(a.precision_, b.precision_), std::move(c));
}

CycloPadic operator-(const CycloPadic& a, const CycloPadic& b)
{
    return a + (-b);
}

CycloPadic operator*(const CycloPadic& a, const CycloPadic& b)
{
    a.check_compatible(b);
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
    return CycloPadic::make(a.p_, a.level_, std::min(a.precision_, b.precision_), std::move(c));
}

bool operator==(const CycloPadic& a, const CycloPadic& b)
{
    return a.p_ == b.p_ && a.level_ == b.level_ && a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
}

CycloPadic CycloPadic::pow(const Integer& e) const
{
    if (e < 0)
        return invert_unit().pow(-e);
    CycloPadic result = from_integer(p_, level_, precision_, 1);
    CycloPadic base = *this;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = result * base;
        if (i + 1 < bits)
            base = base * base;
    }
    return result;
}

bool CycloPadic::is_unit() const
{
    Integer sum = 0;
    for (const auto& x : coeffs_)
        sum += x;
    return !mpz_divisible_ui_p(sum.get_mpz_t(), p_.value());
}

CycloPadic CycloPadic::invert_unit() const
{
    if (!is_unit())
        throw DomainError("inverting a non-unit of Z_p[zeta]");
    Integer sum = 0;
    for (const auto& x : coeffs_)
        sum += x;
    // zeta = 1 in the residue field, so 1/x(1) is correct mod pi; each Newton
    // step doubles the pi-adic precision.
    CycloPadic y = from_integer(p_, level_, precision_, inverse_mod(sum, p_.as_integer()));
    const CycloPadic one = from_integer(p_, level_, precision_, 1);
    const CycloPadic two = from_integer(p_, level_, precision_, 2);
    const unsigned long target = poly::phi_prime_power(p_, level_) * precision_;
    for (unsigned long reached = 1; reached < 2 * target + 2; reached *= 2) {
        if (*this * y == one)
            return y;
        y = y * (two - *this * y);
    }
    if (!(*this * y == one))
        throw PrecisionError("Newton inversion did not converge");
    return y;
}

CycloPadic CycloPadic::truncated(unsigned long precision) const
{
    return make(p_, level_, std::min(precision, precision_), coeffs_);
}

CycloPadic CycloPadic::divided_by_p_power(unsigned long e) const
{
    if (e >= precision_)
        throw PrecisionError("dividing by p^" + std::to_string(e) + " leaves no precision");
    const Integer q = prime_power(p_, e);
    std::vector<Integer> c = coeffs_;
    for (auto& x : c) {
        if (!mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t()))
            throw DomainError("element is not divisible by p^" + std::to_string(e));
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    }
    return make(p_, level_, precision_ - e, std::move(c));
}

Integer CycloPadic::norm_of_representative() const
{
    const poly::IntPoly rep = poly::int_poly(coeffs_);
    if (rep.is_zero())
        return 0;
    return resultant::resultant_prs(poly::cyclotomic(p_, level_), rep);
}

unsigned long CycloPadic::pi_valuation() const
{
    const Integer n = norm_of_representative();
    const unsigned long limit = poly::phi_prime_power(p_, level_) * precision_;
    if (n == 0 || vp(n, p_) >= limit)
        throw PrecisionError("element is indistinguishable from 0 at precision " + std::to_string(p_.value()) + "^"
                             + std::to_string(precision_));
    return vp(n, p_);
}

namespace {

// v_pi, or the largest visible value when the element is 0 at this precision.
unsigned long visible_pi_valuation(const CycloPadic& y)
{
    const unsigned long limit = poly::phi_prime_power(y.prime(), y.level()) * y.precision();
    if (y.is_zero())
        return limit;
    try {
        return y.pi_valuation();
    } catch (const PrecisionError&) {
        return limit;
    }
}

unsigned long floor_log(unsigned long k, Prime p)
{
    unsigned long e = 0;
    for (unsigned long q = p.value(); q <= k; q *= p.value())
        ++e;
    return e;
}

} // namespace

ScaledLog cyclo_log(const CycloPadic& x)
{
    const Prime p = x.prime();
    const unsigned long K = x.precision();
    const unsigned long phi = poly::phi_prime_power(p, x.level());
    const CycloPadic one = CycloPadic::from_integer(p, x.level(), K, 1);
    if (!(x - one).is_zero() && visible_pi_valuation(x - one) == 0)
        throw DomainError("cyclotomic log needs a principal unit");

    // Raise to p-th powers until v_p(y) > 1/(p-1), i.e. (p-1) v_pi(y) > phi.
    CycloPadic power = x;
    long n = 0;
    CycloPadic y = power - one;
    unsigned long b = visible_pi_valuation(y);
    while (b * (p.value() - 1) <= phi) {
        power = power.pow(p.as_integer());
        ++n;
        y = power - one;
        b = visible_pi_valuation(y);
    }

    // Terms with k*b - phi*floor(log_p k) >= phi*K vanish mod p^K.
    unsigned long last = 0;
    unsigned long lost = 0;
    for (unsigned long k = 1; k * b < phi * (K + floor_log(k, p)); ++k) {
        last = k;
        lost = std::max(lost, floor_log(k, p));
    }
    if (lost >= K)
        throw PrecisionError("cyclotomic log series needs more than " + std::to_string(K) + " digits");
    const unsigned long out_precision = K - lost;
    const Integer modulus = prime_power(p, K);
    CycloPadic sum = CycloPadic::from_integer(p, x.level(), out_precision, 0);
    CycloPadic yk = one;
    for (unsigned long k = 1; k <= last; ++k) {
        yk = yk * y;
        Integer kk = k;
        const unsigned long v = remove_factor(kk, p);
        CycloPadic term = yk.divided_by_p_power(v).truncated(out_precision)
                          * CycloPadic::from_integer(p, x.level(), out_precision, inverse_mod(kk, modulus));
        sum = k % 2 ? sum + term : sum - term;
    }
    return {sum, -n};
}

CycloPadic whitehead_argument(const Integer& m, unsigned long level, unsigned long precision)
{
    const Prime two(2);
    const CycloPadic z = CycloPadic::zeta_power(two, level, precision, 1);
    const CycloPadic mz = CycloPadic::from_integer(two, level, precision, m) * z;
    const CycloPadic num = mz + CycloPadic::from_integer(two, level, precision, m + 1);
    const CycloPadic den = mz + CycloPadic::from_integer(two, level, precision, m) + z;
    return num * den.invert_unit();
}

Rational nu_zeta(const Integer& m, unsigned long level, unsigned long precision)
{
    if (level < 2)
        throw DomainError("nu_zeta is defined for primitive 2^j-th roots of unity with j >= 2");
    if (m == 0)
        throw DegenerateInput("m = 0: the argument is a root of unity and its log vanishes");
    const unsigned long phi = poly::phi_prime_power(Prime(2), level);
    for (unsigned long k = std::max(precision, 8ul); k <= 4096; k *= 2) {
        const ScaledLog l = cyclo_log(whitehead_argument(m, level, k));
        try {
            const unsigned long v = l.value.pi_valuation();
            Rational r{Integer(v), Integer(phi)};
            r.canonicalize();
            return r + Rational(l.exponent);
        } catch (const PrecisionError&) {
        }
    }
    throw PrecisionError("log valuation not visible at 2^4096");
}

CycloPadic evaluate_at_roots(const poly::MultiPoly& f, Prime p,
                             const std::vector<std::pair<unsigned long, unsigned long>>& roots, unsigned long precision)
{
    if (roots.size() != f.num_vars())
        throw DomainError("root tuple length does not match the number of variables");
    unsigned long top = 0;
    for (const auto& [j, k] : roots)
        top = std::max(top, j);
    const Integer order = prime_power(p, top);
    std::vector<Integer> step(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i)
        step[i] = Integer(roots[i].second) * prime_power(p, top - roots[i].first);
    std::vector<Integer> c(order.get_ui(), Integer(0));
    for (const auto& [e, coef] : f.terms()) {
        Integer idx = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            idx += step[i] * e[i];
        c[mod_floor(idx, order).get_ui()] += coef;
    }
    return CycloPadic::make(p, top, precision, std::move(c));
}

} // namespace padicres::padic
