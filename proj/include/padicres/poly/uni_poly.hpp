#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicres/error.hpp"
#include "padicres/poly/integer.hpp"
#include "padicres/poly/multi_poly.hpp"

namespace padicres::poly {

/// Arithmetic an exact-resultant coefficient domain has to provide. `like`
/// arguments carry ring context (number of variables for MultiPoly).
template <class C>
struct RingTraits;

template <>
struct RingTraits<Integer> {
    static Integer zero_like(const Integer&) { return 0; }
    static Integer one_like(const Integer&) { return 1; }
    static bool is_zero(const Integer& a) { return a == 0; }
    static Integer exact_div(const Integer& a, const Integer& b)
    {
        Integer q;
        if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            throw DomainError("inexact integer division");
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
};

template <>
struct RingTraits<MultiPoly> {
    static MultiPoly zero_like(const MultiPoly& a) { return MultiPoly(a.num_vars()); }
    static MultiPoly one_like(const MultiPoly& a) { return MultiPoly::constant(a.num_vars(), 1); }
    static bool is_zero(const MultiPoly& a) { return a.is_zero(); }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b)
    {
        if (b.is_constant())
            return a.divide_exact(b.constant_term());
        auto q = divide_exact(a, b);
        if (!q)
            throw DomainError("inexact polynomial division");
        return *std::move(q);
    }
};

/// Dense univariate polynomial over a coefficient domain C. coeffs()[i] is the
/// coefficient of t^i; the leading coefficient is nonzero unless the
/// polynomial is zero.
template <class C>
class UniPoly {
public:
    using Traits = RingTraits<C>;

    /// Zero polynomial whose coefficients live in the same ring as `like`.
    explicit UniPoly(C like = C()) : zero_(Traits::zero_like(like)) {}

    UniPoly(std::vector<C> coeffs, C like) : coeffs_(std::move(coeffs)), zero_(Traits::zero_like(like)) { trim(); }

    static UniPoly monomial(C c, std::size_t degree)
    {
        UniPoly r(c);
        if (!Traits::is_zero(c)) {
            r.coeffs_.assign(degree + 1, r.zero_);
            r.coeffs_[degree] = std::move(c);
        }
        return r;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<C>& coeffs() const noexcept { return coeffs_; }
    const C& coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : zero_; }
    const C& leading() const
    {
        if (coeffs_.empty())
            throw DomainError("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }
    const C& zero_coeff() const noexcept { return zero_; }

    UniPoly operator-() const
    {
        UniPoly r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), zero_);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), zero_);
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        UniPoly r(a.zero_);
        if (a.is_zero() || b.is_zero())
            return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (Traits::is_zero(a.coeffs_[i]))
                continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }

    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scaled(const C& c) const
    {
        UniPoly r = *this;
        for (auto& x : r.coeffs_)
            x = x * c;
        r.trim();
        return r;
    }

    /// Every coefficient divided exactly by c.
    UniPoly divided_exact(const C& c) const
    {
        UniPoly r = *this;
        for (auto& x : r.coeffs_)
            x = Traits::exact_div(x, c);
        return r;
    }

    UniPoly pow(unsigned long e) const
    {
        UniPoly result(std::vector<C>{Traits::one_like(zero_)}, zero_);
        UniPoly base = *this;
        while (e > 0) {
            if (e & 1ul)
                result *= base;
            e >>= 1;
            if (e > 0)
                base = base * base;
        }
        return result;
    }

    /// Horner evaluation at an element of C.
    C evaluate(const C& x) const
    {
        C acc = zero_;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim()
    {
        while (!coeffs_.empty() && Traits::is_zero(coeffs_.back()))
            coeffs_.pop_back();
    }

    std::vector<C> coeffs_;
    C zero_;
};

using IntPoly = UniPoly<Integer>;

IntPoly int_poly(std::vector<Integer> coeffs);
std::string to_string(const IntPoly& f, char var = 't');

/// Remainder of f modulo a monic divisor.
template <class C>
UniPoly<C> remainder_monic(const UniPoly<C>& f, const UniPoly<C>& monic)
{
    if (monic.is_zero())
        throw DomainError("division by the zero polynomial");
    std::vector<C> r = f.coeffs();
    const long dm = monic.degree();
    for (long i = static_cast<long>(r.size()) - 1; i >= dm; --i) {
        if (RingTraits<C>::is_zero(r[i]))
            continue;
        const C q = r[i];
        for (long k = 0; k <= dm; ++k)
            r[i - dm + k] -= q * monic.coeffs()[k];
    }
    if (static_cast<long>(r.size()) > dm)
        r.resize(static_cast<std::size_t>(dm), f.zero_coeff());
    return UniPoly<C>(std::move(r), f.zero_coeff());
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
template <class C>
UniPoly<C> pseudo_remainder(const UniPoly<C>& a, const UniPoly<C>& b)
{
    if (b.is_zero())
        throw DomainError("pseudo-division by the zero polynomial");
    const long db = b.degree();
    if (a.degree() < db)
        return a;
    std::vector<C> r = a.coeffs();
    const C& lb = b.leading();
    for (long i = a.degree(); i >= db; --i) {
        const C q = r[i];
        for (long k = 0; k < i; ++k)
            r[k] = r[k] * lb;
        for (long k = 0; k < db; ++k)
            r[i - db + k] -= q * b.coeffs()[k];
        r[i] = a.zero_coeff();
    }
    r.resize(static_cast<std::size_t>(db), a.zero_coeff());
    return UniPoly<C>(std::move(r), a.zero_coeff());
}

/// Exact quotient a / b over the coefficient domain; nullopt if b does not divide a.
template <class C>
std::optional<UniPoly<C>> divide_exact(const UniPoly<C>& a, const UniPoly<C>& b)
{
    if (b.is_zero())
        throw DomainError("division by the zero polynomial");
    if (a.is_zero())
        return UniPoly<C>(a.zero_coeff());
    if (a.degree() < b.degree())
        return std::nullopt;
    std::vector<C> r = a.coeffs();
    const long db = b.degree();
    std::vector<C> q(static_cast<std::size_t>(a.degree() - db + 1), a.zero_coeff());
    for (long i = a.degree(); i >= db; --i) {
        if (RingTraits<C>::is_zero(r[i]))
            continue;
        C qi;
        try {
            qi = RingTraits<C>::exact_div(r[i], b.leading());
        } catch (const DomainError&) {
            return std::nullopt;
        }
        for (long k = 0; k <= db; ++k)
            r[i - db + k] -= qi * b.coeffs()[k];
        q[i - db] = std::move(qi);
    }
    for (long k = 0; k < db; ++k)
        if (!RingTraits<C>::is_zero(r[k]))
            return std::nullopt;
    return UniPoly<C>(std::move(q), a.zero_coeff());
}

template <>
struct RingTraits<IntPoly> {
    static IntPoly zero_like(const IntPoly&) { return IntPoly(); }
    static IntPoly one_like(const IntPoly&) { return int_poly({1}); }
    static bool is_zero(const IntPoly& a) { return a.is_zero(); }
    static IntPoly exact_div(const IntPoly& a, const IntPoly& b)
    {
        if (b.degree() == 0)
            return a.divided_exact(b.leading());
        auto q = divide_exact(a, b);
        if (!q)
            throw DomainError("inexact polynomial division");
        return *std::move(q);
    }
};

/// g(s) = f(1 + s).
IntPoly shift_one(const IntPoly& f);

/// Primitive content (gcd of coefficients, non-negative).
Integer content(const IntPoly& f);

/// Conversions between the sparse multivariate form and dense recursive forms.
/// to_int_poly requires a polynomial in one variable.
IntPoly to_int_poly(const MultiPoly& f);
MultiPoly from_int_poly(const IntPoly& f);

/// f viewed as a polynomial in its last variable with coefficients in the
/// remaining num_vars - 1 variables. Requires num_vars >= 2.
UniPoly<MultiPoly> split_last_variable(const MultiPoly& f);

/// f in two variables viewed as a polynomial in t2 over Z[t1].
UniPoly<IntPoly> split_bivariate(const MultiPoly& f);

} // namespace padicres::poly
