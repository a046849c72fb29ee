#pragma once

#include <utility>

#include "padicres/error.hpp"
#include "padicres/poly/uni_poly.hpp"

namespace padicres::resultant {

namespace detail {

template <class C>
C ring_pow(const C& base, unsigned long e, const C& like)
{
    C r = poly::RingTraits<C>::one_like(like);
    C b = base;
    while (e > 0) {
        if (e & 1ul)
            r = r * b;
        e >>= 1;
        if (e > 0)
            b = b * b;
    }
    return r;
}

} // namespace detail

/// Res(a, b) by the subresultant pseudo-remainder sequence (no content
/// removal, so it works over any coefficient domain with exact division).
/// Agrees with the Sylvester determinant, including sign. Requires nonzero
/// inputs.
template <class C>
C subresultant_prs(poly::UniPoly<C> a, poly::UniPoly<C> b)
{
    using Traits = poly::RingTraits<C>;
    if (a.is_zero() || b.is_zero())
        throw DomainError("resultant with a zero polynomial");
    const C like = a.zero_coeff();
    bool negate = false;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1))
            negate = true;
        std::swap(a, b);
    }
    auto finish = [&](C v) { return negate ? C(-v) : v; };
    if (b.degree() == 0)
        return finish(detail::ring_pow(b.leading(), static_cast<unsigned long>(a.degree()), like));

    C g = Traits::one_like(like);
    C h = Traits::one_like(like);
    for (;;) {
        const long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1))
            negate = !negate;
        poly::UniPoly<C> r = poly::pseudo_remainder(a, b);
        if (r.is_zero())
            return Traits::zero_like(like);
        a = std::move(b);
        b = r.divided_exact(g * detail::ring_pow(h, static_cast<unsigned long>(delta), like));
        g = a.leading();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = Traits::exact_div(detail::ring_pow(g, static_cast<unsigned long>(delta), like),
                                  detail::ring_pow(h, static_cast<unsigned long>(delta - 1), like));
        if (b.degree() == 0)
            break;
    }
    const auto da = static_cast<unsigned long>(a.degree());
    C num = detail::ring_pow(b.leading(), da, like);
    if (da > 1)
        num = Traits::exact_div(num, detail::ring_pow(h, da - 1, like));
    return finish(num);
}

} // namespace padicres::resultant
