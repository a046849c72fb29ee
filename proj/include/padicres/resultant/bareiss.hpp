#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "padicres/error.hpp"
#include "padicres/poly/uni_poly.hpp"

namespace padicres::resultant {

template <class C>
using Matrix = std::vector<std::vector<C>>;

/// Determinant by fraction-free (Bareiss) elimination over an integral domain.
/// Every division is exact; `like` supplies the ring context for the empty
/// matrix and zero tests.
template <class C>
C bareiss_determinant(Matrix<C> a, const C& like)
{
    using Traits = poly::RingTraits<C>;
    const std::size_t n = a.size();
    if (n == 0)
        return Traits::one_like(like);
    for (const auto& row : a)
        if (row.size() != n)
            throw DomainError("determinant of a non-square matrix");
    bool negate = false;
    C prev = Traits::one_like(like);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (Traits::is_zero(a[k][k])) {
            std::size_t r = k + 1;
            while (r < n && Traits::is_zero(a[r][k]))
                ++r;
            if (r == n)
                return Traits::zero_like(like);
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = Traits::exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            a[i][k] = Traits::zero_like(like);
        }
        prev = a[k][k];
    }
    C det = a[n - 1][n - 1];
    return negate ? C(-det) : det;
}

/// Sylvester matrix of f (degree m) and g (degree n): n shifted rows of f's
/// coefficients above m shifted rows of g's, leading coefficients first.
template <class C>
Matrix<C> sylvester_matrix(const poly::UniPoly<C>& f, const poly::UniPoly<C>& g)
{
    if (f.is_zero() || g.is_zero())
        throw DomainError("Sylvester matrix of a zero polynomial");
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    const std::size_t size = m + n;
    Matrix<C> s(size, std::vector<C>(size, f.zero_coeff()));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k)
            s[r][r + k] = f.coeffs()[m - k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k)
            s[n + r][r + k] = g.coeffs()[n - k];
    return s;
}

/// Res(f, g) = det Syl(f, g).
template <class C>
C sylvester_resultant(const poly::UniPoly<C>& f, const poly::UniPoly<C>& g)
{
    return bareiss_determinant(sylvester_matrix(f, g), f.zero_coeff());
}

} // namespace padicres::resultant
