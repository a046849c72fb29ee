#include "padicres/poly/uni_poly.hpp"

namespace padicres::poly {

IntPoly int_poly(std::vector<Integer> coeffs)
{
    return IntPoly(std::move(coeffs), Integer(0));
}

std::string to_string(const IntPoly& f, char var)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (long i = f.degree(); i >= 0; --i) {
        const Integer& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        const Integer mag = abs(c);
        std::string mono;
        if (i >= 1)
            mono = std::string(1, var) + (i > 1 ? "^" + std::to_string(i) : "");
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

IntPoly shift_one(const IntPoly& f)
{
    // Horner in the shifted variable: g = (((a_n)(1+s) + a_{n-1})(1+s) + ...).
    const IntPoly one_plus_s = int_poly({1, 1});
    IntPoly g;
    for (long i = f.degree(); i >= 0; --i)
        g = g * one_plus_s + int_poly({f.coeffs()[static_cast<std::size_t>(i)]});
    return g;
}

Integer content(const IntPoly& f)
{
    Integer g = 0;
    for (const auto& c : f.coeffs())
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly to_int_poly(const MultiPoly& f)
{
    if (f.num_vars() != 1)
        throw DomainError("expected a polynomial in one variable, got " + std::to_string(f.num_vars()));
    std::vector<Integer> c(f.is_zero() ? 0 : f.degree_in(0) + 1, Integer(0));
    for (const auto& [e, coef] : f.terms())
        c[e[0]] = coef;
    return int_poly(std::move(c));
}

MultiPoly from_int_poly(const IntPoly& f)
{
    MultiPoly r(1);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        r.add_term({static_cast<std::uint32_t>(i)}, f.coeffs()[i]);
    return r;
}

UniPoly<MultiPoly> split_last_variable(const MultiPoly& f)
{
    const std::size_t d = f.num_vars();
    if (d < 2)
        throw DomainError("splitting off a variable needs at least two variables");
    const MultiPoly zero(d - 1);
    std::vector<MultiPoly> c(f.is_zero() ? 0 : f.degree_in(d - 1) + 1, zero);
    for (const auto& [e, coef] : f.terms()) {
        Exponents rest(e.begin(), e.end() - 1);
        c[e.back()].add_term(rest, coef);
    }
    return UniPoly<MultiPoly>(std::move(c), zero);
}

UniPoly<IntPoly> split_bivariate(const MultiPoly& f)
{
    if (f.num_vars() != 2)
        throw DomainError("expected a polynomial in two variables");
    const std::size_t outer = f.is_zero() ? 0 : f.degree_in(1) + 1;
    std::vector<std::vector<Integer>> dense(outer);
    for (const auto& [e, coef] : f.terms()) {
        auto& row = dense[e[1]];
        if (row.size() <= e[0])
            row.resize(e[0] + 1, Integer(0));
        row[e[0]] = coef;
    }
    std::vector<IntPoly> c;
    c.reserve(outer);
    for (auto& row : dense)
        c.push_back(int_poly(std::move(row)));
    return UniPoly<IntPoly>(std::move(c), IntPoly());
}

} // namespace padicres::poly
