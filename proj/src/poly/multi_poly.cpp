#include "padicres/poly/multi_poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "padicres/error.hpp"

namespace padicres::poly {

std::uint64_t total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const
{
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db)
        return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::size_t num_vars) : num_vars_(num_vars)
{
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Integer& c)
{
    MultiPoly r(num_vars);
    r.add_term(Exponents(num_vars, 0), c);
    return r;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index)
{
    if (index >= num_vars)
        throw DomainError("variable index out of range");
    Exponents e(num_vars, 0);
    e[index] = 1;
    MultiPoly r(num_vars);
    r.add_term(e, 1);
    return r;
}

MultiPoly MultiPoly::monomial(Exponents exps, const Integer& c)
{
    MultiPoly r(exps.size());
    r.add_term(exps, c);
    return r;
}

bool MultiPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && poly::total_degree(terms_.begin()->first) == 0);
}

Integer MultiPoly::coefficient(const Exponents& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer MultiPoly::constant_term() const
{
    return coefficient(Exponents(num_vars_, 0));
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const
{
    if (terms_.empty())
        throw DomainError("leading term of the zero polynomial");
    return *terms_.begin();
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const
{
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max(d, e[var]);
    return d;
}

std::uint64_t MultiPoly::total_degree() const
{
    return terms_.empty() ? 0 : poly::total_degree(terms_.begin()->first);
}

Integer MultiPoly::content() const
{
    Integer g = 0;
    for (const auto& [e, c] : terms_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void MultiPoly::add_term(const Exponents& e, const Integer& c)
{
    if (e.size() != num_vars_)
        throw DomainError("exponent vector length does not match the number of variables");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MultiPoly::check_same_ring(const MultiPoly& o) const
{
    if (o.num_vars_ != num_vars_)
        throw DomainError("polynomials live in rings with different numbers of variables");
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_same_ring(b);
    MultiPoly r(a.num_vars_);
    Exponents e(a.num_vars_);
    Integer prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                const std::uint64_t s = std::uint64_t{ea[i]} + eb[i];
                if (s > std::numeric_limits<std::uint32_t>::max())
                    throw DomainError("exponent overflow in polynomial product");
                e[i] = static_cast<std::uint32_t>(s);
            }
            mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            r.add_term(e, prod);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o)
{
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Integer& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coef] : terms_)
        coef *= c;
    return *this;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const
{
    MultiPoly result = constant(num_vars_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::divide_exact(const Integer& c) const
{
    if (c == 0)
        throw DomainError("division by zero");
    MultiPoly r = *this;
    for (auto& [e, coef] : r.terms_) {
        if (!mpz_divisible_p(coef.get_mpz_t(), c.get_mpz_t()))
            throw DomainError("inexact coefficient division");
        mpz_divexact(coef.get_mpz_t(), coef.get_mpz_t(), c.get_mpz_t());
    }
    return r;
}

MultiPoly MultiPoly::permute_variables(std::span<const std::size_t> perm) const
{
    if (perm.size() != num_vars_)
        throw DomainError("permutation length does not match the number of variables");
    MultiPoly r(num_vars_);
    Exponents out(num_vars_);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < num_vars_; ++i)
            out[i] = e[perm[i]];
        r.add_term(out, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute(std::size_t var, const Integer& value) const
{
    MultiPoly r(num_vars_);
    for (const auto& [e, c] : terms_) {
        Exponents out = e;
        out[var] = 0;
        r.add_term(out, c * power(value, e[var]));
    }
    return r;
}

namespace {

std::string monomial_text(const Exponents& e)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 't' + std::to_string(i + 1);
        if (e[i] > 1)
            s += '^' + std::to_string(e[i]);
    }
    return s;
}

} // namespace

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const Integer mag = abs(c);
        const std::string mono = monomial_text(e);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero())
        throw DomainError("division by the zero polynomial");
    if (a.num_vars() != b.num_vars())
        throw DomainError("polynomials live in rings with different numbers of variables");
    const auto& [lb_exp, lb_coef] = b.leading_term();
    MultiPoly quotient(a.num_vars());
    MultiPoly rem = a;
    Exponents qe(a.num_vars());
    while (!rem.is_zero()) {
        const auto& [le, lc] = rem.leading_term();
        for (std::size_t i = 0; i < qe.size(); ++i) {
            if (le[i] < lb_exp[i])
                return std::nullopt;
            qe[i] = le[i] - lb_exp[i];
        }
        if (!mpz_divisible_p(lc.get_mpz_t(), lb_coef.get_mpz_t()))
            return std::nullopt;
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), lc.get_mpz_t(), lb_coef.get_mpz_t());
        MultiPoly step = MultiPoly::monomial(qe, qc);
        quotient += step;
        rem -= step * b;
    }
    return quotient;
}

Integer eval_int(const MultiPoly& f, std::span<const Integer> point)
{
    if (point.size() != f.num_vars())
        throw DomainError("evaluation point has " + std::to_string(point.size()) + " coordinates, polynomial has "
                          + std::to_string(f.num_vars()) + " variables");
    Integer total = 0;
    Integer term;
    for (const auto& [e, c] : f.terms()) {
        term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0)
                term *= power(point[i], e[i]);
        total += term;
    }
    return total;
}

Integer eval_at_ones(const MultiPoly& f)
{
    Integer total = 0;
    for (const auto& [e, c] : f.terms())
        total += c;
    return total;
}

} // namespace padicres::poly
