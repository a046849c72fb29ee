#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padicres/poly/integer.hpp"

namespace padicres::poly {

using Exponents = std::vector<std::uint32_t>;

std::uint64_t total_degree(const Exponents& e);

/// Graded-lex order, greatest first: higher total degree wins, ties broken
/// lexicographically with t1 most significant.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial in t1..td with big-integer coefficients.
///
/// Terms are kept in descending graded-lex order and never store a zero
/// coefficient, so two equal polynomials have identical term maps and
/// identical serializations.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Integer, GradedLexGreater>;

    explicit MultiPoly(std::size_t num_vars = 1);

    static MultiPoly constant(std::size_t num_vars, const Integer& c);
    /// t_{index+1}; index is 0-based.
    static MultiPoly variable(std::size_t num_vars, std::size_t index);
    static MultiPoly monomial(Exponents exps, const Integer& c);

    std::size_t num_vars() const noexcept { return num_vars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    Integer coefficient(const Exponents& e) const;
    Integer constant_term() const;
    /// Leading term under graded-lex. Requires a nonzero polynomial.
    const TermMap::value_type& leading_term() const;

    std::uint32_t degree_in(std::size_t var) const;
    std::uint64_t total_degree() const;
    /// gcd of all coefficients, non-negative; 0 for the zero polynomial.
    Integer content() const;

    /// Adds c * t^e, dropping the term if it cancels.
    void add_term(const Exponents& e, const Integer& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Integer& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Integer& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(std::uint32_t e) const;

    /// Coefficients divided exactly by c. Throws DomainError if c does not divide.
    MultiPoly divide_exact(const Integer& c) const;

    /// Variable i of the result is variable perm[i] of this polynomial.
    MultiPoly permute_variables(std::span<const std::size_t> perm) const;

    /// Substitutes the integer `value` for variable `var`; the result keeps
    /// the same number of variables.
    MultiPoly substitute(std::size_t var, const Integer& value) const;

    /// Canonical text: graded-lex descending, "c*t1^a*t2^b" joined by " + " / " - ".
    std::string to_string() const;

private:
    void check_same_ring(const MultiPoly& o) const;

    std::size_t num_vars_;
    TermMap terms_;
};

/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b);

/// Exact value of f at an integer point.
Integer eval_int(const MultiPoly& f, std::span<const Integer> point);

/// f(1, ..., 1).
Integer eval_at_ones(const MultiPoly& f);

} // namespace padicres::poly
