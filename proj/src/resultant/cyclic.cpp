#include "padicres/resultant/cyclic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

#include "padicres/error.hpp"
#include "padicres/poly/cyclotomic.hpp"
#include "padicres/resultant/bareiss.hpp"
#include "padicres/resultant/mpfr_complex.hpp"
#include "padicres/resultant/prs.hpp"

namespace padicres::resultant {

using poly::IntPoly;
using poly::MultiPoly;
using poly::UniPoly;

Integer resultant_prs(const IntPoly& f, const IntPoly& g)
{
    return subresultant_prs(f, g);
}

std::vector<std::vector<unsigned long>> CyclicMask::indices(const std::vector<unsigned long>& levels) const
{
    std::vector<std::vector<unsigned long>> out(levels.size());
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (kind_ == Kind::custom) {
            if (custom_.size() != levels.size())
                throw DomainError("mask has " + std::to_string(custom_.size()) + " index sets for "
                                  + std::to_string(levels.size()) + " variables");
            out[i] = custom_[i];
            std::sort(out[i].begin(), out[i].end());
            out[i].erase(std::unique(out[i].begin(), out[i].end()), out[i].end());
            if (!out[i].empty() && out[i].back() > levels[i])
                throw DomainError("mask index " + std::to_string(out[i].back()) + " exceeds level "
                                  + std::to_string(levels[i]) + " of t" + std::to_string(i + 1));
            continue;
        }
        for (unsigned long j = kind_ == Kind::full ? 0 : 1; j <= levels[i]; ++j)
            out[i].push_back(j);
    }
    return out;
}

void validate(const CyclicResultantRequest& req)
{
    if (req.levels.size() != req.f.num_vars())
        throw DomainError("got " + std::to_string(req.levels.size()) + " levels for a polynomial in "
                          + std::to_string(req.f.num_vars()) + " variables");
    req.mask.indices(req.levels);
}

namespace {

// Lift an integer polynomial to one with constant coefficients in a larger ring.
template <class C>
UniPoly<C> lift(const IntPoly& f, const C& zero)
{
    std::vector<C> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) {
        C v = poly::RingTraits<C>::one_like(zero);
        if constexpr (std::is_same_v<C, MultiPoly>)
            v *= x;
        else
            v = v.scaled(x);
        c.push_back(std::move(v));
    }
    return UniPoly<C>(std::move(c), zero);
}

// Res(phi, f) for monic phi: reduce first, the product of f over the roots of
// phi only sees f mod phi.
template <class C>
C monic_resultant(const UniPoly<C>& phi, const UniPoly<C>& f)
{
    using Traits = poly::RingTraits<C>;
    if (f.is_zero())
        return Traits::zero_like(f.zero_coeff());
    const UniPoly<C> r = poly::remainder_monic(f, phi);
    if (r.is_zero())
        return Traits::zero_like(f.zero_coeff());
    return subresultant_prs(phi, r);
}

class FastPath {
public:
    FastPath(Prime p, std::vector<std::vector<unsigned long>> masks) : p_(p), masks_(std::move(masks)) {}

    // Product over the masked tuples of the first f.num_vars() variables.
    Integer product(const MultiPoly& f) const
    {
        const std::size_t k = f.num_vars();
        Integer acc = 1;
        for (unsigned long j : masks_[k - 1]) {
            acc *= factor(f, j);
            if (acc == 0)
                break;
        }
        return acc;
    }

    // Contribution of Phi_{p^j}(t_k) for the last variable t_k of f.
    Integer factor(const MultiPoly& f, unsigned long j) const
    {
        if (f.is_zero())
            return 0;
        const std::size_t k = f.num_vars();
        const IntPoly phi = poly::cyclotomic(p_, j);
        if (k == 1)
            return monic_resultant(phi, poly::to_int_poly(f));
        if (k == 2) {
            const IntPoly g = monic_resultant(lift(phi, IntPoly()), poly::split_bivariate(f));
            Integer acc = 1;
            for (unsigned long i : masks_[0]) {
                acc *= monic_resultant(poly::cyclotomic(p_, i), g);
                if (acc == 0)
                    break;
            }
            return acc;
        }
        const MultiPoly zero(k - 1);
        return product(monic_resultant(lift(phi, zero), poly::split_last_variable(f)));
    }

    const std::vector<unsigned long>& outer() const { return masks_.back(); }

private:
    Prime p_;
    std::vector<std::vector<unsigned long>> masks_;
};

} // namespace

Integer cyclic_resultant(const CyclicResultantRequest& req, const CyclicOptions& options)
{
    validate(req);
    if (req.f.is_zero())
        return 0;
    const FastPath path(req.p, req.mask.indices(req.levels));
    const auto& outer = path.outer();
    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(outer.size())));
    if (threads <= 1)
        return path.product(req.f);

    // Factors of the outermost elimination are independent; multiply them in
    // index order so the result does not depend on scheduling.
    std::vector<Integer> factors(outer.size());
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < threads; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < outer.size(); i += threads)
                factors[i] = path.factor(req.f, outer[i]);
        }));
    }
    for (auto& w : workers)
        w.get();
    Integer acc = 1;
    for (const auto& f : factors)
        acc *= f;
    return acc;
}

namespace {

IntPoly divisor(Prime p, unsigned long level, const std::vector<unsigned long>& mask, bool full)
{
    if (full)
        return poly::cyclic_modulus(p, level);
    IntPoly d = poly::int_poly({1});
    for (unsigned long j : mask)
        d *= poly::cyclotomic(p, j);
    return d;
}

Integer baseline_step(const MultiPoly& f, const std::vector<IntPoly>& divisors)
{
    if (f.is_zero())
        return 0;
    const std::size_t k = f.num_vars();
    if (k == 1)
        return sylvester_resultant(divisors[0], poly::to_int_poly(f));
    const MultiPoly zero(k - 1);
    const MultiPoly g = sylvester_resultant(lift(divisors[k - 1], zero), poly::split_last_variable(f));
    return baseline_step(g, divisors);
}

} // namespace

Integer cyclic_resultant_baseline(const CyclicResultantRequest& req, unsigned long budget)
{
    validate(req);
    Integer size = std::max<Integer>(1, Integer(static_cast<unsigned long>(req.f.total_degree())));
    for (unsigned long n : req.levels)
        size *= prime_power(req.p, n);
    if (size > budget)
        throw BudgetError("baseline size " + size.get_str() + " exceeds the budget " + std::to_string(budget));
    const auto masks = req.mask.indices(req.levels);
    std::vector<IntPoly> divisors;
    for (std::size_t i = 0; i < req.levels.size(); ++i)
        divisors.push_back(divisor(req.p, req.levels[i], masks[i], req.mask.kind() == CyclicMask::Kind::full));
    return baseline_step(req.f, divisors);
}

namespace {

Integer oracle_at(const CyclicResultantRequest& req, const std::vector<std::vector<unsigned long>>& masks,
                  mpfr_prec_t prec, double* error)
{
    const std::size_t d = req.levels.size();
    unsigned long top = 0;
    for (const auto& m : masks)
        if (!m.empty())
            top = std::max(top, m.back());
    const unsigned long big = prime_power(req.p, top).get_ui();

    // Every root is e^{2 pi i a / big}; collect the admissible a per variable.
    std::vector<std::vector<unsigned long>> angles(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (unsigned long j : masks[i]) {
            const unsigned long order = prime_power(req.p, j).get_ui();
            const unsigned long scale = big / order;
            for (unsigned long a = 0; a < order; ++a)
                if (j == 0 || a % req.p.value() != 0)
                    angles[i].push_back(a * scale);
        }
        if (angles[i].empty()) {
            *error = 0;
            return 1;
        }
    }
    std::vector<Complex> table;
    table.reserve(big);
    for (unsigned long a = 0; a < big; ++a)
        table.push_back(root_of_unity(a, big, prec));

    std::vector<std::pair<std::vector<unsigned long>, Integer>> terms;
    for (const auto& [e, c] : req.f.terms())
        terms.emplace_back(std::vector<unsigned long>(e.begin(), e.end()), c);

    Complex acc(prec);
    mpfr_set_ui(acc.re.get(), 1, MPFR_RNDN);
    Complex value(prec);
    Real tmp(prec);
    std::vector<std::size_t> at(d, 0);
    for (;;) {
        mpfr_set_zero(value.re.get(), 1);
        mpfr_set_zero(value.im.get(), 1);
        for (const auto& [e, c] : terms) {
            unsigned long idx = 0;
            for (std::size_t i = 0; i < d; ++i)
                idx = (idx + (e[i] % big) * angles[i][at[i]]) % big;
            mpfr_mul_z(tmp.get(), table[idx].re.get(), c.get_mpz_t(), MPFR_RNDN);
            mpfr_add(value.re.get(), value.re.get(), tmp.get(), MPFR_RNDN);
            mpfr_mul_z(tmp.get(), table[idx].im.get(), c.get_mpz_t(), MPFR_RNDN);
            mpfr_add(value.im.get(), value.im.get(), tmp.get(), MPFR_RNDN);
        }
        mul_assign(acc, value);
        std::size_t i = 0;
        while (i < d && ++at[i] == angles[i].size())
            at[i++] = 0;
        if (i == d)
            break;
    }
    double re_err = 0;
    const Integer z = round_to_integer(acc.re, &re_err);
    *error = re_err + std::abs(mpfr_get_d(acc.im.get(), MPFR_RNDN));
    return z;
}

} // namespace

Integer root_product_oracle(const CyclicResultantRequest& req)
{
    validate(req);
    if (req.f.is_zero())
        return 0;
    const auto masks = req.mask.indices(req.levels);
    Integer tuples = 1;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        Integer count = 0;
        for (unsigned long j : masks[i])
            count += poly::phi_prime_power(req.p, j);
        tuples *= count;
    }
    if (tuples > (1ul << 20))
        throw BudgetError("root-product oracle over " + tuples.get_str() + " tuples");
    Integer l1 = 0;
    for (const auto& [e, c] : req.f.terms())
        l1 += abs(c);
    // |f(zeta)| <= l1, so the answer has at most tuples * log2(l1) bits.
    const double bits = tuples.get_d() * static_cast<double>(mpz_sizeinbase(l1.get_mpz_t(), 2))
                        + 2.0 * std::log2(tuples.get_d() * static_cast<double>(req.f.term_count() + 1));
    mpfr_prec_t prec = std::max<mpfr_prec_t>(80, static_cast<mpfr_prec_t>(bits) + 64);
    for (int attempt = 0; attempt < 2; ++attempt, prec *= 2) {
        double error = 1;
        const Integer z = oracle_at(req, masks, prec, &error);
        if (error < 0.25)
            return z;
    }
    throw PrecisionError("root-product oracle could not round its result reliably");
}

} // namespace padicres::resultant
