#include "padicres/limits/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "padicres/error.hpp"
#include "padicres/poly/newton_polygon.hpp"

namespace padicres::limits {

using padic::nonp_part;
using padic::teichmuller;
using padic::vp;
using resultant::cyclic_resultant;
using resultant::CyclicResultantRequest;

CyclicMask mask_of(CyclicMask::Kind kind)
{
    switch (kind) {
    case CyclicMask::Kind::full:
        return CyclicMask::full();
    case CyclicMask::Kind::rprime:
        return CyclicMask::rprime();
    case CyclicMask::Kind::custom:
        break;
    }
    throw DomainError("limits are defined for the full and r' masks only");
}

bool zero_limit_predicate(const MultiPoly& f, Prime p)
{
    return mpz_divisible_ui_p(poly::eval_at_ones(f).get_mpz_t(), p.value()) != 0;
}

LimitOptions default_limit_options()
{
    LimitOptions o;
    if (const char* env = std::getenv("PADIC_RES_BUDGET")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            o.level_budget = v;
    }
    return o;
}

namespace {

Integer diagonal_value(const MultiPoly& f, Prime p, unsigned long level, CyclicMask::Kind mask,
                       const LimitOptions& options)
{
    const Integer size = prime_power(p, level * f.num_vars());
    if (size > options.level_budget)
        throw BudgetError("levels (" + std::to_string(level) + ", ...) need " + size.get_str()
                          + " roots of unity, above the budget " + std::to_string(options.level_budget));
    const CyclicResultantRequest req{f, p, std::vector<unsigned long>(f.num_vars(), level), mask_of(mask)};
    return cyclic_resultant(req, {options.threads});
}

} // namespace

LimitEstimate limit_estimate(const MultiPoly& f, Prime p, unsigned long K, CyclicMask::Kind mask, Sequence sequence,
                             const LimitOptions& options)
{
    if (K == 0)
        throw DomainError("limit estimates need at least one digit");
    const bool zero = zero_limit_predicate(f, p);
    if (sequence == Sequence::raw && zero)
        return {PadicApprox::zero(p, K), unlimited_digits, {}, true, true};

    if (!zero) {
        // p never divides the values, so the non-p part is the value itself.
        const Integer r = diagonal_value(f, p, K, mask, options);
        return {PadicApprox::from_integer(r, p, K), K, {K}, true, false};
    }

    const Integer r0 = diagonal_value(f, p, K, mask, options);
    const Integer r1 = diagonal_value(f, p, K + 1, mask, options);
    if (r0 == 0 || r1 == 0)
        throw DegenerateInput("a diagonal resultant vanishes: f has a p-power root of unity as a root");
    const PadicApprox u0 = PadicApprox::from_integer(nonp_part(r0, p), p, K);
    const PadicApprox u1 = PadicApprox::from_integer(nonp_part(r1, p), p, K);
    const unsigned long certified = u1.agreeing_digits(u0);
    return {u1, certified, {K, K + 1}, certified == K, false};
}

int sign_of(const MultiPoly& f, Prime p, const std::vector<unsigned long>& levels, CyclicMask::Kind mask)
{
    if (levels.size() != f.num_vars())
        throw DomainError("level vector does not match the number of variables");
    int s = 0;
    if (mask == CyclicMask::Kind::full) {
        if (!p.is_two()) {
            s = sign(poly::eval_at_ones(f));
        } else {
            const CyclicResultantRequest req{f, p, std::vector<unsigned long>(f.num_vars(), 1), CyclicMask::full()};
            s = sign(cyclic_resultant(req));
        }
    } else if (mask == CyclicMask::Kind::rprime) {
        if (!p.is_two())
            return 1;
        s = sign(poly::eval_int(f, std::vector<Integer>(f.num_vars(), Integer(-1))));
    } else {
        throw DomainError("sign prediction needs the full or r' mask");
    }
    if (s == 0)
        throw DegenerateInput("the resultant vanishes, it has no sign");
    return s;
}

IwasawaInvariants iwasawa_fit(const IntPoly& f, Prime p, unsigned long n_max)
{
    if (n_max < 3)
        throw DomainError("the Iwasawa fit needs at least three levels");
    IwasawaInvariants inv;
    const MultiPoly g = poly::from_int_poly(f);
    for (unsigned long n = 1; n <= n_max; ++n) {
        const Integer r = cyclic_resultant({g, p, {n}, CyclicMask::full()});
        if (r == 0)
            throw DegenerateInput("Res(t^{p^" + std::to_string(n) + "} - 1, f) = 0");
        inv.exponents.push_back(vp(r, p));
    }
    auto e = [&](unsigned long n) { return Integer(inv.exponents[n - 1]); };
    auto pp = [&](unsigned long n) { return prime_power(p, n); };
    const unsigned long N = n_max;
    const Integer second = (e(N) - e(N - 1)) - (e(N - 1) - e(N - 2));
    const Integer scale = pp(N - 2) * (p.value() - 1) * (p.value() - 1);
    if (!mpz_divisible_p(second.get_mpz_t(), scale.get_mpz_t()) || second < 0)
        throw DomainError("the exponents are not of the form lambda n + mu p^n + nu on the last three levels");
    const Integer mu = second / scale;
    const Integer lambda = e(N) - e(N - 1) - mu * (pp(N) - pp(N - 1));
    if (lambda < 0)
        throw DomainError("fitted lambda is negative");
    const Integer nu = e(N) - lambda * N - mu * pp(N);
    inv.lambda = lambda.get_ui();
    inv.mu = mu.get_ui();
    inv.nu = nu.get_si();
    inv.window_last = N;
    inv.window_first = N - 2;
    while (inv.window_first > 1) {
        const unsigned long n = inv.window_first - 1;
        if (e(n) != lambda * n + mu * pp(n) + nu)
            break;
        inv.window_first = n;
    }
    return inv;
}

LambdaMu lambda_mu_structural(const IntPoly& f, Prime p)
{
    if (f.is_zero() || f.evaluate(1) == 0)
        throw DomainError("f(1) = 0: every cyclic resultant vanishes");
    const unsigned long mu = vp(poly::content(f), p);
    const IntPoly unit = f.divided_exact(prime_power(p, mu));
    const auto np = poly::newton_polygon(poly::shift_one(unit), p);
    return {np.roots_with_valuation_above(0), mu};
}

MultiPoly separated_polynomial(const Integer& a, unsigned long n, const MultiPoly& g, bool univariate)
{
    if (univariate) {
        if (!g.is_constant())
            throw DomainError("the univariate separated form needs a constant g");
        MultiPoly f = MultiPoly::monomial({static_cast<std::uint32_t>(n)}, a);
        f += MultiPoly::constant(1, g.constant_term());
        return f;
    }
    const std::size_t d = g.num_vars() + 1;
    poly::Exponents lead(d, 0);
    lead[0] = static_cast<std::uint32_t>(n);
    MultiPoly f = MultiPoly::monomial(lead, a);
    for (const auto& [e, c] : g.terms()) {
        poly::Exponents shifted(d, 0);
        std::copy(e.begin(), e.end(), shifted.begin() + 1);
        f.add_term(shifted, c);
    }
    return f;
}

PadicApprox separated_limit_closed_form(const Integer& a, unsigned long n, const MultiPoly& g, bool univariate,
                                        Prime p, unsigned long K)
{
    if (a == 0 || n == 0)
        throw DomainError("the separated form needs a != 0 and n >= 1");
    const Integer at_ones = a + poly::eval_at_ones(g);
    if (mpz_divisible_ui_p(at_ones.get_mpz_t(), p.value()))
        return PadicApprox::zero(p, K);
    if (!univariate)
        return p.is_two() ? PadicApprox::from_integer(1, p, K) : teichmuller(at_ones, p, K);

    if (!g.is_constant())
        throw DomainError("the univariate separated form needs a constant g");
    const PadicApprox wg = teichmuller(g.constant_term(), p, K);
    const PadicApprox wa = teichmuller(a, p, K);
    const PadicApprox base = p.is_two() ? wg - wa : wg + wa;
    const Integer e = prime_power(p, vp(Integer(n), p));
    Integer out;
    const Integer modulus = prime_power(p, K);
    mpz_powm(out.get_mpz_t(), base.residue().get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    return PadicApprox::from_integer(out, p, K);
}

SeparatedCheck verify_separated_limit(const Integer& a, unsigned long n, const MultiPoly& g, bool univariate, Prime p,
                                      unsigned long K, const LimitOptions& options)
{
    const PadicApprox closed = separated_limit_closed_form(a, n, g, univariate, p, K);
    const MultiPoly f = separated_polynomial(a, n, g, univariate);
    LimitEstimate est = limit_estimate(f, p, K, CyclicMask::Kind::full, Sequence::raw, options);
    const bool agree = est.exact_zero ? closed.is_zero() : closed.agreeing_digits(est.value) >= std::min(K, est.certified_digits);
    return {closed, std::move(est), agree};
}

OrderInvarianceReport order_invariance_check(const MultiPoly& f, Prime p, const std::vector<unsigned long>& levels,
                                             CyclicMask::Kind mask)
{
    OrderInvarianceReport report;
    const std::size_t d = f.num_vars();
    if (levels.size() != d)
        throw DomainError("level vector does not match the number of variables");
    const CyclicMask m = mask_of(mask);
    const Integer base = cyclic_resultant({f, p, levels, m});
    const unsigned long low = *std::min_element(levels.begin(), levels.end());
    const Integer modulus = prime_power(p, low);

    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<unsigned long> permuted(d);
        for (std::size_t i = 0; i < d; ++i)
            permuted[i] = levels[perm[i]];
        const Integer v = cyclic_resultant({f.permute_variables(perm), p, permuted, m});
        if (v != base) {
            report.ok = false;
            report.detail += "permuted value differs; ";
        }
        std::vector<unsigned long> walk = levels;
        for (std::size_t i = 0; i < d; ++i) {
            ++walk[perm[i]];
            const Integer w = cyclic_resultant({f, p, walk, m});
            if (mod_floor(w - base, modulus) != 0) {
                report.ok = false;
                report.detail += "staircase value not congruent mod p^" + std::to_string(low) + "; ";
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return report;
}

} // namespace padicres::limits
