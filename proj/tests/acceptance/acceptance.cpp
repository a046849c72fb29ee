// One PASS/FAIL line per acceptance criterion. All comparisons are exact
// (integers or residues); the only tolerances are the runtime targets and the
// rounding bound of the floating oracles, pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "padicres/error.hpp"
#include "padicres/limits/limits.hpp"
#include "padicres/link/link.hpp"
#include "padicres/poly/parse.hpp"
#include "padicres/resultant/cyclic.hpp"

using namespace padicres;
using limits::Sequence;
using poly::MultiPoly;
using resultant::CyclicMask;
using resultant::CyclicResultantRequest;

namespace {

constexpr double oracle_runtime_limit_s = 60.0;
constexpr double congruence_runtime_limit_s = 120.0;
constexpr unsigned long baseline_budget = 4096;

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why)
{
    if (o.pass)
        o.detail = why;
    o.pass = false;
}

MultiPoly random_poly(std::mt19937_64& rng, std::size_t vars, int max_terms, int max_exp, int max_coef)
{
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> expo(0, max_exp);
    std::uniform_int_distribution<int> coef(-max_coef, max_coef);
    MultiPoly f(vars);
    while (f.is_zero()) {
        const int n = terms(rng);
        for (int i = 0; i < n; ++i) {
            poly::Exponents e(vars);
            for (auto& x : e)
                x = static_cast<std::uint32_t>(expo(rng));
            f.add_term(e, coef(rng));
        }
    }
    return f;
}

bool divides(Prime p, const Integer& x)
{
    return x % p.as_integer() == 0;
}

std::string show(const MultiPoly& f)
{
    return "f = " + f.to_string();
}

Outcome oracle_equivalence()
{
    Outcome o;
    std::mt19937_64 rng(101);
    const auto start = std::chrono::steady_clock::now();
    int cases = 0;
    for (; cases < 600; ++cases) {
        const Prime p(cases % 2 ? 3 : 2);
        const std::size_t d = 1 + static_cast<std::size_t>(cases % 4 != 0);
        std::vector<unsigned long> levels(d);
        for (auto& n : levels)
            n = 1 + rng() % 2;
        const CyclicMask mask = cases % 3 == 0 ? CyclicMask::rprime() : CyclicMask::full();
        const CyclicResultantRequest req{random_poly(rng, d, 4, 2, 9), p, levels, mask};
        const Integer fast = resultant::cyclic_resultant(req);
        const Integer base = resultant::cyclic_resultant_baseline(req, baseline_budget);
        const Integer flt = resultant::root_product_oracle(req);
        if (fast != base || fast != flt)
            fail(o, show(req.f) + ": fast " + fast.get_str() + ", baseline " + base.get_str() + ", float "
                        + flt.get_str());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s >= oracle_runtime_limit_s)
        fail(o, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = std::to_string(cases) + " cases in " + std::to_string(s).substr(0, 5) + " s";
    return o;
}

Outcome congruence_certificate()
{
    Outcome o;
    std::mt19937_64 rng(202);
    const auto start = std::chrono::steady_clock::now();
    int cases = 0;
    int comparisons = 0;
    while (cases < 240) {
        const unsigned long primes[] = {2, 3, 5};
        const Prime p(primes[rng() % 3]);
        const std::size_t d = 1 + rng() % 2;
        const MultiPoly f = random_poly(rng, d, 4, 3, 9);
        if (limits::zero_limit_predicate(f, p))
            continue;
        ++cases;
        std::vector<unsigned long> levels(d);
        for (auto& n : levels)
            n = 1 + (p.value() == 5 ? 0 : rng() % 2);
        const unsigned long low = *std::min_element(levels.begin(), levels.end());
        const Integer base = resultant::cyclic_resultant({f, p, levels});
        const Integer modulus = prime_power(p, low);
        // Every variable raised alone, then all together.
        for (std::size_t i = 0; i <= d; ++i) {
            auto up = levels;
            if (i == d)
                for (auto& n : up)
                    ++n;
            else
                ++up[i];
            const Integer r = resultant::cyclic_resultant({f, p, up});
            ++comparisons;
            if ((r - base) % modulus != 0)
                fail(o, show(f) + " p = " + std::to_string(p.value()) + ": levels +1 break the congruence");
        }
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (s >= congruence_runtime_limit_s)
        fail(o, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = std::to_string(cases) + " polynomials, " + std::to_string(comparisons) + " comparisons";
    return o;
}

Outcome zero_limit_criterion()
{
    Outcome o;
    // Monomials 1, t1, t2, t1 t2, t1^2, t2^2; coefficients in [-3, 3]; at most 3 terms.
    const std::vector<poly::Exponents> monomials{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}};
    const std::vector<std::vector<unsigned long>> level_sets{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    long polys = 0;
    const std::size_t m = monomials.size();
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) > 3)
            continue;
        std::vector<std::size_t> chosen;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i))
                chosen.push_back(i);
        std::vector<int> coef(chosen.size(), -3);
        for (;;) {
            bool nonzero = true;
            for (int c : coef)
                nonzero = nonzero && c != 0;
            if (nonzero) {
                MultiPoly f(2);
                for (std::size_t i = 0; i < chosen.size(); ++i)
                    f.add_term(monomials[chosen[i]], coef[i]);
                ++polys;
                for (unsigned long pv : {2ul, 3ul}) {
                    const Prime p(pv);
                    const bool at_one = divides(p, poly::eval_at_ones(f));
                    for (const auto& levels : level_sets) {
                        const bool here = divides(p, resultant::cyclic_resultant({f, p, levels}));
                        if (here != at_one)
                            fail(o, show(f) + " p = " + std::to_string(pv) + ": divisibility depends on the levels");
                    }
                }
            }
            std::size_t i = 0;
            while (i < coef.size() && ++coef[i] > 3)
                coef[i++] = -3;
            if (i == coef.size())
                break;
        }
    }
    if (o.pass)
        o.detail = std::to_string(polys) + " polynomials, p in {2, 3}, 4 level vectors";
    return o;
}

Outcome iwasawa_law()
{
    Outcome o;
    std::mt19937_64 rng(404);
    int fitted = 0;
    int skipped = 0;
    int positive_lambda = 0;
    int positive_mu = 0;
    while (fitted < 100) {
        const unsigned long primes[] = {2, 3, 5};
        const Prime p(primes[fitted % 3]);
        // Products of linear factors t - (1 + p^k c) and random factors, times a p-power content.
        poly::IntPoly f = poly::int_poly({Integer(1 + static_cast<long>(rng() % 5))});
        const int linear = static_cast<int>(rng() % 3);
        for (int i = 0; i < linear; ++i) {
            const Integer c = 1 + static_cast<long>(rng() % 4);
            f = f * poly::int_poly({-(1 + prime_power(p, 1 + rng() % 2) * c), 1});
        }
        std::vector<Integer> extra(1 + rng() % 3);
        for (auto& x : extra)
            x = static_cast<long>(rng() % 13) - 6;
        extra.back() = extra.back() == 0 ? Integer(1) : extra.back();
        f = f * poly::int_poly(extra) * poly::int_poly({prime_power(p, rng() % 2)});
        try {
            const auto fit = limits::iwasawa_fit(f, p, 5);
            const auto structural = limits::lambda_mu_structural(f, p);
            ++fitted;
            positive_lambda += fit.lambda > 0;
            positive_mu += fit.mu > 0;
            if (fit.lambda != structural.lambda || fit.mu != structural.mu)
                fail(o, poly::to_string(f) + ": fitted and structural invariants differ");
            if (fit.window_first > 3 || fit.window_last != 5)
                fail(o, poly::to_string(f) + ": law not exact on the final three levels");
            for (unsigned long n = 3; n <= 5; ++n) {
                const long predicted = static_cast<long>(fit.lambda * n)
                                       + static_cast<long>(fit.mu) * prime_power(p, n).get_si() + fit.nu;
                if (predicted != static_cast<long>(fit.exponents[n - 1]))
                    fail(o, poly::to_string(f) + ": e_n off the law");
            }
        } catch (const DegenerateInput&) {
            ++skipped;
        }
    }
    if (o.pass)
        o.detail = std::to_string(fitted) + " polynomials, lambda > 0 in " + std::to_string(positive_lambda)
                   + ", mu > 0 in " + std::to_string(positive_mu) + " (" + std::to_string(skipped)
                   + " with vanishing resultants skipped)";
    return o;
}

Outcome separated_closed_forms()
{
    Outcome o;
    std::mt19937_64 rng(505);
    const unsigned long K = 3;
    int cases = 0;
    for (; cases < 50; ++cases) {
        const unsigned long primes[] = {2, 3, 5};
        const Prime p(primes[cases % 3]);
        const bool univariate = cases % 2 == 0;
        Integer a = static_cast<long>(rng() % 9) - 4;
        if (a == 0)
            a = 1;
        const unsigned long n = 1 + rng() % 6;
        const MultiPoly g = univariate ? MultiPoly::constant(1, static_cast<long>(rng() % 19) - 9)
                                       : random_poly(rng, 1, 3, 3, 6);
        const auto check = limits::verify_separated_limit(a, n, g, univariate, p, K);
        if (!check.agree)
            fail(o, show(limits::separated_polynomial(a, n, g, univariate)) + " p = " + std::to_string(p.value()));
    }
    if (o.pass)
        o.detail = std::to_string(cases) + " triples at K = 3";
    return o;
}

Integer power(const Integer& b, const Integer& e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e.get_ui());
    return r;
}

Outcome even_whitehead()
{
    Outcome o;
    int orders = 0;
    int limits_checked = 0;
    for (unsigned long pv : {2ul, 3ul}) {
        const Prime p(pv);
        for (long m = 1; m <= 4; ++m) {
            const auto link = link::whitehead_link(2 * m);
            for (unsigned long n1 = 1; n1 <= 3; ++n1)
                for (unsigned long n2 = 1; n2 <= 3; ++n2) {
                    const Integer q1 = prime_power(p, n1);
                    const Integer q2 = prime_power(p, n2);
                    const Integer expect = power(m, (q1 - 1) * (q2 - 1)) * power(p.as_integer(), n1 * (q2 - 1) + n2 * (q1 - 1));
                    ++orders;
                    if (link::h1_order(link, {p, {n1, n2}}).order != expect)
                        fail(o, "k = " + std::to_string(2 * m) + " p = " + std::to_string(pv) + " levels ("
                                    + std::to_string(n1) + ", " + std::to_string(n2) + ")");
                }
            if (m % static_cast<long>(pv) == 0)
                continue;
            const auto est = link::h1_nonp_limit(link, p, 3);
            const auto closed = link::whitehead_closed_form(2 * m, p, 3);
            ++limits_checked;
            if (est.certified_digits < 3 || closed.value.agreeing_digits(est.value) < 3)
                fail(o, "k = " + std::to_string(2 * m) + " p = " + std::to_string(pv) + ": limit "
                            + est.value.to_string() + " vs " + closed.value.to_string());
        }
    }
    if (o.pass)
        o.detail = std::to_string(orders) + " orders, " + std::to_string(limits_checked) + " limits mod p^3";
    return o;
}

Outcome odd_whitehead_odd_p()
{
    Outcome o;
    for (unsigned long pv : {3ul, 5ul, 7ul})
        for (long m = 0; m <= 2; ++m) {
            const Prime p(pv);
            const auto est = link::h1_nonp_limit(link::whitehead_link(2 * m + 1), p, 2);
            const auto expect = padic::teichmuller(2, p, 2) * padic::PadicApprox::from_integer(2, p, 2).inverse();
            if (est.certified_digits < 2 || est.value.agreeing_digits(expect) < 2)
                fail(o, "k = " + std::to_string(2 * m + 1) + " p = " + std::to_string(pv) + ": "
                            + est.value.to_string() + " vs " + expect.to_string());
        }
    if (o.pass)
        o.detail = "p in {3, 5, 7}, m in {0, 1, 2}, 2 digits";
    return o;
}

Outcome odd_whitehead_two()
{
    Outcome o;
    std::string digits;
    for (long k : {3l, 5l})
        for (unsigned long K = 3; K <= 6; ++K) {
            const auto closed = link::whitehead_closed_form(k, Prime(2), K, 5);
            const auto est = link::h1_nonp_limit(link::whitehead_link(k), Prime(2), K);
            const unsigned long mutual = std::min({K, est.certified_digits, closed.achieved_digits});
            if (mutual < 3 || closed.value.agreeing_digits(est.value) < mutual)
                fail(o, "k = " + std::to_string(k) + " K = " + std::to_string(K) + ": " + closed.value.to_string()
                            + " vs " + est.value.to_string());
            if (K == 6)
                digits += (digits.empty() ? "" : ", ") + std::string("k = ") + std::to_string(k) + ": "
                          + std::to_string(mutual) + " digits";
        }
    for (long k : {3l, 5l})
        for (const auto& row : link::two_part_exponent_check(k, 3))
            if (!row.holds)
                fail(o, "2-part exponent off for k = " + std::to_string(k) + " n = " + std::to_string(row.n));
    if (o.pass)
        o.detail = digits + "; 2-part exponent holds for n <= 3";
    return o;
}

Outcome character_sums()
{
    Outcome o;
    std::vector<link::LinkSpec> links{link::whitehead_link(1), link::whitehead_link(2), link::whitehead_link(3)};
    link::LinkSpec trefoil;
    trefoil.name = "trefoil";
    trefoil.components = 1;
    trefoil.sublinks.emplace(link::Subset{1}, poly::parse_poly("t1^2 - t1 + 1", 1));
    links.insert(links.begin(), trefoil);
    int covers = 0;
    for (const auto& link : links)
        for (unsigned long pv : {2ul, 3ul, 5ul, 7ul}) {
            const Prime p(pv);
            for (unsigned long a = 1; prime_power(p, a) <= 256; ++a)
                for (unsigned long b = 1; b <= (link.components == 1 ? 1ul : 8ul); ++b) {
                    std::vector<unsigned long> levels{a};
                    if (link.components == 2)
                        levels.push_back(b);
                    if (prime_power(p, a + (link.components == 2 ? b : 0)) > 256)
                        continue;
                    ++covers;
                    const link::CoveringSpec cov{p, levels};
                    if (link::character_oracle(link, cov).order != link::h1_order(link, cov).order)
                        fail(o, link.name + " p = " + std::to_string(pv));
                }
        }
    if (o.pass)
        o.detail = std::to_string(covers) + " covers with |G| <= 256";
    return o;
}

Outcome g_stabilization()
{
    Outcome o;
    const Integer modulus = 64;
    for (long m = 0; m <= 6; ++m) {
        Integer r = link::whitehead_g_product(m, 10) % modulus;
        if (r < 0)
            r += modulus;
        const Integer expect = m % 2 == 0 ? Integer(1) : modulus - 1;
        if (r != expect)
            fail(o, "m = " + std::to_string(m) + ": G_10 = " + r.get_str() + " mod 64");
    }
    if (o.pass)
        o.detail = "m in 0..6, n = 10, mod 2^6";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"resultant oracle equivalence", oracle_equivalence},
        {"congruence certificate", congruence_certificate},
        {"zero-limit criterion", zero_limit_criterion},
        {"Iwasawa law", iwasawa_law},
        {"separated closed forms", separated_closed_forms},
        {"even twisted Whitehead", even_whitehead},
        {"odd twisted Whitehead, odd p", odd_whitehead_odd_p},
        {"odd twisted Whitehead, p = 2", odd_whitehead_two},
        {"character sums vs sublink product", character_sums},
        {"G_n 2-adic stabilization", g_stabilization},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += !o.pass;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
