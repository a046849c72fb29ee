#include <doctest.h>

#include <random>

#include "padicres/error.hpp"
#include "padicres/limits/limits.hpp"
#include "padicres/poly/parse.hpp"

using namespace padicres;
using namespace padicres::limits;
using padicres::poly::int_poly;
using padicres::poly::parse_poly;

namespace {

MultiPoly whitehead(int k)
{
    const int m = k / 2;
    if (k % 2 == 0)
        return MultiPoly::constant(2, m) * parse_poly("1 + t1*t2 - t1 - t2", 2);
    return parse_poly(std::to_string(1 + m) + " - " + std::to_string(m) + "*(t1 + t2) + " + std::to_string(1 + m)
                          + "*t1*t2",
                      2);
}

} // namespace

TEST_CASE("zero-limit predicate")
{
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
        CHECK(zero_limit_predicate(parse_poly("t1 + t2 - 2", 2), Prime(p)));
    for (int m = 0; m <= 3; ++m) {
        CHECK_FALSE(zero_limit_predicate(whitehead(2 * m + 1), Prime(3)));
        CHECK(zero_limit_predicate(whitehead(2 * m + 1), Prime(2)));
    }
}

TEST_CASE("limit estimate examples")
{
    // 2 - t1 at p = 7: the d = 1 separated form gives omega_7(2) - 1 = 29 mod 49.
    const auto e = limit_estimate(parse_poly("2 - t1", 1), Prime(7), 2, CyclicMask::Kind::full, Sequence::raw);
    CHECK(e.value.residue() == 29);
    CHECK(e.certified_digits == 2);

    const auto w = limit_estimate(parse_poly("1 + t1*t2", 2), Prime(3), 2, CyclicMask::Kind::rprime, Sequence::raw);
    CHECK(w.value.residue() == 4);

    const auto z = limit_estimate(parse_poly("t1 + t2 - 2", 2), Prime(3), 3, CyclicMask::Kind::full, Sequence::raw);
    CHECK(z.exact_zero);
    CHECK(z.value.is_zero());
    CHECK(z.certified_digits == unlimited_digits);

    LimitOptions tight;
    tight.level_budget = 100;
    CHECK_THROWS_AS(limit_estimate(parse_poly("t1 - 2", 1), Prime(5), 3, CyclicMask::Kind::full, Sequence::raw, tight),
                    BudgetError);
}

TEST_CASE("non-p parts of t - 2 stabilize")
{
    for (unsigned long p : {3ul, 5ul}) {
        const auto f = parse_poly("t1 - 2", 1);
        const auto e = limit_estimate(f, Prime(p), 3, CyclicMask::Kind::full, Sequence::nonp);
        CHECK(e.stabilized);
        CHECK(e.value.valuation() == 0);
        const auto raw = limit_estimate(f, Prime(p), 3, CyclicMask::Kind::full, Sequence::raw);
        CHECK(raw.value.residue() == e.value.residue());
    }
}

TEST_CASE("even Whitehead non-p limit")
{
    for (unsigned long p : {2ul, 3ul}) {
        for (int m = 1; m <= 4; ++m) {
            if (m % static_cast<int>(p) == 0)
                continue;
            const auto e = limit_estimate(whitehead(2 * m), Prime(p), 3, CyclicMask::Kind::rprime, Sequence::nonp);
            const auto expect = PadicApprox::from_integer(m, Prime(p), 3)
                                * padic::teichmuller(m, Prime(p), 3).inverse();
            CHECK(e.certified_digits == 3);
            CHECK(e.value.residue() == expect.residue());
        }
    }
}

TEST_CASE("certified digits are sound")
{
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> coef(-5, 5);
    int tested = 0;
    while (tested < 60) {
        const Prime p(tested % 2 ? 3 : 2);
        const std::size_t d = 1 + rng() % 2;
        MultiPoly f(d);
        for (int k = 0; k < 3; ++k) {
            poly::Exponents e(d);
            for (auto& x : e)
                x = static_cast<std::uint32_t>(rng() % 3);
            f.add_term(e, coef(rng));
        }
        if (zero_limit_predicate(f, p))
            continue;
        const unsigned long K = 2;
        const auto e = limit_estimate(f, p, K, CyclicMask::Kind::full, Sequence::raw);
        const auto next = limit_estimate(f, p, K + 1, CyclicMask::Kind::full, Sequence::raw);
        CHECK(e.value.agreeing_digits(next.value) >= K);
        ++tested;
    }
}

TEST_CASE("sign prediction")
{
    for (int k = 1; k <= 8; ++k)
        CHECK(sign_of(whitehead(k), Prime(2), {2, 2}, CyclicMask::Kind::rprime) == 1);
    CHECK(sign_of(parse_poly("t1 - 3", 1), Prime(5), {1}, CyclicMask::Kind::full) == -1);
    CHECK(resultant::cyclic_resultant({parse_poly("t1 - 3", 1), Prime(5), {1}, CyclicMask::full()}) == -242);
    CHECK(sign_of(parse_poly("2 - t1", 1), Prime(3), {1}, CyclicMask::Kind::full) == 1);
    CHECK_THROWS_AS(sign_of(parse_poly("t1 - 1", 1), Prime(3), {1}, CyclicMask::Kind::full), DegenerateInput);

    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int t = 0; t < 200; ++t) {
        const Prime p(t % 2 ? 3 : 2);
        const std::size_t d = 1 + rng() % 2;
        MultiPoly f(d);
        for (int k = 0; k < 3; ++k) {
            poly::Exponents e(d);
            for (auto& x : e)
                x = static_cast<std::uint32_t>(rng() % 3);
            f.add_term(e, coef(rng));
        }
        std::vector<unsigned long> levels(d);
        for (auto& n : levels)
            n = 1 + rng() % 2;
        for (auto kind : {CyclicMask::Kind::full, CyclicMask::Kind::rprime}) {
            const Integer v = resultant::cyclic_resultant({f, p, levels, mask_of(kind)});
            if (v == 0)
                continue;
            CHECK(sign_of(f, p, levels, kind) == sign(v));
        }
    }
}

TEST_CASE("Iwasawa invariants")
{
    const auto a = iwasawa_fit(int_poly({-6, 1}), Prime(5), 4);
    CHECK(a.lambda == 1);
    CHECK(a.mu == 0);
    CHECK(a.nu == 1);
    CHECK(a.window_first == 1);
    CHECK(a.window_last == 4);

    const auto b = iwasawa_fit(int_poly({-6, 3}), Prime(3), 4);
    CHECK(b.lambda == 0);
    CHECK(b.mu == 1);
    CHECK(b.nu == 0);

    const auto c = iwasawa_fit(int_poly({-2, 1}), Prime(7), 3);
    CHECK(c.lambda == 0);
    CHECK(c.mu == 0);
    CHECK(c.nu == 0);

    CHECK(lambda_mu_structural(int_poly({-6, 1}), Prime(5)).lambda == 1);
    CHECK(lambda_mu_structural(int_poly({-2, 1}), Prime(3)).lambda == 0);
    const auto quad = int_poly({-6, 1}) * int_poly({-26, 1});
    CHECK(lambda_mu_structural(quad, Prime(5)).lambda == 2);
    CHECK(iwasawa_fit(quad, Prime(5), 4).lambda == 2);
    CHECK_THROWS_AS(lambda_mu_structural(int_poly({-1, 1}), Prime(5)), DomainError);
    CHECK_THROWS_AS(iwasawa_fit(int_poly({-1, 1}), Prime(5), 4), DegenerateInput);
    CHECK_THROWS_AS(iwasawa_fit(int_poly({-2, 1}), Prime(5), 2), DomainError);
}

TEST_CASE("fit and structural routes agree")
{
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> coef(-9, 9);
    int tested = 0;
    while (tested < 30) {
        const Prime p(tested % 3 == 0 ? 2 : (tested % 3 == 1 ? 3 : 5));
        std::vector<Integer> c(2 + rng() % 3);
        for (auto& x : c)
            x = coef(rng);
        if (rng() % 3 == 0)
            for (auto& x : c)
                x *= p.value();
        const IntPoly f = int_poly(c);
        if (f.degree() < 1 || f.evaluate(1) == 0)
            continue;
        IwasawaInvariants fit;
        try {
            fit = iwasawa_fit(f, p, p.value() == 5 ? 4 : 5);
        } catch (const DegenerateInput&) {
            continue;
        }
        const auto s = lambda_mu_structural(f, p);
        CHECK(fit.lambda == s.lambda);
        CHECK(fit.mu == s.mu);
        ++tested;
    }
}

TEST_CASE("p divides one cyclic resultant iff it divides all iff p | f(1)")
{
    for (unsigned long p : {2ul, 3ul}) {
        for (int a = -3; a <= 3; ++a) {
            for (int b = -3; b <= 3; ++b) {
                for (int c = -3; c <= 3; ++c) {
                    const IntPoly f = int_poly({a, b, c});
                    if (f.is_zero())
                        continue;
                    const bool predicted = f.evaluate(1) % p == 0;
                    for (unsigned long n = 1; n <= 3; ++n) {
                        const Integer r = resultant::cyclic_resultant(
                            {poly::from_int_poly(f), Prime(p), {n}, CyclicMask::full()});
                        CHECK((r % p == 0) == predicted);
                    }
                }
            }
        }
    }
}

TEST_CASE("separated closed form")
{
    const MultiPoly two = MultiPoly::constant(1, 2);
    CHECK(separated_limit_closed_form(-1, 1, two, true, Prime(7), 2).residue() == 29);
    const auto v = verify_separated_limit(-1, 1, two, true, Prime(7), 2);
    CHECK(v.agree);
    CHECK(separated_limit_closed_form(1, 1, MultiPoly::constant(1, 4), true, Prime(2), 5).residue() == 31);
    CHECK(verify_separated_limit(1, 1, MultiPoly::constant(1, 4), true, Prime(2), 3).agree);
    CHECK(separated_limit_closed_form(1, 1, MultiPoly::constant(1, 2), true, Prime(3), 3).is_zero());

    // Two variables: omega_p(f(1,1)) for odd p.
    const MultiPoly g = parse_poly("2*t1 + 3", 1);
    CHECK(separated_limit_closed_form(-1, 2, g, false, Prime(5), 2).residue()
          == padic::teichmuller(4, Prime(5), 2).residue());
    CHECK(verify_separated_limit(-1, 2, g, false, Prime(5), 2).agree);
    CHECK(verify_separated_limit(3, 1, parse_poly("t1^2 - 1", 1), false, Prime(2), 3).agree);
    CHECK(verify_separated_limit(1, 3, parse_poly("t1 + 1", 1), false, Prime(3), 3).agree);
    CHECK(verify_separated_limit(2, 9, MultiPoly::constant(1, 5), true, Prime(3), 3).agree);
}

TEST_CASE("order invariance")
{
    CHECK(order_invariance_check(parse_poly("t1*t2 - 2", 2), Prime(2), {2, 1}, CyclicMask::Kind::full).ok);
    CHECK(order_invariance_check(parse_poly("t1^2 - 3", 1), Prime(3), {2}, CyclicMask::Kind::full).ok);
    CHECK(order_invariance_check(whitehead(3), Prime(3), {1, 2}, CyclicMask::Kind::full).ok);
    CHECK(order_invariance_check(whitehead(3), Prime(3), {2, 2}, CyclicMask::Kind::rprime).ok);
    CHECK(order_invariance_check(parse_poly("t1*t2*t3 + t1 - 2*t3 + 4", 3), Prime(2), {1, 1, 2},
                                 CyclicMask::Kind::full)
              .ok);
}
