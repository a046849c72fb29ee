#include <doctest.h>

#include <random>

#include "padicres/error.hpp"
#include "padicres/poly/cyclotomic.hpp"
#include "padicres/poly/multi_poly.hpp"
#include "padicres/poly/newton_polygon.hpp"
#include "padicres/poly/parse.hpp"
#include "padicres/poly/uni_poly.hpp"

using namespace padicres;
using namespace padicres::poly;

namespace {

MultiPoly random_poly(std::mt19937_64& rng, std::size_t d, int terms, int max_deg, int max_coef)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-max_coef, max_coef);
    MultiPoly f(d);
    for (int k = 0; k < terms; ++k) {
        Exponents e(d);
        for (auto& x : e)
            x = static_cast<std::uint32_t>(deg(rng));
        f.add_term(e, coef(rng));
    }
    return f;
}

} // namespace

TEST_CASE("parse reads terms directly")
{
    const MultiPoly f = parse_poly("t1*t2 - 2", 2);
    CHECK(f.term_count() == 2);
    CHECK(f.coefficient({1, 1}) == 1);
    CHECK(f.coefficient({0, 0}) == -2);
    CHECK(parse_poly("0", 3).is_zero());
    CHECK(parse_poly("0", 3).num_vars() == 3);

    // (1+1)*t1^2 expanded by hand is 2*t1^2.
    const MultiPoly g = parse_poly("(1+1)*t1^2", 1);
    CHECK(g == MultiPoly::monomial({2}, 2));
    CHECK(g.to_string() == "2*t1^2");
}

TEST_CASE("parse handles unary signs, nesting and bare t")
{
    CHECK(parse_poly("-(t1-1)^2", 1).to_string() == "-t1^2 + 2*t1 - 1");
    CHECK(parse_poly("--3", 2) == MultiPoly::constant(2, 3));
    CHECK(parse_poly("t-6", 1).to_string() == "t1 - 6");
    CHECK(parse_poly(" ( t1 + t2 ) ^ 2 ", 2).to_string() == "t1^2 + 2*t1*t2 + t2^2");
    CHECK(parse_poly("t2^0", 2) == MultiPoly::constant(2, 1));
}

TEST_CASE("parse errors carry positions")
{
    try {
        parse_poly("t1 + * 2", 1);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_poly("t3", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("t0", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("t", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("m + t1", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("(t1", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("t1^", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("t1^70000", 1), ParseError);
    CHECK_THROWS_AS(parse_poly("(t1^300)^300", 1), ParseError);
    ParseOptions small;
    small.max_exponent = 4;
    CHECK_THROWS_AS(parse_poly("t1^5", 1, small), ParseError);
}

TEST_CASE("serialization round trip is a fixed point")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const MultiPoly f = random_poly(rng, d, 5, 4, 50);
        const std::string s = f.to_string();
        const MultiPoly g = parse_poly(s, d);
        CHECK(g == f);
        CHECK(g.to_string() == s);
    }
}

TEST_CASE("ring axioms on random triples")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const MultiPoly f = random_poly(rng, d, 4, 3, 20);
        const MultiPoly g = random_poly(rng, d, 4, 3, 20);
        const MultiPoly h = random_poly(rng, d, 4, 3, 20);
        CHECK((f + g) * h == f * h + g * h);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK((f - f).is_zero());
        if (!g.is_zero()) {
            auto q = divide_exact(f * g, g);
            REQUIRE(q);
            CHECK(*q == f);
        }
    }
}

TEST_CASE("evaluation is multiplicative")
{
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> pt(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const MultiPoly f = random_poly(rng, d, 4, 3, 20);
        const MultiPoly g = random_poly(rng, d, 4, 3, 20);
        std::vector<Integer> x(d);
        for (auto& v : x)
            v = pt(rng);
        CHECK(eval_int(f * g, x) == eval_int(f, x) * eval_int(g, x));
    }
}

TEST_CASE("eval_int examples")
{
    const std::vector<Integer> ones{1, 1};
    const std::vector<Integer> minus{-1, -1};
    CHECK(eval_int(parse_poly("t1*t2 - 2", 2), ones) == -1);
    for (int m = 1; m <= 5; ++m) {
        const MultiPoly even = MultiPoly::constant(2, m) * parse_poly("1 + t1*t2 - t1 - t2", 2);
        CHECK(eval_int(even, ones) == 0);
    }
    for (int m = 0; m <= 5; ++m) {
        // 1 + m - m(t1 + t2) + (1 + m) t1 t2 at (-1, -1) is 4m + 2.
        MultiPoly odd = MultiPoly::constant(2, 1 + m) - MultiPoly::constant(2, m) * parse_poly("t1 + t2", 2)
                        + MultiPoly::constant(2, 1 + m) * parse_poly("t1*t2", 2);
        CHECK(eval_int(odd, minus) == 4 * m + 2);
    }
    CHECK_THROWS_AS(eval_int(parse_poly("t1", 1), ones), DomainError);
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(to_string(cyclotomic(Prime(2), 1)) == "t + 1");
    CHECK(to_string(cyclotomic(Prime(2), 0)) == "t - 1");
    CHECK(to_string(cyclotomic(Prime(3), 2)) == "t^6 + t^3 + 1");
    // Phi_9 = (t^9 - 1) / (t^3 - 1).
    auto q = divide_exact(cyclic_modulus(Prime(3), 2), cyclic_modulus(Prime(3), 1));
    REQUIRE(q);
    CHECK(*q == cyclotomic(Prime(3), 2));
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
        for (unsigned long n = 0; n <= 3; ++n) {
            IntPoly prod = int_poly({1});
            for (unsigned long j = 0; j <= n; ++j)
                prod *= cyclotomic(Prime(p), j);
            CHECK(prod == cyclic_modulus(Prime(p), n));
            CHECK(cyclotomic(Prime(p), n).degree() == static_cast<long>(phi_prime_power(Prime(p), n)));
        }
    }
    CHECK_THROWS_AS(Prime(4), DomainError);
}

TEST_CASE("shift_one")
{
    CHECK(to_string(shift_one(int_poly({-2, 1})), 's') == "s - 1");
    CHECK(to_string(shift_one(int_poly({0, 0, 1})), 's') == "s^2 + 2*s + 1");
    // t^2 - 7t + 6 at p = 5; constant term must be f(1) = 0.
    const IntPoly f = int_poly({6, -7, 1});
    const IntPoly g = shift_one(f);
    CHECK(to_string(g, 's') == "s^2 - 5*s");
    CHECK(g.coeff(0) == f.evaluate(1));
}

TEST_CASE("newton polygon")
{
    const auto np = newton_polygon(int_poly({3, 1, 3}), Prime(3));
    REQUIRE(np.segments.size() == 2);
    CHECK(np.segments[0].slope == -1);
    CHECK(np.segments[0].length == 1);
    CHECK(np.segments[1].slope == 1);
    CHECK(np.segments[1].length == 1);

    const auto lin = newton_polygon(int_poly({-1, 1}), Prime(5));
    REQUIRE(lin.segments.size() == 1);
    CHECK(lin.segments[0].slope == 0);
    CHECK(lin.roots_with_valuation_above(0) == 0);

    const auto sq = newton_polygon(int_poly({-4, 0, 1}), Prime(2));
    REQUIRE(sq.segments.size() == 1);
    CHECK(sq.segments[0].slope == -1);
    CHECK(sq.segments[0].length == 2);

    CHECK_THROWS_AS(newton_polygon(IntPoly(), Prime(2)), DomainError);
}

TEST_CASE("newton polygon lengths sum to the degree span and slopes increase")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coef(-200, 200);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Integer> c(1 + trial % 8);
        for (auto& x : c)
            x = coef(rng);
        c.back() = c.back() == 0 ? Integer(1) : c.back();
        const IntPoly f = int_poly(c);
        const auto np = newton_polygon(f, Prime(trial % 2 ? 2 : 3));
        std::size_t first = 0;
        while (f.coeffs()[first] == 0)
            ++first;
        std::size_t total = 0;
        for (std::size_t k = 0; k < np.segments.size(); ++k) {
            total += np.segments[k].length;
            if (k > 0)
                CHECK(np.segments[k - 1].slope < np.segments[k].slope);
        }
        CHECK(total == static_cast<std::size_t>(f.degree()) - first);
    }
}

TEST_CASE("recursive views")
{
    const MultiPoly f = parse_poly("3*t1^2*t2 + t2^2 - t1 + 5", 2);
    const auto bi = split_bivariate(f);
    REQUIRE(bi.degree() == 2);
    CHECK(to_string(bi.coeff(0)) == "-t + 5");
    CHECK(to_string(bi.coeff(1)) == "3*t^2");
    CHECK(to_string(bi.coeff(2)) == "1");
    const auto last = split_last_variable(f);
    CHECK(last.coeff(1).to_string() == "3*t1^2");
    CHECK(from_int_poly(to_int_poly(parse_poly("t1^3 - 2", 1))) == parse_poly("t1^3 - 2", 1));
    CHECK(content(int_poly({6, -4, 10})) == 2);
}
