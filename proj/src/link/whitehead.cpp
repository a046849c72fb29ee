#include <algorithm>

#include "padicres/error.hpp"
#include "padicres/link/link.hpp"
#include "padicres/padic/cyclo.hpp"
#include "padicres/poly/cyclotomic.hpp"

namespace padicres::link {

using padic::CycloPadic;
using padic::nonp_part;
using padic::vp;

MultiPoly whitehead_delta(long k)
{
    if (k < 1)
        throw DomainError("twisted Whitehead links need k >= 1, got " + std::to_string(k));
    const Integer m = k / 2;
    MultiPoly f(2);
    if (k % 2 == 0) {
        f.add_term({0, 0}, m);
        f.add_term({1, 1}, m);
        f.add_term({1, 0}, -m);
        f.add_term({0, 1}, -m);
    } else {
        f.add_term({0, 0}, 1 + m);
        f.add_term({1, 0}, -m);
        f.add_term({0, 1}, -m);
        f.add_term({1, 1}, 1 + m);
    }
    return f;
}

LinkSpec whitehead_link(long k)
{
    LinkSpec spec;
    spec.name = "whitehead-" + std::to_string(k);
    spec.components = 2;
    MultiPoly one(1);
    one.add_term({0}, 1);
    spec.sublinks.emplace(Subset{1}, one);
    spec.sublinks.emplace(Subset{2}, one);
    spec.sublinks.emplace(Subset{1, 2}, whitehead_delta(k));
    return spec;
}

namespace {

// Non-2 part of Norm(log x_zeta) over the primitive 2^j-th roots, with its
// sign, to the digits the log's precision supports.
PadicApprox level_factor(const Integer& m, unsigned long j, unsigned long working)
{
    const Prime two(2);
    const padic::ScaledLog l = padic::cyclo_log(padic::whitehead_argument(m, j, working));
    const unsigned long v = l.value.pi_valuation();
    const unsigned long phi = poly::phi_prime_power(two, j);
    const unsigned long lost = (v + phi - 1) / phi;
    if (lost >= l.value.precision())
        throw PrecisionError("level " + std::to_string(j) + " log has no digits left");
    const Integer norm = l.value.norm_of_representative();
    return PadicApprox::from_integer(nonp_part(norm, two), two, l.value.precision() - lost);
}

} // namespace

WhiteheadClosedForm whitehead_closed_form(long k, Prime p, unsigned long K, unsigned long truncation_level)
{
    if (K == 0)
        throw DomainError("closed forms need at least one digit");
    whitehead_delta(k);
    const Integer m = k / 2;

    if (k % 2 == 0) {
        const Integer u = nonp_part(m, p);
        const PadicApprox uu = PadicApprox::from_integer(u, p, K);
        return {uu * padic::teichmuller(u, p, K).inverse(), limits::unlimited_digits, {}};
    }
    if (!p.is_two()) {
        const PadicApprox half = PadicApprox::from_integer(2, p, K).inverse();
        return {padic::teichmuller(2, p, K) * half, limits::unlimited_digits, {}};
    }
    if (m == 0)
        throw DegenerateInput("k = 1 at p = 2: the log arguments are roots of unity and H_1 is infinite");
    if (truncation_level < 2)
        throw DomainError("the truncation level must be at least 2");

    // The (-1)^m (omega_2(m+1) - omega_2(m)) factor is +1 for every m >= 1.
    const unsigned long working = K + 40;
    WhiteheadClosedForm out{PadicApprox::from_integer(k, p, working).inverse(), limits::unlimited_digits, {}};
    for (unsigned long j = 2; j <= truncation_level + 2; ++j) {
        const PadicApprox u = level_factor(m, j, working);
        out.level_factors.push_back(u);
        out.achieved_digits = std::min(out.achieved_digits, u.precision());
        if (j <= truncation_level) {
            out.value = out.value * u;
        } else {
            // Tail factors are 1 to as many digits as the truncation delivers.
            const PadicApprox d = u - PadicApprox::from_integer(1, p, u.precision());
            if (!d.is_zero())
                out.achieved_digits = std::min(out.achieved_digits, d.valuation());
        }
    }
    if (out.achieved_digits < K)
        throw PrecisionError("truncation at level " + std::to_string(truncation_level) + " gives "
                             + std::to_string(out.achieved_digits) + " digits, " + std::to_string(K) + " requested");
    out.value = out.value.truncated(K);
    return out;
}

std::vector<TwoPartRow> two_part_exponent_check(long k, unsigned long n_max)
{
    if (k < 3 || k % 2 == 0)
        throw DomainError("the 2-part exponent formula needs k = 2m + 1 with m >= 1");
    if (n_max == 0 || n_max > 4)
        throw DomainError("the 2-part exponent check supports 1 <= n <= 4");
    const Prime two(2);
    const Integer m = k / 2;
    const LinkSpec link = whitehead_link(k);
    std::vector<TwoPartRow> rows;
    Rational nu_sum = 0;
    for (unsigned long n = 1; n <= n_max; ++n) {
        if (n >= 2)
            nu_sum += padic::nu_zeta(m, n) * Rational(poly::phi_prime_power(two, n));
        const H1Result h = h1_order(link, {two, {n, n}});
        if (h.order == 0)
            throw DegenerateInput("H_1 is infinite at levels (" + std::to_string(n) + ", " + std::to_string(n) + ")");
        TwoPartRow row{n, h.p_exponent, nu_sum, 0, false};
        const long base = static_cast<long>(n << n) - 2 * static_cast<long>(n) + 1;
        row.predicted = Rational(base) + nu_sum;
        row.holds = row.predicted == Rational(static_cast<long>(row.exact));
        rows.push_back(row);
    }
    return rows;
}

Integer whitehead_g_product(const Integer& m, unsigned long n)
{
    Integer prod = 1;
    Integer a = m;
    Integer b = m + 1;
    for (unsigned long i = 0; i < n; ++i) {
        prod *= a + b;
        a *= a;
        b *= b;
    }
    return prod;
}

} // namespace padicres::link
