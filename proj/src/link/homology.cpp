#include <algorithm>
#include <cmath>

#include "padicres/error.hpp"
#include "padicres/link/link.hpp"
#include "padicres/padic/padic.hpp"
#include "padicres/poly/parse.hpp"
#include "padicres/resultant/cyclic.hpp"
#include "padicres/resultant/mpfr_complex.hpp"

namespace padicres::link {

using resultant::CyclicMask;
using resultant::cyclic_resultant;

namespace {

H1Result split(const Integer& order, Prime p)
{
    H1Result r;
    r.order = order;
    if (order != 0) {
        r.p_exponent = padic::vp(order, p);
        r.nonp_part = padic::nonp_part(order, p);
    }
    return r;
}

std::vector<unsigned long> restrict_levels(const Subset& s, const std::vector<unsigned long>& levels)
{
    std::vector<unsigned long> out;
    for (unsigned i : s)
        out.push_back(levels[i - 1]);
    return out;
}

void check_covering(const LinkSpec& link, const CoveringSpec& cov)
{
    if (cov.levels.size() != link.components)
        throw DomainError("covering has " + std::to_string(cov.levels.size()) + " levels for a "
                          + std::to_string(link.components) + "-component link");
    for (unsigned long n : cov.levels)
        if (n == 0)
            throw DomainError("covering levels must be positive");
}

} // namespace

H1Result h1_order(const LinkSpec& link, const CoveringSpec& cov, unsigned threads)
{
    check_covering(link, cov);

    // The meridian prefactor: prod over characters seeing one component of
    // |1 - xi(m_i)| is prod_i Res((t^q - 1)/(t - 1), 1 - t) and must equal |G|.
    Integer group = 1;
    Integer meridians = 1;
    const MultiPoly one_minus_t = poly::parse_poly("1 - t1", 1);
    for (unsigned long n : cov.levels) {
        group *= prime_power(cov.p, n);
        meridians *= cyclic_resultant({one_minus_t, cov.p, {n}, CyclicMask::rprime()});
    }
    if (meridians != group)
        throw OracleMismatch("meridian prefactor " + meridians.get_str() + " differs from |G| = " + group.get_str());

    Integer order = 1;
    for (const auto& s : link.nonempty_subsets()) {
        const MultiPoly& delta = link.alexander(s);
        const auto levels = restrict_levels(s, cov.levels);
        const Integer v = cyclic_resultant({delta, cov.p, levels, CyclicMask::rprime()}, {threads});
        if (v == 0)
            return split(0, cov.p);
        if (limits::sign_of(delta, cov.p, levels, CyclicMask::Kind::rprime) != sign(v))
            throw OracleMismatch("sublink " + subset_name(s) + " resultant has an unexpected sign");
        order *= abs(v);
    }
    return split(order, cov.p);
}

LimitEstimate h1_nonp_limit(const LinkSpec& link, Prime p, unsigned long K, const LimitOptions& options)
{
    LimitEstimate total{PadicApprox::from_integer(1, p, K), K, {}, true, false};
    for (const auto& s : link.nonempty_subsets()) {
        const MultiPoly& delta = link.alexander(s);
        LimitEstimate e = limits::limit_estimate(delta, p, K, CyclicMask::Kind::rprime, limits::Sequence::nonp, options);
        // |r'| carries the sign of Delta_S(-1, ..., -1) at p = 2 and is positive otherwise.
        const int sgn = limits::sign_of(delta, p, std::vector<unsigned long>(s.size(), 1), CyclicMask::Kind::rprime);
        total.value = total.value * (sgn < 0 ? -e.value : e.value);
        total.certified_digits = std::min(total.certified_digits, e.certified_digits);
        total.stabilized = total.stabilized && e.stabilized;
        if (e.levels_used.size() > total.levels_used.size())
            total.levels_used = e.levels_used;
    }
    total.value = total.value.truncated(total.certified_digits);
    return total;
}

namespace {

using resultant::Complex;
using resultant::Real;

// Returns false if some Alexander value is numerically zero (infinite H_1).
bool character_product(const LinkSpec& link, const CoveringSpec& cov, mpfr_prec_t prec, Real& out)
{
    const std::size_t d = link.components;
    const unsigned long top = *std::max_element(cov.levels.begin(), cov.levels.end());
    const unsigned long big = prime_power(cov.p, top).get_ui();
    std::vector<Complex> table;
    table.reserve(big);
    for (unsigned long a = 0; a < big; ++a)
        table.push_back(resultant::root_of_unity(a, big, prec));

    std::vector<unsigned long> order(d), scale(d);
    Integer group = 1;
    for (std::size_t i = 0; i < d; ++i) {
        order[i] = prime_power(cov.p, cov.levels[i]).get_ui();
        scale[i] = big / order[i];
        group *= order[i];
    }

    Real numerator(prec), denominator(prec), mag(prec), tmp(prec);
    mpfr_set_z(numerator.get(), group.get_mpz_t(), MPFR_RNDN);
    mpfr_set_ui(denominator.get(), 1, MPFR_RNDN);
    Complex value(prec);
    Real tiny(prec);
    mpfr_set_ui_2exp(tiny.get(), 1, -static_cast<mpfr_exp_t>(prec / 2), MPFR_RNDN);

    std::vector<unsigned long> a(d, 0);
    for (;;) {
        Subset s;
        for (std::size_t i = 0; i < d; ++i)
            if (a[i] != 0)
                s.push_back(static_cast<unsigned>(i + 1));
        if (!s.empty()) {
            mpfr_set_zero(value.re.get(), 1);
            mpfr_set_zero(value.im.get(), 1);
            for (const auto& [e, c] : link.alexander(s).terms()) {
                unsigned long idx = 0;
                for (std::size_t k = 0; k < s.size(); ++k) {
                    const std::size_t i = s[k] - 1;
                    idx = (idx + (e[k] % big) * ((a[i] * scale[i]) % big)) % big;
                }
                mpfr_mul_z(tmp.get(), table[idx].re.get(), c.get_mpz_t(), MPFR_RNDN);
                mpfr_add(value.re.get(), value.re.get(), tmp.get(), MPFR_RNDN);
                mpfr_mul_z(tmp.get(), table[idx].im.get(), c.get_mpz_t(), MPFR_RNDN);
                mpfr_add(value.im.get(), value.im.get(), tmp.get(), MPFR_RNDN);
            }
            mpfr_hypot(mag.get(), value.re.get(), value.im.get(), MPFR_RNDN);
            if (mpfr_cmp(mag.get(), tiny.get()) < 0)
                return false;
            mpfr_mul(numerator.get(), numerator.get(), mag.get(), MPFR_RNDN);
            if (s.size() == 1) {
                const Complex& z = table[(a[s[0] - 1] * scale[s[0] - 1]) % big];
                mpfr_ui_sub(tmp.get(), 1, z.re.get(), MPFR_RNDN);
                mpfr_hypot(mag.get(), tmp.get(), z.im.get(), MPFR_RNDN);
                mpfr_mul(denominator.get(), denominator.get(), mag.get(), MPFR_RNDN);
            }
        }
        std::size_t i = 0;
        while (i < d && ++a[i] == order[i])
            a[i++] = 0;
        if (i == d)
            break;
    }
    mpfr_div(out.get(), numerator.get(), denominator.get(), MPFR_RNDN);
    return true;
}

} // namespace

H1Result character_oracle(const LinkSpec& link, const CoveringSpec& cov)
{
    check_covering(link, cov);
    unsigned long total_level = 0;
    for (unsigned long n : cov.levels)
        total_level += n;
    const Integer group = prime_power(cov.p, total_level);
    if (group > 4096)
        throw BudgetError("character oracle limited to |G| <= 4096, got " + group.get_str());

    // Each |Delta(xi)| is at most the coefficient l1-norm.
    double bits = 64 + 2 * std::log2(group.get_d() + 1);
    for (const auto& s : link.nonempty_subsets()) {
        Integer l1 = 0;
        for (const auto& [e, c] : link.alexander(s).terms())
            l1 += abs(c);
        bits += group.get_d() * static_cast<double>(mpz_sizeinbase(l1.get_mpz_t(), 2));
    }
    mpfr_prec_t prec = std::max<mpfr_prec_t>(80, static_cast<mpfr_prec_t>(bits));
    for (int attempt = 0; attempt < 2; ++attempt, prec *= 2) {
        Real x(prec);
        if (!character_product(link, cov, prec, x))
            return split(0, cov.p);
        double error = 1;
        const Integer z = resultant::round_to_integer(x, &error);
        if (error < 0.25)
            return split(z, cov.p);
    }
    throw PrecisionError("character oracle could not round its result reliably");
}

} // namespace padicres::link
