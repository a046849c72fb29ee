#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "padicres/limits/limits.hpp"
#include "padicres/padic/padic.hpp"
#include "padicres/poly/multi_poly.hpp"

namespace padicres::link {

using limits::LimitEstimate;
using limits::LimitOptions;
using padic::PadicApprox;
using poly::MultiPoly;

/// Sorted 1-based component indices of a sublink.
using Subset = std::vector<unsigned>;

std::string subset_name(const Subset& s);

/// A d-component link given by the Alexander polynomials of all its nonempty
/// sublinks; the sublink polynomial for S uses variables t1..t|S| in
/// ascending component order.
struct LinkSpec {
    std::string name;
    std::size_t components = 0;
    std::string ambient = "S3";
    std::map<Subset, MultiPoly> sublinks;

    const MultiPoly& alexander(const Subset& s) const;
    /// Every nonempty subset of {1..d}, ordered by size then lexicographically.
    std::vector<Subset> nonempty_subsets() const;
};

/// Parses and validates a link document:
///   { "name": str, "components": d, "ambient": "S3",
///     "sublinks": [ { "indices": [1-based, sorted], "alexander": "<poly>" } ] }
/// Throws ParseError naming the JSON path on any violation.
LinkSpec load_link_spec(std::string_view json_text);
LinkSpec load_link_spec_file(const std::string& path);

/// Branched cover along Gamma = sum p^{n_i} Z_p.
struct CoveringSpec {
    Prime p;
    std::vector<unsigned long> levels;
};

struct H1Result {
    /// |H_1|, 0 when H_1 is infinite.
    Integer order;
    Integer nonp_part;
    unsigned long p_exponent = 0;

    bool rational_homology_sphere() const { return order != 0; }
};

/// |H_1(M_Gamma)| as the product over nonempty sublinks S of
/// |r'_{(n_i)_{i in S}}(Delta_S)|. Checks that the |G| / prod |1 - xi(m)|
/// prefactor is 1 and that every factor has the predicted sign; either
/// failure throws OracleMismatch.
H1Result h1_order(const LinkSpec& link, const CoveringSpec& cov, unsigned threads = 1);

/// Product over sublinks of the non-p limits of |r'(Delta_S)|; certified
/// digits are the minimum over the factors.
LimitEstimate h1_nonp_limit(const LinkSpec& link, Prime p, unsigned long K,
                            const LimitOptions& options = limits::default_limit_options());

/// Brute-force character sum: |G| / prod_{G^(1)} |1 - xi(m_i)| *
/// prod_xi |Delta_{L_xi}(xi(m))| in MPFR, rounded after checking the error
/// is below 1/4 (one retry at doubled precision, then PrecisionError).
/// Requires every n_i >= 1 and |G| <= 4096.
H1Result character_oracle(const LinkSpec& link, const CoveringSpec& cov);

/// Alexander polynomial of the k-twisted Whitehead link:
/// m(1 + t1 t2 - t1 - t2) for k = 2m, 1 + m - m(t1 + t2) + (1 + m) t1 t2 for k = 2m + 1.
MultiPoly whitehead_delta(long k);
LinkSpec whitehead_link(long k);

struct WhiteheadClosedForm {
    PadicApprox value;
    /// Digits the truncated product delivers (measured on the levels after
    /// the truncation); unlimited for the exact closed forms.
    unsigned long achieved_digits;
    /// Per-level normalized norms U_j (p = 2 only), j = 2..L_max + 2.
    std::vector<PadicApprox> level_factors;
};

/// Closed-form non-p limit for the k-twisted Whitehead link:
///   k = 2m:             u / omega_p(u), u = m|m|_p
///   k odd, p odd:       omega_p(2) / 2
///   k = 2m + 1, p = 2:  (-1)^m (omega_2(m+1) - omega_2(m)) / k * prod_{j=2}^{L_max} U_j
/// with U_j the non-2 part of the norm of log((m z + m + 1)/(m z + m + z)) from
/// Q_2(zeta_{2^j}). Throws DegenerateInput for k = 1 at p = 2 and
/// PrecisionError when fewer than K digits are achieved.
WhiteheadClosedForm whitehead_closed_form(long k, Prime p, unsigned long K, unsigned long truncation_level = 5);

struct TwoPartRow {
    unsigned long n;
    unsigned long exact;
    Rational nu_sum;
    Rational predicted;
    bool holds;
};

/// For k = 2m + 1 (m >= 1): v_2 |H_1| at levels (n, n) against
/// n 2^n - 2n + 1 + sum of nu_zeta over zeta^{2^n} = 1, zeta != +-1.
std::vector<TwoPartRow> two_part_exponent_check(long k, unsigned long n_max);

/// prod_{i=0}^{n-1} (m^{2^i} + (m+1)^{2^i}), exactly.
Integer whitehead_g_product(const Integer& m, unsigned long n);

} // namespace padicres::link
