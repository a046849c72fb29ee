#pragma once

#include <cstddef>
#include <vector>

#include "padicres/poly/integer.hpp"
#include "padicres/poly/multi_poly.hpp"
#include "padicres/poly/uni_poly.hpp"

namespace padicres::resultant {

/// Res(f, g) over the integers by the subresultant PRS. Throws DomainError on
/// a zero input.
Integer resultant_prs(const poly::IntPoly& f, const poly::IntPoly& g);

/// Which cyclotomic factors Phi_{p^j}(t_i), 0 <= j <= n_i, take part in each
/// variable's elimination. `full` uses all of t^{p^n} - 1; `rprime` drops
/// j = 0, i.e. eliminates against (t^{p^n} - 1)/(t - 1).
class CyclicMask {
public:
    enum class Kind { full, rprime, custom };

    static CyclicMask full() { return CyclicMask(Kind::full, {}); }
    static CyclicMask rprime() { return CyclicMask(Kind::rprime, {}); }
    /// Explicit index sets, one per variable.
    static CyclicMask custom(std::vector<std::vector<unsigned long>> indices)
    {
        return CyclicMask(Kind::custom, std::move(indices));
    }

    Kind kind() const noexcept { return kind_; }

    /// Sorted, de-duplicated index sets for the given levels. Throws
    /// DomainError if a custom index exceeds its level.
    std::vector<std::vector<unsigned long>> indices(const std::vector<unsigned long>& levels) const;

private:
    CyclicMask(Kind kind, std::vector<std::vector<unsigned long>> custom) : kind_(kind), custom_(std::move(custom)) {}

    Kind kind_;
    std::vector<std::vector<unsigned long>> custom_;
};

struct CyclicResultantRequest {
    poly::MultiPoly f;
    Prime p;
    /// n_1..n_d; length must equal f.num_vars().
    std::vector<unsigned long> levels;
    CyclicMask mask = CyclicMask::full();
};

struct CyclicOptions {
    /// Worker threads for independent cyclotomic factors; 1 runs inline.
    unsigned threads = 1;
};

/// Masked iterated cyclic resultant
///   prod_{j in mask} Res(Phi_{p^{j_1}}(t_1), ... Res(Phi_{p^{j_d}}(t_d), f)),
/// eliminating t_d first. Full mask gives r_{n_1..n_d}(f), rprime gives r'.
/// Returns 0 when any factor vanishes.
Integer cyclic_resultant(const CyclicResultantRequest& req, const CyclicOptions& options = {});

/// Same value by literal iterated Sylvester determinants against the
/// divisor prod_{j in mask} Phi_{p^j}(t_i) (t^{p^n} - 1 for the full mask).
/// Throws BudgetError when prod p^{n_i} * max(1, total degree) exceeds budget.
inline constexpr unsigned long default_baseline_budget = 256;
Integer cyclic_resultant_baseline(const CyclicResultantRequest& req,
                                  unsigned long budget = default_baseline_budget);

/// Same value as a floating product of f over the masked root-of-unity tuples
/// in MPFR, rounded to the nearest integer. Precision adapts to the size of
/// the answer; throws PrecisionError if the rounding error stays >= 1/4 after
/// one retry at doubled precision.
Integer root_product_oracle(const CyclicResultantRequest& req);

/// Checks levels against f and the mask; throws DomainError.
void validate(const CyclicResultantRequest& req);

} // namespace padicres::resultant
