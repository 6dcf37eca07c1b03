#ifndef TGF_VERIFY_HPP
#define TGF_VERIFY_HPP

#include <string>
#include <vector>

#include "tgf/gf.hpp"

namespace tgf {

/// Xi re-expanded in tau: tau^n coefficient = (sum_j num[j] U^j) / den.
struct XiGolden {
    long n;
    std::vector<long> numerators;
    long denominator;
};

/// The four leading tau-coefficients of Xi.
const std::vector<XiGolden>& xi_golden_table();

/// Xi in tau against the golden table, on the part of the table inside the grid.
CheckReport xi_golden_check(const GfContext& ctx);

/// solve_g coefficients against t_closed for all n <= nx.
CheckReport solve_g_closed_form_check(Index nx, Index nu);

/// extract_r1_series(n) against t_closed for 1 <= n <= nx.
CheckReport extract_r1_check(Index nx, Index nu);

/// Powers t^l of revert_t against lagrange_tpow_coeff, for 1 <= l <= max_power
/// and n <= nx (l = 1) or n <= min(nx, power_order) (l >= 2).
CheckReport lagrange_check(Index nx, Index nu, long max_power = 4, Index power_order = 12);

/// four_binomial(n, k) == t_closed(n, k) for 1 <= n <= nmax, 0 <= k <= n.
CheckReport four_binomial_check(long nmax);

/// sum_k t_closed(n, k) == row_sum_closed(n) == C(3n, n) / (2n + 1) for 1 <= n <= nmax.
CheckReport row_sum_check(long nmax);

/// triangle_oracle(nmax) == triangle_closed(nmax).
CheckReport oracle_check(long nmax, long bound);

struct VerifyOptions {
    Index order_t = 24;
    Index order_u = 12;
    Index order_x = 20;
    Index order_xu = 10;
    long oracle_nmax = 8;
    long oracle_bound = 10;
    long binomial_nmax = 200;
    /// Name of a check whose input gets perturbed (test hook); empty for none.
    std::string inject;
};

/// Every check, in a fixed order.
std::vector<CheckReport> run_all_checks(const VerifyOptions& opts);

/// Names accepted by VerifyOptions::inject.
const std::vector<std::string>& check_names();

}  // namespace tgf

#endif  // TGF_VERIFY_HPP
