#ifndef TGF_COMBINATORICS_HPP
#define TGF_COMBINATORICS_HPP

#include <vector>

#include "tgf/errors.hpp"
#include "tgf/rat.hpp"

namespace tgf {

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(long n, long k);

/// Number of ternary trees with n nodes and k middle edges:
/// T(0,0) = 1, and C(n,k) C(2n, n-1-k) / n for n >= 1.
BigInt t_closed(long n, long k);

/// The three-term binomial form of [x^n u^k] r1 before simplification.
BigInt four_binomial(long n, long k);

/// Number of ternary trees with n >= 1 nodes, C(3n, n-1) / n.
BigInt row_sum_closed(long n);

/// [x^n u^k] t^l where t = x (1 - t + t u) / (1 - t)^2, for n, l >= 1.
Rat lagrange_tpow_coeff(long n, long k, long l);

/// Table T(n, k) for 0 <= n <= nmax; row 0 holds one entry, row n >= 1 holds
/// the n entries k = 0..n-1.
class Triangle {
public:
    explicit Triangle(long nmax);

    [[nodiscard]] long nmax() const { return static_cast<long>(rows_.size()) - 1; }
    [[nodiscard]] static long row_length(long n) { return n == 0 ? 1 : n; }

    /// Checked access inside the stored range.
    [[nodiscard]] const BigInt& at(long n, long k) const;
    BigInt& at(long n, long k);

    /// T(n, k), zero outside the stored range of a row that exists.
    [[nodiscard]] BigInt value(long n, long k) const;

    [[nodiscard]] const std::vector<BigInt>& row(long n) const { return rows_.at(n); }

    friend bool operator==(const Triangle&, const Triangle&) = default;

private:
    std::vector<std::vector<BigInt>> rows_;
};

Triangle triangle_closed(long nmax);

}  // namespace tgf

#endif  // TGF_COMBINATORICS_HPP
