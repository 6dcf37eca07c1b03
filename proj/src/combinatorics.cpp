#include "tgf/combinatorics.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "tgf/errors.hpp"

namespace tgf {

BigInt binomial(long n, long k) {
    if (n < 0) {
        throw UsageError("binomial: negative top index " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    // After step i the accumulator is C(n - k + i, i), so each division is exact.
    BigInt acc = 1;
    for (long i = 1; i <= k; ++i) {
        acc *= n - k + i;
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return acc;
}

BigInt t_closed(long n, long k) {
    if (n < 0 || k < 0) {
        throw UsageError("t_closed: negative index");
    }
    if (n == 0) {
        return k == 0 ? 1 : 0;
    }
    BigInt product = binomial(n, k) * binomial(2 * n, n - 1 - k);
    if (!mpz_divisible_ui_p(product.get_mpz_t(), static_cast<unsigned long>(n))) {
        throw InternalError("t_closed: C(n,k) C(2n,n-1-k) not divisible by n at n=" +
                            std::to_string(n) + ", k=" + std::to_string(k));
    }
    mpz_divexact_ui(product.get_mpz_t(), product.get_mpz_t(), static_cast<unsigned long>(n));
    return product;
}

BigInt four_binomial(long n, long k) {
    if (n < 1 || k < 0) {
        throw UsageError("four_binomial: requires n >= 1, k >= 0");
    }
    const BigInt head = binomial(n - 1, k);
    const BigInt tail = binomial(2 * n, n - k - 1);
    return head * binomial(2 * n + 1, n - k) - 2 * head * tail -
           2 * binomial(n - 1, k - 1) * tail;
}

BigInt row_sum_closed(long n) {
    if (n < 1) {
        throw UsageError("row_sum_closed: requires n >= 1");
    }
    BigInt c = binomial(3 * n, n - 1);
    if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(n))) {
        throw InternalError("row_sum_closed: inexact division at n=" + std::to_string(n));
    }
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n));
    return c;
}

Rat lagrange_tpow_coeff(long n, long k, long l) {
    if (n < 1 || l < 1 || k < 0) {
        throw UsageError("lagrange_tpow_coeff: requires n >= 1, l >= 1, k >= 0");
    }
    // t^l = x^l + ..., so nothing below x^l; also keeps 2n-l-1 non-negative.
    if (n < l) {
        return 0;
    }
    return Rat(BigInt(l) * binomial(n, k) * binomial(2 * n - l - 1, n - l - k), BigInt(n));
}

Triangle::Triangle(long nmax) {
    if (nmax < 0) {
        throw UsageError("triangle: nmax must be non-negative");
    }
    rows_.reserve(static_cast<std::size_t>(nmax) + 1);
    for (long n = 0; n <= nmax; ++n) {
        rows_.emplace_back(static_cast<std::size_t>(row_length(n)), BigInt(0));
    }
}

const BigInt& Triangle::at(long n, long k) const {
    if (n < 0 || n > nmax() || k < 0 || k >= row_length(n)) {
        throw UsageError("triangle index (" + std::to_string(n) + "," + std::to_string(k) +
                         ") out of range");
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt& Triangle::at(long n, long k) {
    return const_cast<BigInt&>(std::as_const(*this).at(n, k));
}

BigInt Triangle::value(long n, long k) const {
    if (k < 0 || k >= row_length(n)) {
        return 0;
    }
    return at(n, k);
}

Triangle triangle_closed(long nmax) {
    Triangle tri(nmax);
    for (long n = 0; n <= nmax; ++n) {
        for (long k = 0; k < Triangle::row_length(n); ++k) {
            tri.at(n, k) = t_closed(n, k);
        }
    }
    return tri;
}

}  // namespace tgf
