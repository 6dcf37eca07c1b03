#ifndef TGF_BI_SERIES_HPP
#define TGF_BI_SERIES_HPP

#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include <Eigen/Core>

#include "tgf/errors.hpp"
#include "tgf/rat.hpp"

namespace tgf {

using Index = Eigen::Index;

/// Scalar hooks needed beyond the ring operations. The default routes to an
/// ADL-visible `exact_sqrt`; floating types use std::sqrt.
template <typename Scalar, typename = void>
struct ScalarTraits {
    static bool is_zero(const Scalar& s) { return s == Scalar(0); }
    static std::optional<Scalar> sqrt(const Scalar& s) { return exact_sqrt(s); }
    static bool is_positive(const Scalar& s) { return Scalar(0) < s; }
};

template <typename Scalar>
struct ScalarTraits<Scalar, std::enable_if_t<std::is_floating_point_v<Scalar>>> {
    static bool is_zero(const Scalar& s) { return s == Scalar(0); }
    static std::optional<Scalar> sqrt(const Scalar& s) {
        if (s < Scalar(0)) {
            return std::nullopt;
        }
        return std::sqrt(s);
    }
    static bool is_positive(const Scalar& s) { return s > Scalar(0); }
};

/// Ordered pair of variable names for a bivariate series.
struct VarPair {
    std::string first;
    std::string second;

    friend bool operator==(const VarPair&, const VarPair&) = default;
};

/// Dense truncated bivariate power series.
///
/// Stores the coefficients of v1^i v2^j for 0 <= i <= ord1, 0 <= j <= ord2 in
/// an Eigen matrix (row i, column j). Truncation is rectangular: products
/// drop every term outside the grid, so all ring operations commute with
/// truncation.
template <typename Scalar>
class BiSeries {
public:
    using Grid = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Row = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;
    using Index = Eigen::Index;

    BiSeries(VarPair vars, Index ord1, Index ord2) : vars_(std::move(vars)) {
        if (ord1 < 0 || ord2 < 0) {
            throw UsageError("truncation orders must be non-negative");
        }
        coeff_ = Grid::Constant(ord1 + 1, ord2 + 1, Scalar(0));
    }

    BiSeries(VarPair vars, Grid grid) : vars_(std::move(vars)), coeff_(std::move(grid)) {
        if (coeff_.rows() < 1 || coeff_.cols() < 1) {
            throw UsageError("coefficient grid must be non-empty");
        }
    }

    static BiSeries zero(const VarPair& vars, Index ord1, Index ord2) {
        return BiSeries(vars, ord1, ord2);
    }

    static BiSeries constant(const Scalar& c, const VarPair& vars, Index ord1, Index ord2) {
        return monomial(c, 0, 0, vars, ord1, ord2);
    }

    static BiSeries one(const VarPair& vars, Index ord1, Index ord2) {
        return constant(Scalar(1), vars, ord1, ord2);
    }

    /// c * v1^i * v2^j; silently zero when (i, j) lies outside the grid.
    static BiSeries monomial(const Scalar& c, Index i, Index j, const VarPair& vars, Index ord1,
                             Index ord2) {
        BiSeries s(vars, ord1, ord2);
        if (i <= ord1 && j <= ord2) {
            s.coeff_(i, j) = c;
        }
        return s;
    }

    static BiSeries var1(const VarPair& vars, Index ord1, Index ord2) {
        return monomial(Scalar(1), 1, 0, vars, ord1, ord2);
    }

    static BiSeries var2(const VarPair& vars, Index ord1, Index ord2) {
        return monomial(Scalar(1), 0, 1, vars, ord1, ord2);
    }

    [[nodiscard]] const VarPair& vars() const { return vars_; }
    [[nodiscard]] Index ord1() const { return coeff_.rows() - 1; }
    [[nodiscard]] Index ord2() const { return coeff_.cols() - 1; }
    [[nodiscard]] const Grid& grid() const { return coeff_; }

    /// Coefficient of v1^i v2^j.
    [[nodiscard]] const Scalar& coeff(Index i, Index j) const {
        if (i < 0 || j < 0 || i > ord1() || j > ord2()) {
            throw UsageError("coefficient index (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside grid (" + std::to_string(ord1()) + "," +
                             std::to_string(ord2()) + ")");
        }
        return coeff_(i, j);
    }

    /// The v2-polynomial multiplying v1^i.
    [[nodiscard]] Row row(Index i) const {
        if (i < 0 || i > ord1()) {
            throw UsageError("row index outside grid");
        }
        return coeff_.row(i);
    }

    [[nodiscard]] bool same_shape(const BiSeries& o) const {
        return vars_ == o.vars_ && coeff_.rows() == o.coeff_.rows() &&
               coeff_.cols() == o.coeff_.cols();
    }

    [[nodiscard]] bool is_zero() const {
        for (Index i = 0; i < coeff_.rows(); ++i) {
            for (Index j = 0; j < coeff_.cols(); ++j) {
                if (!ScalarTraits<Scalar>::is_zero(coeff_(i, j))) {
                    return false;
                }
            }
        }
        return true;
    }

    BiSeries& operator+=(const BiSeries& o) {
        require_same_shape(o);
        coeff_ += o.coeff_;
        return *this;
    }

    BiSeries& operator-=(const BiSeries& o) {
        require_same_shape(o);
        coeff_ -= o.coeff_;
        return *this;
    }

    BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator-(const BiSeries& a) { return BiSeries(a.vars_, Grid(-a.coeff_)); }

    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        a.require_same_shape(b);
        const Index n1 = a.coeff_.rows();
        const Index n2 = a.coeff_.cols();
        Grid out = Grid::Constant(n1, n2, Scalar(0));
        for (Index p = 0; p < n1; ++p) {
            for (Index q = 0; q < n2; ++q) {
                const Scalar& lhs = a.coeff_(p, q);
                if (ScalarTraits<Scalar>::is_zero(lhs)) {
                    continue;
                }
                for (Index i = 0; i + p < n1; ++i) {
                    for (Index j = 0; j + q < n2; ++j) {
                        const Scalar& rhs = b.coeff_(i, j);
                        if (!ScalarTraits<Scalar>::is_zero(rhs)) {
                            out(p + i, q + j) += lhs * rhs;
                        }
                    }
                }
            }
        }
        return BiSeries(a.vars_, std::move(out));
    }

    friend BiSeries operator*(const Scalar& c, const BiSeries& a) {
        return BiSeries(a.vars_, Grid(a.coeff_ * c));
    }

    friend BiSeries operator*(const BiSeries& a, const Scalar& c) { return c * a; }

    friend bool operator==(const BiSeries& a, const BiSeries& b) {
        return a.same_shape(b) && a.coeff_ == b.coeff_;
    }

    void require_same_shape(const BiSeries& o) const {
        if (!same_shape(o)) {
            throw UsageError("series shapes differ: (" + vars_.first + "," + vars_.second + ")[" +
                             std::to_string(ord1()) + "," + std::to_string(ord2()) + "] vs (" +
                             o.vars_.first + "," + o.vars_.second + ")[" +
                             std::to_string(o.ord1()) + "," + std::to_string(o.ord2()) + "]");
        }
    }

private:
    VarPair vars_;
    Grid coeff_;
};

/// Quotient q with q * b == a on the grid.
template <typename Scalar>
BiSeries<Scalar> div(const BiSeries<Scalar>& a, const BiSeries<Scalar>& b) {
    using Index = typename BiSeries<Scalar>::Index;
    a.require_same_shape(b);
    const auto& bg = b.grid();
    const Scalar& b00 = bg(0, 0);
    if (ScalarTraits<Scalar>::is_zero(b00)) {
        throw NonUnitDivisor();
    }
    const Index n1 = bg.rows();
    const Index n2 = bg.cols();
    typename BiSeries<Scalar>::Grid q = a.grid();
    for (Index i = 0; i < n1; ++i) {
        for (Index j = 0; j < n2; ++j) {
            Scalar acc = q(i, j);
            for (Index p = 0; p <= i; ++p) {
                for (Index r = 0; r <= j; ++r) {
                    if ((p == 0 && r == 0) || ScalarTraits<Scalar>::is_zero(bg(p, r))) {
                        continue;
                    }
                    acc -= bg(p, r) * q(i - p, j - r);
                }
            }
            q(i, j) = acc / b00;
        }
    }
    return BiSeries<Scalar>(a.vars(), std::move(q));
}

/// Principal square root: s * s == a on the grid and s(0,0) > 0.
///
/// Solved by the coefficient recurrence of s^2 = a, one total-degree layer at
/// a time: 2 s00 s_ij = a_ij - sum of the products not involving s_ij.
template <typename Scalar>
BiSeries<Scalar> sqrt(const BiSeries<Scalar>& a) {
    using Index = typename BiSeries<Scalar>::Index;
    const auto& ag = a.grid();
    if (ScalarTraits<Scalar>::is_zero(ag(0, 0))) {
        throw NonSquareConstant();
    }
    auto root = ScalarTraits<Scalar>::sqrt(ag(0, 0));
    if (!root || !ScalarTraits<Scalar>::is_positive(*root)) {
        throw NonSquareConstant();
    }
    const Index n1 = ag.rows();
    const Index n2 = ag.cols();
    typename BiSeries<Scalar>::Grid s = BiSeries<Scalar>::Grid::Constant(n1, n2, Scalar(0));
    s(0, 0) = *root;
    const Scalar two_s00 = Scalar(2) * *root;
    for (Index deg = 1; deg <= (n1 - 1) + (n2 - 1); ++deg) {
        for (Index i = std::max<Index>(0, deg - (n2 - 1)); i <= std::min(deg, n1 - 1); ++i) {
            const Index j = deg - i;
            Scalar acc = ag(i, j);
            for (Index p = 0; p <= i; ++p) {
                for (Index r = 0; r <= j; ++r) {
                    if ((p == 0 && r == 0) || (p == i && r == j)) {
                        continue;
                    }
                    const Scalar& lhs = s(p, r);
                    if (!ScalarTraits<Scalar>::is_zero(lhs)) {
                        acc -= lhs * s(i - p, j - r);
                    }
                }
            }
            s(i, j) = acc / two_s00;
        }
    }
    return BiSeries<Scalar>(a.vars(), std::move(s));
}

/// Multiplies by v1^k, dropping what falls off the grid.
template <typename Scalar>
BiSeries<Scalar> shift_var1(const BiSeries<Scalar>& a, Eigen::Index k) {
    if (k < 0) {
        throw UsageError("negative shift");
    }
    auto out = BiSeries<Scalar>::zero(a.vars(), a.ord1(), a.ord2());
    const Eigen::Index rows = a.ord1() + 1 - k;
    if (rows <= 0) {
        return out;
    }
    typename BiSeries<Scalar>::Grid g = out.grid();
    g.bottomRows(rows) = a.grid().topRows(rows);
    return BiSeries<Scalar>(a.vars(), std::move(g));
}

template <typename Scalar>
BiSeries<Scalar> truncate(const BiSeries<Scalar>& a, Eigen::Index ord1, Eigen::Index ord2) {
    if (ord1 < 0 || ord2 < 0 || ord1 > a.ord1() || ord2 > a.ord2()) {
        throw UsageError("truncation must shrink the grid");
    }
    return BiSeries<Scalar>(a.vars(), a.grid().topLeftCorner(ord1 + 1, ord2 + 1));
}

/// Same coefficients under different variable names.
template <typename Scalar>
BiSeries<Scalar> rename(const BiSeries<Scalar>& a, const VarPair& vars) {
    return BiSeries<Scalar>(vars, a.grid());
}

template <typename Scalar>
BiSeries<Scalar> pow(const BiSeries<Scalar>& a, unsigned n) {
    auto result = BiSeries<Scalar>::one(a.vars(), a.ord1(), a.ord2());
    auto base = a;
    while (n != 0) {
        if ((n & 1U) != 0) {
            result *= base;
        }
        n >>= 1U;
        if (n != 0) {
            base *= base;
        }
    }
    return result;
}

/// Substitutes `inner` for the first variable of `a`.
///
/// The result lives on the grid of `inner`. `inner` must have zero constant
/// term and share the second variable with `a`; `a` must carry enough terms
/// for every retained output coefficient to be exact.
template <typename Scalar>
BiSeries<Scalar> compose_var1(const BiSeries<Scalar>& a, const BiSeries<Scalar>& inner) {
    using Index = Eigen::Index;
    if (inner.vars().second != a.vars().second) {
        throw UsageError("composition needs a shared second variable ('" + a.vars().second +
                         "' vs '" + inner.vars().second + "')");
    }
    if (!ScalarTraits<Scalar>::is_zero(inner.grid()(0, 0))) {
        throw CompositionError("substituted series has nonzero constant term");
    }
    const Index o1 = inner.ord1();
    const Index o2 = inner.ord2();
    // inner^i has valuation >= i in the first variable unless inner carries
    // pure second-variable terms; then only total degree is guaranteed.
    bool pure_second = false;
    for (Index j = 0; j <= o2; ++j) {
        pure_second = pure_second || !ScalarTraits<Scalar>::is_zero(inner.grid()(0, j));
    }
    const Index needed = pure_second ? o1 + o2 : o1;
    if (a.ord1() < needed || a.ord2() < o2) {
        throw UsageError("outer series order (" + std::to_string(a.ord1()) + "," +
                         std::to_string(a.ord2()) + ") too small for exact composition; need (" +
                         std::to_string(needed) + "," + std::to_string(o2) + ")");
    }
    const auto layer = [&](Index i) {
        auto s = BiSeries<Scalar>::zero(inner.vars(), o1, o2);
        typename BiSeries<Scalar>::Grid g = s.grid();
        g.row(0) = a.grid().row(i).head(o2 + 1);
        return BiSeries<Scalar>(inner.vars(), std::move(g));
    };
    auto acc = layer(needed);
    for (Index i = needed - 1; i >= 0; --i) {
        acc = acc * inner + layer(i);
    }
    return acc;
}

/// First grid position, in row-major order, where two same-shaped series differ.
template <typename Scalar>
std::optional<std::pair<Eigen::Index, Eigen::Index>> first_difference(const BiSeries<Scalar>& a,
                                                                      const BiSeries<Scalar>& b) {
    a.require_same_shape(b);
    for (Eigen::Index i = 0; i <= a.ord1(); ++i) {
        for (Eigen::Index j = 0; j <= a.ord2(); ++j) {
            if (!(a.grid()(i, j) == b.grid()(i, j))) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

using RatSeries = BiSeries<Rat>;

}  // namespace tgf

#endif  // TGF_BI_SERIES_HPP
