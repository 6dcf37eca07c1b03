#ifndef TGF_GF_HPP
#define TGF_GF_HPP

#include <optional>
#include <string>
#include <utility>

#include "tgf/bi_series.hpp"
#include "tgf/half_series.hpp"

namespace tgf {

// Variable pairs in use. (t, U) carries u = 1 + U so that u is a unit.
inline const VarPair kXU{"x", "u"};
inline const VarPair kTu{"t", "u"};
inline const VarPair kTU{"t", "U"};
inline const VarPair kTauU{"tau", "U"};

/// Location and values of the first coefficient where a check failed.
struct Mismatch {
    Index i = 0;
    Index j = 0;
    Rat lhs;
    Rat rhs;
};

struct CheckReport {
    std::string name;
    std::string grid;  // e.g. "(24,12)"
    bool passed = false;
    std::optional<Mismatch> first_offending;
    std::string detail;
};

/// Exact grid-wise comparison of two series.
CheckReport compare_series(std::string name, const RatSeries& lhs, const RatSeries& rhs);

std::string grid_label(Index a, Index b);

/// The actors of the (t, U) picture at truncation orders (nt, nu):
/// x = t(1-t)^2 / (1 + U t), r1 = 1/(1-t), the radical data and both factors.
class GfContext {
public:
    GfContext(Index nt, Index nu);

    [[nodiscard]] Index order_t() const { return nt_; }
    [[nodiscard]] Index order_u() const { return nu_; }
    [[nodiscard]] std::string grid() const { return grid_label(nt_, nu_); }

    [[nodiscard]] RatSeries zero() const { return RatSeries::zero(kTU, nt_, nu_); }
    [[nodiscard]] RatSeries one() const { return RatSeries::one(kTU, nt_, nu_); }
    [[nodiscard]] RatSeries t() const { return RatSeries::var1(kTU, nt_, nu_); }
    /// u = 1 + U.
    [[nodiscard]] RatSeries u() const { return one() + RatSeries::var2(kTU, nt_, nu_); }

    [[nodiscard]] const RatSeries& x() const { return x_; }
    /// Phi(t) = (1 - t + t u) / (1 - t)^2.
    [[nodiscard]] const RatSeries& phi() const { return phi_; }
    [[nodiscard]] const RatSeries& r1() const { return r1_; }
    /// Radicand t(1-t) + u(2-t)^2 = 4 - 3t + U(2-t)^2.
    [[nodiscard]] const RatSeries& radicand() const { return radicand_; }
    [[nodiscard]] const RatSeries& s_squared() const { return s_squared_; }
    /// Odd cofactor: 1/r3 = t/2 + sqrt(t) c.
    [[nodiscard]] const RatSeries& c() const { return c_; }
    [[nodiscard]] const RatSeries& xi() const { return xi_; }
    /// t / (2 sqrt(u x)) = sqrt(t) d.
    [[nodiscard]] const RatSeries& d() const { return d_; }
    [[nodiscard]] const RatHalfSeries& inv_r2() const { return inv_r2_; }
    [[nodiscard]] const RatHalfSeries& inv_r3() const { return inv_r3_; }
    [[nodiscard]] const RatHalfSeries& factor_minus() const { return f_minus_; }
    [[nodiscard]] const RatHalfSeries& factor_plus() const { return f_plus_; }

private:
    Index nt_;
    Index nu_;
    RatSeries x_;
    RatSeries phi_;
    RatSeries r1_;
    RatSeries radicand_;
    RatSeries s_squared_;
    RatSeries c_;
    RatSeries xi_;
    RatSeries d_;
    RatHalfSeries inv_r2_;
    RatHalfSeries inv_r3_;
    RatHalfSeries f_minus_;
    RatHalfSeries f_plus_;
};

/// Unique solution of G = 1 + x G^2 (1 - u + u G) in (x, u).
RatSeries solve_g(Index nx, Index nu);

/// x = t(1-t)^2 / (1 - t + u t) with u = 1 + U, in (t, U).
RatSeries subst_x(const GfContext& ctx);

/// The same substitution kept in (t, u) coordinates.
RatSeries subst_x_tu(Index nt, Index nu);

/// r - 1 - x r^2 (1 - u + u r) in (t, U).
RatSeries cubic_residual(const GfContext& ctx, const RatSeries& r);
CheckReport cubic_residual_check(const GfContext& ctx);
CheckReport cubic_residual_check(const GfContext& ctx, const RatSeries& candidate);

/// S^2 = t (t(1-t) + u(2-t)^2) / (4 (1 - t + t u)).
RatSeries s_squared(const GfContext& ctx);

/// (1/r2, 1/r3) = (t/2 - sqrt(t) c, t/2 + sqrt(t) c).
std::pair<RatHalfSeries, RatHalfSeries> inv_roots(const GfContext& ctx);

/// -u t (1-t) / (1 - t + u t), the reciprocal of r2 r3.
RatSeries vieta_rhs(const GfContext& ctx);
CheckReport vieta_product_check(const GfContext& ctx);
CheckReport vieta_product_check(const GfContext& ctx, const RatSeries& expected);

/// Xi = sqrt(t(1-t) + u(2-t)^2) / (2 sqrt(u) (1-t)) in (t, U).
RatSeries xi_series(const GfContext& ctx);

/// Re-expands a (t, U) series in tau = t / u, truncated to tau^ntau.
RatSeries xi_in_tau(const RatSeries& xi, Index ntau);

/// (F-, F+) = (Xi - sqrt(t) d, Xi + sqrt(t) d); their product is r1.
std::pair<RatHalfSeries, RatHalfSeries> factor_pair(const GfContext& ctx);
CheckReport factorization_check(const GfContext& ctx);
CheckReport factorization_check(const GfContext& ctx, const RatHalfSeries& f_minus,
                                const RatHalfSeries& f_plus);

/// Reversion of t = x Phi(t) in (x, u); nx >= 1.
RatSeries revert_t(Index nx, Index nu);

/// [t^n] (1 - 3t + 2t^2 - 2t^2 u) (1 - t + t u)^(n-1) / (1 - t)^(2n+2) as a
/// polynomial in u truncated at u^nu; n >= 1.
RatSeries::Row extract_r1_series(Index n, Index nu);

/// r1 composed with the reversion equals solve_g on the (nx, nu) grid.
CheckReport compose_g_check(Index nx, Index nu);
/// Same with an arbitrary (t, u) series in place of 1/(1-t).
CheckReport compose_g_check(Index nx, Index nu, const RatSeries& r1_candidate);

/// x(t, u) composed with the reversion equals x.
CheckReport mutual_inverse_check(Index nx, Index nu);

}  // namespace tgf

#endif  // TGF_GF_HPP
