#include "tgf/gf.hpp"

#include <string>

namespace tgf {

namespace {

RatSeries one_minus_t(Index nt, Index nu, const VarPair& vars) {
    return RatSeries::one(vars, nt, nu) - RatSeries::var1(vars, nt, nu);
}

// 1 - t + u t with u = 1 + U collapses to 1 + U t.
RatSeries one_plus_ut(const GfContext& ctx) {
    return ctx.one() + ctx.t() * RatSeries::var2(kTU, ctx.order_t(), ctx.order_u());
}

RatSeries build_x(const GfContext& ctx) {
    const RatSeries om = one_minus_t(ctx.order_t(), ctx.order_u(), kTU);
    return div(ctx.t() * om * om, one_plus_ut(ctx));
}

RatSeries build_phi(const GfContext& ctx) {
    const RatSeries om = one_minus_t(ctx.order_t(), ctx.order_u(), kTU);
    return div(one_plus_ut(ctx), om * om);
}

RatSeries build_radicand(const GfContext& ctx) {
    const RatSeries t = ctx.t();
    const RatSeries two_minus_t = Rat(2) * ctx.one() - t;
    return t * (ctx.one() - t) + ctx.u() * two_minus_t * two_minus_t;
}

// sqrt of a unit series whose constant term must be exactly 1.
RatSeries unit_sqrt(const RatSeries& s, const char* what) {
    if (!(s.grid()(0, 0) == Rat(1))) {
        throw InternalError(std::string(what) + ": expected constant term 1, got " +
                            s.grid()(0, 0).str());
    }
    return sqrt(s);
}

RatSeries build_c(const GfContext& ctx) {
    // (R / (1 + U t)) / 4 has constant term 1; sqrt of it is c.
    const RatSeries q = Rat(1, 4) * div(ctx.radicand(), one_plus_ut(ctx));
    return unit_sqrt(q, "odd cofactor radicand");
}

RatSeries build_xi(const GfContext& ctx) {
    // R = 4u (unit), so Xi = sqrt(R / 4u) / (1 - t).
    const RatSeries q = div(ctx.radicand(), Rat(4) * ctx.u());
    return div(unit_sqrt(q, "Xi radicand"), one_minus_t(ctx.order_t(), ctx.order_u(), kTU));
}

RatSeries build_d(const GfContext& ctx) {
    const RatSeries q = div(one_plus_ut(ctx), ctx.u());
    return div(unit_sqrt(q, "factor radicand"),
               Rat(2) * one_minus_t(ctx.order_t(), ctx.order_u(), kTU));
}

// Runs `step` nx + 1 times from `start`; the final step must change nothing.
template <typename Step>
RatSeries fixed_point(RatSeries value, Index nx, const char* what, Step step) {
    for (Index iter = 0; iter < nx; ++iter) {
        value = step(value);
    }
    RatSeries again = step(value);
    if (!(again == value)) {
        throw InternalError(std::string(what) + ": fixed-point iteration did not stabilize");
    }
    return value;
}

Index checked_order(Index n) {
    if (n < 0) {
        throw UsageError("truncation orders must be non-negative");
    }
    return n;
}

}  // namespace

std::string grid_label(Index a, Index b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

CheckReport compare_series(std::string name, const RatSeries& lhs, const RatSeries& rhs) {
    CheckReport report;
    report.name = std::move(name);
    report.grid = grid_label(lhs.ord1(), lhs.ord2());
    if (auto diff = first_difference(lhs, rhs)) {
        const auto [i, j] = *diff;
        report.passed = false;
        report.first_offending = Mismatch{i, j, lhs.grid()(i, j), rhs.grid()(i, j)};
        report.detail = "coefficient " + lhs.vars().first + "^" + std::to_string(i) + " " +
                        lhs.vars().second + "^" + std::to_string(j) + ": " +
                        lhs.grid()(i, j).str() + " != " + rhs.grid()(i, j).str();
    } else {
        report.passed = true;
    }
    return report;
}

GfContext::GfContext(Index nt, Index nu)
    : nt_(checked_order(nt)),
      nu_(checked_order(nu)),
      x_(build_x(*this)),
      phi_(build_phi(*this)),
      r1_(div(one(), one_minus_t(nt, nu, kTU))),
      radicand_(build_radicand(*this)),
      s_squared_(div(t() * radicand_, Rat(4) * one_plus_ut(*this))),
      c_(build_c(*this)),
      xi_(build_xi(*this)),
      d_(build_d(*this)),
      inv_r2_(Rat(1, 2) * t(), -c_),
      inv_r3_(Rat(1, 2) * t(), c_),
      f_minus_(xi_, -d_),
      f_plus_(xi_, d_) {}

RatSeries solve_g(Index nx, Index nu) {
    if (nx < 0 || nu < 0) {
        throw UsageError("solve_g: orders must be non-negative");
    }
    const RatSeries one = RatSeries::one(kXU, nx, nu);
    const RatSeries x = RatSeries::var1(kXU, nx, nu);
    const RatSeries u = RatSeries::var2(kXU, nx, nu);
    return fixed_point(one, nx, "solve_g", [&](const RatSeries& g) {
        return one + x * g * g * (one - u + u * g);
    });
}

RatSeries subst_x(const GfContext& ctx) { return ctx.x(); }

RatSeries subst_x_tu(Index nt, Index nu) {
    const RatSeries t = RatSeries::var1(kTu, nt, nu);
    const RatSeries u = RatSeries::var2(kTu, nt, nu);
    const RatSeries om = one_minus_t(nt, nu, kTu);
    return div(t * om * om, om + u * t);
}

RatSeries cubic_residual(const GfContext& ctx, const RatSeries& r) {
    const RatSeries one = ctx.one();
    const RatSeries u = ctx.u();
    return r - one - ctx.x() * r * r * (one - u + u * r);
}

CheckReport cubic_residual_check(const GfContext& ctx) { return cubic_residual_check(ctx, ctx.r1()); }

CheckReport cubic_residual_check(const GfContext& ctx, const RatSeries& candidate) {
    return compare_series("cubic_residual", cubic_residual(ctx, candidate), ctx.zero());
}

RatSeries s_squared(const GfContext& ctx) { return ctx.s_squared(); }

std::pair<RatHalfSeries, RatHalfSeries> inv_roots(const GfContext& ctx) {
    return {ctx.inv_r2(), ctx.inv_r3()};
}

RatSeries vieta_rhs(const GfContext& ctx) {
    const RatSeries t = ctx.t();
    return -div(ctx.u() * t * (ctx.one() - t), one_plus_ut(ctx));
}

CheckReport vieta_product_check(const GfContext& ctx) {
    return vieta_product_check(ctx, vieta_rhs(ctx));
}

CheckReport vieta_product_check(const GfContext& ctx, const RatSeries& expected) {
    const RatHalfSeries product = ctx.inv_r2() * ctx.inv_r3();
    CheckReport report = compare_series("vieta_product", product.even(), expected);
    if (report.passed) {
        CheckReport odd = compare_series("vieta_product", product.odd(), ctx.zero());
        if (!odd.passed) {
            odd.detail = "odd part: " + odd.detail;
            return odd;
        }
    }
    return report;
}

RatSeries xi_series(const GfContext& ctx) { return ctx.xi(); }

RatSeries xi_in_tau(const RatSeries& xi, Index ntau) {
    if (!(xi.vars() == kTU)) {
        throw UsageError("xi_in_tau: expected a series in (t,U)");
    }
    if (ntau < 0 || xi.ord1() < ntau) {
        throw UsageError("xi_in_tau: t-order " + std::to_string(xi.ord1()) +
                         " insufficient for tau-order " + std::to_string(ntau));
    }
    const Index nu = xi.ord2();
    // t = tau (1 + U)
    const RatSeries tau = RatSeries::var1(kTauU, ntau, nu);
    const RatSeries inner = tau + tau * RatSeries::var2(kTauU, ntau, nu);
    return compose_var1(xi, inner);
}

std::pair<RatHalfSeries, RatHalfSeries> factor_pair(const GfContext& ctx) {
    return {ctx.factor_minus(), ctx.factor_plus()};
}

CheckReport factorization_check(const GfContext& ctx) {
    return factorization_check(ctx, ctx.factor_minus(), ctx.factor_plus());
}

CheckReport factorization_check(const GfContext& ctx, const RatHalfSeries& f_minus,
                                const RatHalfSeries& f_plus) {
    const RatHalfSeries product = f_minus * f_plus;
    CheckReport report = compare_series("factorization", product.even(), ctx.r1());
    if (report.passed) {
        CheckReport odd = compare_series("factorization", product.odd(), ctx.zero());
        if (!odd.passed) {
            odd.detail = "odd part: " + odd.detail;
            return odd;
        }
    }
    return report;
}

RatSeries revert_t(Index nx, Index nu) {
    if (nx < 1 || nu < 0) {
        throw UsageError("revert_t: requires x-order >= 1");
    }
    const RatSeries one = RatSeries::one(kXU, nx, nu);
    const RatSeries x = RatSeries::var1(kXU, nx, nu);
    const RatSeries u = RatSeries::var2(kXU, nx, nu);
    return fixed_point(RatSeries::zero(kXU, nx, nu), nx, "revert_t", [&](const RatSeries& t) {
        const RatSeries om = one - t;
        return x * div(om + u * t, om * om);
    });
}

RatSeries::Row extract_r1_series(Index n, Index nu) {
    if (n < 1 || nu < 0) {
        throw UsageError("extract_r1_series: requires n >= 1");
    }
    const RatSeries one = RatSeries::one(kTu, n, nu);
    const RatSeries t = RatSeries::var1(kTu, n, nu);
    const RatSeries u = RatSeries::var2(kTu, n, nu);
    const RatSeries t2 = t * t;
    const RatSeries front = one - Rat(3) * t + Rat(2) * t2 - Rat(2) * t2 * u;
    const RatSeries om = one - t;
    const RatSeries series =
        div(front * pow(om + t * u, static_cast<unsigned>(n - 1)), pow(om, static_cast<unsigned>(2 * n + 2)));
    return series.row(n);
}

CheckReport compose_g_check(Index nx, Index nu) {
    return compose_g_check(nx, nu, div(RatSeries::one(kTu, nx, nu), one_minus_t(nx, nu, kTu)));
}

CheckReport compose_g_check(Index nx, Index nu, const RatSeries& r1_candidate) {
    const RatSeries composed = compose_var1(r1_candidate, revert_t(nx, nu));
    return compare_series("compose_g", composed, solve_g(nx, nu));
}

CheckReport mutual_inverse_check(Index nx, Index nu) {
    const RatSeries composed = compose_var1(subst_x_tu(nx, nu), revert_t(nx, nu));
    return compare_series("mutual_inverse", composed, RatSeries::var1(kXU, nx, nu));
}

}  // namespace tgf
