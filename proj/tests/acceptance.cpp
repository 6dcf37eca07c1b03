// End-to-end acceptance run: one line per criterion, exit 1 if any fails.
// Each criterion must hold exactly and finish inside its time limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reference_table.hpp"
#include "property_suites.hpp"
#include "tgf/combinatorics.hpp"
#include "tgf/commands.hpp"
#include "tgf/gf.hpp"
#include "tgf/trees.hpp"
#include "tgf/verify.hpp"

namespace {

using namespace tgf;

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> body;
};

Outcome table_reproduction() {
    Outcome o;
    cli::RunConfig cfg;
    cfg.command = "triangle";
    cfg.nmax = 6;
    std::ostringstream out;
    std::ostringstream err;
    o.require(cli::run(cfg, out, err) == cli::kExitOk, "triangle command failed: " + err.str());
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(out.str());
    for (std::string line; std::getline(is, line);) {
        const auto bar = line.find('|');
        if (bar == std::string::npos || line.find("n\\k") != std::string::npos) {
            continue;
        }
        std::istringstream cells(line.substr(bar + 1));
        rows.emplace_back();
        for (std::string c; cells >> c;) {
            rows.back().push_back(c);
        }
    }
    const auto& expected = testing::reference_table();
    o.require(rows.size() == expected.size(), "row count");
    int nonzero = 0;
    for (std::size_t n = 0; n < rows.size() && n < expected.size(); ++n) {
        o.require(rows[n].size() == expected[n].size(), "row " + std::to_string(n) + " length");
        for (std::size_t k = 0; k < rows[n].size() && k < expected[n].size(); ++k) {
            o.require(rows[n][k] == std::to_string(expected[n][k]),
                      "T(" + std::to_string(n) + "," + std::to_string(k) + ") = " + rows[n][k]);
            nonzero += rows[n][k] != "0" ? 1 : 0;
        }
    }
    o.require(nonzero == 22, "expected 22 printed nonzero entries (21 for n >= 1), got " +
                                 std::to_string(nonzero));
    o.require(t_closed(4, 1) == 28 && t_closed(6, 2) == 550, "spot values");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const long counts[] = {1, 1, 3, 12, 55, 273, 1428, 7752, 43263};
    long total = 0;
    for (long n = 0; n <= 8; ++n) {
        long c = 0;
        enumerate(n, [&](const TernaryTree&) { ++c; });
        o.require(c == counts[n], "count at n=" + std::to_string(n) + " is " + std::to_string(c));
        total += c;
    }
    o.require(total == 52788, "total " + std::to_string(total));
    const CheckReport r = oracle_check(8, kDefaultExhaustiveBound);
    o.require(r.passed, r.detail);
    return o;
}

Outcome functional_equation() {
    Outcome o;
    const Index nx = 20;
    const Index nu = 10;
    const CheckReport g = solve_g_closed_form_check(nx, nu);
    o.require(g.passed, "solve_g: " + g.detail);
    const CheckReport c = compose_g_check(nx, nu);
    o.require(c.passed, "compose_g: " + c.detail);
    const CheckReport e = extract_r1_check(nx, nu);
    o.require(e.passed, "extract_r1: " + e.detail);
    // Full rows, every k < n.
    for (Index n = 1; n <= nx; ++n) {
        const auto row = extract_r1_series(n, n);
        for (Index k = 0; k <= n; ++k) {
            o.require(row(k) == Rat(t_closed(n, k)),
                      "extract_r1 full row n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    return o;
}

Outcome cubic_and_vieta() {
    Outcome o;
    const GfContext ctx(24, 12);
    const CheckReport cubic = cubic_residual_check(ctx);
    o.require(cubic.passed, "cubic: " + cubic.detail);
    const CheckReport vieta = vieta_product_check(ctx);
    o.require(vieta.passed, "vieta: " + vieta.detail);
    return o;
}

Outcome factorization() {
    Outcome o;
    const GfContext ctx(24, 12);
    const CheckReport r = factorization_check(ctx);
    o.require(r.passed, r.detail);
    const RatHalfSeries product = ctx.factor_minus() * ctx.factor_plus();
    o.require(product.odd().is_zero(), "odd part nonzero");
    o.require(product.even() == ctx.r1(), "even part != 1/(1-t)");
    return o;
}

Outcome xi_golden() {
    Outcome o;
    const GfContext ctx(8, 6);
    const RatSeries xi = xi_in_tau(ctx.xi(), 3);
    const std::vector<std::vector<Rat>> expected = {
        {Rat(1)},
        {Rat(5, 8), Rat(4, 8)},
        {Rat(71, 128), Rat(136, 128), Rat(64, 128)},
        {Rat(541, 1024), Rat(1596, 1024), Rat(1568, 1024), Rat(512, 1024)},
    };
    for (Index n = 0; n <= 3; ++n) {
        for (Index j = 0; j <= 6; ++j) {
            const Rat want = j < static_cast<Index>(expected[n].size()) ? expected[n][j] : Rat(0);
            o.require(xi.coeff(n, j) == want, "tau^" + std::to_string(n) + " U^" + std::to_string(j) +
                                                  ": " + xi.coeff(n, j).str() + " != " + want.str());
        }
    }
    o.require(xi_golden_check(GfContext(24, 12)).passed, "golden check at (24,12)");
    return o;
}

Outcome lagrange() {
    Outcome o;
    const RatSeries t = revert_t(20, 20);
    for (long n = 1; n <= 20; ++n) {
        for (long k = 0; k <= 20; ++k) {
            o.require(t.coeff(n, k) == lagrange_tpow_coeff(n, k, 1),
                      "l=1 n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    }
    const RatSeries t12 = truncate(t, 12, 12);
    RatSeries power = t12;
    for (long l = 1; l <= 4; ++l) {
        for (long n = 1; n <= 12; ++n) {
            for (long k = 0; k <= 12; ++k) {
                o.require(power.coeff(n, k) == lagrange_tpow_coeff(n, k, l),
                          "l=" + std::to_string(l) + " n=" + std::to_string(n) + " k=" +
                              std::to_string(k));
            }
        }
        power = power * t12;
    }
    return o;
}

Outcome binomial_identities() {
    Outcome o;
    const CheckReport four = four_binomial_check(200);
    o.require(four.passed, four.detail);
    const CheckReport rows = row_sum_check(200);
    o.require(rows.passed, rows.detail);
    return o;
}

Outcome algebra_properties() {
    Outcome o;
    for (const auto& suite : testing::all_property_suites()) {
        o.require(suite.cases >= 100, suite.name + ": only " + std::to_string(suite.cases) + " cases");
        o.require(suite.failures == 0, suite.name + ": " + suite.first_failure);
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "table reproduction (n <= 6)", 1.0, table_reproduction},
        {2, "oracle equivalence (n <= 8)", 30.0, oracle_equivalence},
        {3, "functional equation, compose, extraction (n <= 20)", 30.0, functional_equation},
        {4, "cubic residual and Vieta product at (24,12)", 30.0, cubic_and_vieta},
        {5, "factorization F- F+ = 1/(1-t) at (24,12)", 30.0, factorization},
        {6, "Xi golden tau-coefficients", 5.0, xi_golden},
        {7, "Lagrange inversion (l=1, n<=20; l<=4, n<=12)", 30.0, lagrange},
        {8, "binomial identities (n <= 200)", 10.0, binomial_identities},
        {9, "algebra property suites", 60.0, algebra_properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs >= c.limit_seconds) {
            o.ok = false;
            o.note = "too slow";
        }
        failed += o.ok ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
        std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (" << timing
                  << ")";
        if (!o.ok) {
            std::cout << "  " << o.note;
        }
        std::cout << '\n';
    }
    std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << '\n';
    return failed == 0 ? 0 : 1;
}
