#include "tgf/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "tgf/combinatorics.hpp"
#include "tgf/verify.hpp"

namespace tgf::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kDefaultNmax = 6;
constexpr long kDefaultVerifyOracleNmax = 8;
constexpr Index kDefaultVerifyOrderT = 24;
constexpr Index kDefaultVerifyOrderU = 12;
constexpr Index kDefaultXiOrder = 3;

long nmax_or(const RunConfig& cfg, long fallback) {
    const long n = cfg.nmax.value_or(fallback);
    if (n < 0) {
        throw UsageError("--nmax must be non-negative");
    }
    return n;
}

Index positive(Index v, const char* flag) {
    if (v < 1) {
        throw UsageError(std::string(flag) + " must be positive");
    }
    return v;
}

Json json_row(const RatSeries::Row& row) {
    Json arr = Json::array();
    for (Index j = 0; j < row.size(); ++j) {
        arr.push_back(row(j).str());
    }
    return arr;
}

Json json_grid(const RatSeries& s) {
    Json rows = Json::array();
    for (Index i = 0; i <= s.ord1(); ++i) {
        rows.push_back(json_row(s.row(i)));
    }
    return rows;
}

void csv_grid(std::ostream& out, const std::string& label, const RatSeries& s) {
    for (Index i = 0; i <= s.ord1(); ++i) {
        for (Index j = 0; j <= s.ord2(); ++j) {
            if (!label.empty()) {
                out << label << ',';
            }
            out << i << ',' << j << ',' << s.grid()(i, j) << '\n';
        }
    }
}

std::string power(const std::string& var, Index e) {
    if (e == 0) {
        return "";
    }
    return e == 1 ? var : var + "^" + std::to_string(e);
}

}  // namespace

std::string format_poly(const RatSeries::Row& coeffs, const std::string& var) {
    std::ostringstream os;
    bool first = true;
    for (Index j = 0; j < coeffs.size(); ++j) {
        const Rat& c = coeffs(j);
        if (c.is_zero()) {
            continue;
        }
        const Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (j == 0) {
            os << mag;
        } else if (mag == Rat(1)) {
            os << power(var, j);
        } else {
            os << mag << '*' << power(var, j);
        }
    }
    return first ? "0" : os.str();
}

int run_triangle(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const long nmax = nmax_or(cfg, kDefaultNmax);
    const Triangle tri = triangle_closed(nmax);
    switch (cfg.format) {
        case Format::Csv:
            for (long n = 0; n <= nmax; ++n) {
                for (long k = 0; k < Triangle::row_length(n); ++k) {
                    out << n << ',' << k << ',' << tri.at(n, k) << '\n';
                }
            }
            break;
        case Format::Json: {
            Json rows = Json::array();
            for (long n = 0; n <= nmax; ++n) {
                Json row = Json::array();
                for (const auto& v : tri.row(n)) {
                    row.push_back(v.get_str());
                }
                rows.push_back(std::move(row));
            }
            Json doc;
            doc["nmax"] = nmax;
            doc["rows"] = std::move(rows);
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::Text: {
            std::size_t width = std::to_string(nmax).size();
            for (long n = 0; n <= nmax; ++n) {
                for (const auto& v : tri.row(n)) {
                    width = std::max(width, v.get_str().size());
                }
            }
            width += 1;
            const long cols = std::max(1L, nmax);
            out << std::left << std::setw(static_cast<int>(width)) << "n\\k" << "|";
            for (long k = 0; k < cols; ++k) {
                out << std::right << std::setw(static_cast<int>(width)) << k;
            }
            out << '\n';
            out << std::string(width, '-') << "+" << std::string(width * static_cast<std::size_t>(cols), '-')
                << '\n';
            for (long n = 0; n <= nmax; ++n) {
                out << std::left << std::setw(static_cast<int>(width)) << n << "|";
                for (const auto& v : tri.row(n)) {
                    out << std::right << std::setw(static_cast<int>(width)) << v.get_str();
                }
                out << '\n';
            }
            break;
        }
    }
    return kExitOk;
}

int run_bfile(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const long nmax = nmax_or(cfg, kDefaultNmax);
    const Triangle tri = triangle_closed(nmax);
    out << "# T(n,k): ternary trees with n nodes and k middle edges.\n"
        << "# Index runs from 0 over rows n = 0.." << nmax
        << " in order, k ascending within a row (k = 0 for n = 0, k = 0..n-1 for n >= 1).\n";
    long index = 0;
    for (long n = 0; n <= nmax; ++n) {
        for (const auto& v : tri.row(n)) {
            out << index++ << ' ' << v << '\n';
        }
    }
    return kExitOk;
}

int run_xi(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const Index nt = positive(cfg.order_t.value_or(kDefaultXiOrder), "--order-t");
    const Index nu = positive(cfg.order_u.value_or(kDefaultXiOrder), "--order-u");
    const GfContext ctx(nt, nu);
    const RatSeries xi = xi_in_tau(ctx.xi(), nt);
    switch (cfg.format) {
        case Format::Csv:
            csv_grid(out, "", xi);
            break;
        case Format::Json: {
            Json doc;
            doc["series"] = "Xi";
            doc["variables"] = {"tau", "U"};
            doc["grid"] = grid_label(nt, nu);
            doc["coefficients"] = json_grid(xi);
            // Highest U power present at each tau^n; -1 for an all-zero row.
            Json degrees = Json::array();
            for (Index n = 0; n <= nt; ++n) {
                Index deg = -1;
                for (Index j = 0; j <= nu; ++j) {
                    if (!xi.grid()(n, j).is_zero()) {
                        deg = j;
                    }
                }
                degrees.push_back(deg);
            }
            doc["u_degrees"] = std::move(degrees);
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::Text:
            out << "Xi = sum_n c_n(U) tau^n, tau = t/u, u = 1 + U\n";
            for (Index n = 0; n <= nt; ++n) {
                out << "tau^" << n << ": " << format_poly(xi.row(n), "U") << '\n';
            }
            break;
    }
    return kExitOk;
}

int run_factors(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const Index nt = positive(cfg.order_t.value_or(kDefaultXiOrder), "--order-t");
    const Index nu = positive(cfg.order_u.value_or(kDefaultXiOrder), "--order-u");
    const GfContext ctx(nt, nu);
    const CheckReport check = factorization_check(ctx);
    switch (cfg.format) {
        case Format::Csv:
            csv_grid(out, "xi", ctx.xi());
            csv_grid(out, "d", ctx.d());
            break;
        case Format::Json: {
            Json doc;
            doc["variables"] = {"t", "U"};
            doc["grid"] = ctx.grid();
            doc["xi"] = json_grid(ctx.xi());
            doc["d"] = json_grid(ctx.d());
            doc["factorization"] = check.passed ? "pass" : "fail";
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::Text:
            out << "F- = Xi - sqrt(t)*d,  F+ = Xi + sqrt(t)*d,  u = 1 + U\n";
            out << "Xi:\n";
            for (Index i = 0; i <= nt; ++i) {
                out << "  t^" << i << ": " << format_poly(ctx.xi().row(i), "U") << '\n';
            }
            out << "d:\n";
            for (Index i = 0; i <= nt; ++i) {
                out << "  t^" << i << ": " << format_poly(ctx.d().row(i), "U") << '\n';
            }
            out << "F- * F+ = 1/(1-t) on grid " << ctx.grid() << ": "
                << (check.passed ? "pass" : "fail") << '\n';
            break;
    }
    return check.passed ? kExitOk : kExitCheckFailed;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    VerifyOptions opts;
    opts.order_t = positive(cfg.order_t.value_or(kDefaultVerifyOrderT), "--order-t");
    opts.order_u = positive(cfg.order_u.value_or(kDefaultVerifyOrderU), "--order-u");
    opts.order_x = positive(cfg.order_x, "--order-x");
    opts.order_xu = positive(cfg.order_xu, "--order-xu");
    opts.oracle_nmax = nmax_or(cfg, kDefaultVerifyOracleNmax);
    opts.oracle_bound = cfg.oracle_bound;
    opts.inject = cfg.inject;
    const std::vector<CheckReport> reports = run_all_checks(opts);
    const bool all = std::all_of(reports.begin(), reports.end(),
                                 [](const CheckReport& r) { return r.passed; });
    switch (cfg.format) {
        case Format::Json: {
            Json checks = Json::array();
            for (const auto& r : reports) {
                Json c;
                c["name"] = r.name;
                c["grid"] = r.grid;
                c["status"] = r.passed ? "pass" : "fail";
                if (r.first_offending) {
                    c["first_offending"] = {{"i", r.first_offending->i},
                                            {"j", r.first_offending->j},
                                            {"lhs", r.first_offending->lhs.str()},
                                            {"rhs", r.first_offending->rhs.str()}};
                    c["detail"] = r.detail;
                }
                checks.push_back(std::move(c));
            }
            Json doc;
            doc["status"] = all ? "pass" : "fail";
            doc["checks"] = std::move(checks);
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "name,grid,status\n";
            for (const auto& r : reports) {
                out << r.name << ",\"" << r.grid << "\"," << (r.passed ? "pass" : "fail") << '\n';
            }
            break;
        case Format::Text:
            for (const auto& r : reports) {
                out << (r.passed ? "pass  " : "FAIL  ") << std::left << std::setw(24) << r.name
                    << r.grid;
                if (!r.passed) {
                    out << "  " << r.detail;
                }
                out << '\n';
            }
            out << (all ? "all checks passed" : "verification FAILED") << '\n';
            break;
    }
    return all ? kExitOk : kExitCheckFailed;
}

int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    const long nmax = nmax_or(cfg, kDefaultNmax);
    const Triangle oracle = triangle_oracle(nmax, cfg.oracle_bound);
    const Triangle closed = triangle_closed(nmax);
    std::size_t diffs = 0;
    for (long n = 0; n <= nmax; ++n) {
        for (long k = 0; k < Triangle::row_length(n); ++k) {
            if (oracle.at(n, k) != closed.at(n, k)) {
                ++diffs;
                out << "T(" << n << "," << k << "): enumerated " << oracle.at(n, k)
                    << ", closed form " << closed.at(n, k) << '\n';
            }
        }
    }
    if (diffs == 0) {
        out << "identical: enumeration matches closed form for n <= " << nmax << '\n';
        return kExitOk;
    }
    out << diffs << " entries differ\n";
    return kExitCheckFailed;
}

int run_dot(const RunConfig& cfg, std::ostream& out, std::ostream& /*err*/) {
    out << to_dot(parse_tree(cfg.tree));
    return kExitOk;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "triangle") {
            return run_triangle(cfg, out, err);
        }
        if (cfg.command == "bfile") {
            return run_bfile(cfg, out, err);
        }
        if (cfg.command == "xi") {
            return run_xi(cfg, out, err);
        }
        if (cfg.command == "factors") {
            return run_factors(cfg, out, err);
        }
        if (cfg.command == "verify") {
            return run_verify(cfg, out, err);
        }
        if (cfg.command == "oracle") {
            return run_oracle(cfg, out, err);
        }
        if (cfg.command == "dot") {
            return run_dot(cfg, out, err);
        }
        err << "error: unknown command '" << cfg.command << "'\n";
        return kExitUsage;
    } catch (const TreeParseError& e) {
        err << "error: malformed tree: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace tgf::cli
