#ifndef TGF_COMMANDS_HPP
#define TGF_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "tgf/gf.hpp"
#include "tgf/trees.hpp"

namespace tgf::cli {

enum class Format { Text, Csv, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::string command;
    std::optional<long> nmax;
    std::optional<Index> order_t;
    std::optional<Index> order_u;
    Index order_x = 20;
    Index order_xu = 10;
    Format format = Format::Text;
    std::string out;   // empty: standard output
    std::string tree;  // canonical serialization for `dot`
    long oracle_bound = kDefaultExhaustiveBound;
    std::string inject;  // verify test hook
};

int run_triangle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_bfile(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_xi(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_factors(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int run_dot(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command; usage errors become exit status 2.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// "5/8 + 1/2*U - 3*U^2"; "0" for the zero polynomial.
std::string format_poly(const RatSeries::Row& coeffs, const std::string& var);

}  // namespace tgf::cli

#endif  // TGF_COMMANDS_HPP
