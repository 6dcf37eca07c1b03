#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "tgf/commands.hpp"

int main(int argc, char** argv) {
    using tgf::cli::Format;
    tgf::cli::RunConfig cfg;

    CLI::App app{"Ternary trees by nodes and middle edges: exact tables, series and checks"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{
        {"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};

    long nmax = 0;
    long order_t = 0;
    long order_u = 0;
    const auto common = [&](CLI::App* sub, bool orders) {
        sub->add_option("--nmax", nmax, "Largest node count");
        sub->add_option("--format", cfg.format, "Output format: text, csv or json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--out", cfg.out, "Write output to PATH instead of standard output");
        if (orders) {
            sub->add_option("--order-t", order_t, "Truncation order in t (or tau)");
            sub->add_option("--order-u", order_u, "Truncation order in U");
            sub->add_option("--order-x", cfg.order_x, "Truncation order in x");
            sub->add_option("--order-xu", cfg.order_xu, "Truncation order in u for (x,u) series");
        }
        sub->add_option("--bound", cfg.oracle_bound, "Exhaustive enumeration bound");
    };

    auto* triangle = app.add_subcommand("triangle", "Print T(n,k) for n <= nmax");
    common(triangle, false);
    auto* bfile = app.add_subcommand("bfile", "Print the triangle as 'index value' lines");
    common(bfile, false);
    auto* xi = app.add_subcommand("xi", "Print Xi expanded in tau = t/u");
    common(xi, true);
    auto* factors = app.add_subcommand("factors", "Print the two factors of 1/(1-t)");
    common(factors, true);
    auto* verify = app.add_subcommand("verify", "Run every identity check");
    common(verify, true);
    verify->add_option("--inject", cfg.inject, "Perturb the named check (testing aid)")->group("");
    auto* oracle = app.add_subcommand("oracle", "Compare tree enumeration with the closed form");
    common(oracle, false);
    auto* dot = app.add_subcommand("dot", "Render a serialized tree ('N' node, '.' empty slot) as DOT");
    common(dot, false);
    dot->add_option("tree", cfg.tree, "Preorder serialization, e.g. N.N....")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : tgf::cli::kExitUsage;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    if (chosen->count("--nmax") > 0) {
        cfg.nmax = nmax;
    }
    if (chosen->get_option_no_throw("--order-t") != nullptr && chosen->count("--order-t") > 0) {
        cfg.order_t = order_t;
    }
    if (chosen->get_option_no_throw("--order-u") != nullptr && chosen->count("--order-u") > 0) {
        cfg.order_u = order_u;
    }

    if (cfg.out.empty()) {
        return tgf::cli::run(cfg, std::cout, std::cerr);
    }
    std::ofstream file(cfg.out);
    if (!file) {
        std::cerr << "error: cannot open " << cfg.out << " for writing\n";
        return tgf::cli::kExitUsage;
    }
    return tgf::cli::run(cfg, file, std::cerr);
}
