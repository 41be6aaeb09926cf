// Command line front end: spatial overlap factors, CHSH values and LHV
// membership for two localized spin-1/2 packets.

#include <iostream>

#include <CLI11.hpp>

#include "bellspace/cli.hpp"

int main(int argc, char** argv) {
    using namespace bellspace::cli;

    CLI::App app{"Bell correlations of spatially localized particle pairs"};
    app.require_subcommand(1);

    GFactorOptions gopt;
    CLI::App* gfactor = app.add_subcommand("gfactor", "overlap factor g of a scenario");
    gfactor->add_option("--scenario", gopt.scenario_path, "scenario JSON file")->required();
    gfactor->add_option("--method", gopt.method, "closed | quadrature | montecarlo")
        ->check(CLI::IsMember({"closed", "quadrature", "montecarlo"}));
    gfactor->add_option("--tol", gopt.tol, "quadrature tolerance");
    gfactor->add_option("--n", gopt.n, "monte carlo sample count");
    std::uint64_t seed_value = 0;
    CLI::Option* seed_opt = gfactor->add_option("--seed", seed_value, "monte carlo seed");

    CHSHOptions copt;
    CLI::App* chsh = app.add_subcommand("chsh", "CHSH value and maximum for a scenario");
    chsh->add_option("--scenario", copt.scenario_path, "scenario JSON file")->required();
    chsh->add_option("--tol", copt.tol, "optimizer tolerance");

    LHVOptions lopt;
    CLI::App* lhv = app.add_subcommand("lhv", "local-hidden-variable membership of the "
                                              "scenario's correlation table");
    lhv->add_option("--scenario", lopt.scenario_path, "scenario JSON file")->required();
    lhv->add_option("--tol", lopt.tol, "membership tolerance");
    lhv->add_option("--witness", lopt.witness_path, "write the explicit mixture here");

    ScanOptions sopt;
    CLI::App* scan = app.add_subcommand("scan", "sweep one geometry parameter, write CSV");
    scan->add_option("--scenario", sopt.scenario_path, "scenario JSON file")->required();
    scan->add_option("--param", sopt.param, "half_width | separation (units of 1/m)")
        ->required()
        ->check(CLI::IsMember({"half_width", "separation"}));
    scan->add_option("--from", sopt.from, "first value")->required();
    scan->add_option("--to", sopt.to, "last value")->required();
    scan->add_option("--steps", sopt.steps, "grid size (>= 2)")->required();
    scan->add_option("--out", sopt.out_path, "output CSV path")->required();
    scan->add_option("--tol", sopt.tol, "optimizer tolerance");

    CLI::App* paper = app.add_subcommand("paper", "self-test of the published numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the complaint
        return kExitBadInput;
    }

    if (gfactor->parsed()) {
        if (seed_opt->count() > 0) gopt.seed = seed_value;
        return run_gfactor(gopt, std::cout, std::cerr);
    }
    if (chsh->parsed()) return run_chsh(copt, std::cout, std::cerr);
    if (lhv->parsed()) return run_lhv(lopt, std::cout, std::cerr);
    if (scan->parsed()) return run_scan(sopt, std::cout, std::cerr);
    if (paper->parsed()) return run_paper(std::cout, std::cerr);
    return kExitBadInput;
}
