// Command-line surface: builds the complete solution system of the planar
// force-free field equation for a one-variable proportionality factor,
// verifies it with residual operators, solves Dirichlet collocation
// problems, and regenerates the closed-form cross-check.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "beltrami/runner.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw beltrami::ConfigError("cannot read config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

beltrami::RunConfig load_config(const std::string& path, int nmax_override,
                                double tol_override) {
    beltrami::RunConfig cfg = beltrami::parse_run_config(slurp(path));
    if (nmax_override >= 0) cfg.n_max = nmax_override;
    if (tol_override > 0.0) cfg.tol = tol_override;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complete solution systems for planar force-free fields "
                 "with a one-variable proportionality factor"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    int nmax_override = -1;
    double tol_override = 0.0;

    auto add_common = [&](CLI::App* cmd, bool need_config) {
        auto* c = cmd->add_option("--config", config_path, "run configuration (JSON)");
        if (need_config) c->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--nmax", nmax_override, "override n_max from the config");
        cmd->add_option("--tol", tol_override, "override quadrature tolerance");
    };

    CLI::App* basis = app.add_subcommand(
        "basis", "write the basis manifest and per-element field CSVs");
    add_common(basis, true);

    CLI::App* verify = app.add_subcommand(
        "verify", "run the residual suite (and cross-check exported files)");
    add_common(verify, true);

    CLI::App* bvp = app.add_subcommand(
        "bvp", "least-squares Dirichlet fit from the config's bvp object");
    add_common(bvp, true);

    CLI::App* example = app.add_subcommand(
        "example", "regenerate the closed-form cross-check artifacts");
    add_common(example, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (basis->parsed()) {
            return beltrami::run_basis(
                load_config(config_path, nmax_override, tol_override), out_dir,
                std::cout);
        }
        if (verify->parsed()) {
            return beltrami::run_verify(
                load_config(config_path, nmax_override, tol_override),
                std::optional<std::filesystem::path>(out_dir), std::cout);
        }
        if (bvp->parsed()) {
            return beltrami::run_bvp(
                load_config(config_path, nmax_override, tol_override), out_dir,
                std::cout);
        }
        return beltrami::run_example(
            std::optional<std::filesystem::path>(out_dir), std::cout);
    } catch (const beltrami::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return beltrami::exit_config_error;
    } catch (const beltrami::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return beltrami::exit_numerical_error;
    }
}
