#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "ris/channel.hpp"
#include "ris/cli.hpp"
#include "ris/parallel.hpp"

namespace {

struct Flags {
    std::vector<int> L{1};
    double sigma2 = 1.0;
    std::string p_dbm = "0";
    double noise_dbm = -70.0;
    std::vector<double> omega{1e-4};
    double nu = 0.0;
    std::vector<int> scheme{1};
    std::string reciprocity = "reciprocal";
    double gamma_th_db = 0.0;
    std::string phase_error = "none";
    std::vector<std::string> methods;
    std::uint64_t trials = 0;
    std::uint64_t seed = 1;
    int workers = 0;
    int candidates = 100;
    int greedy_grid = 360;
    std::string output;
    std::string svg;
    std::string figure;
};

std::uint64_t default_trials(ris::cli::Command c) {
    switch (c) {
    case ris::cli::Command::Optimize: return 100;
    case ris::cli::Command::Crossover: return 10000;
    default: return 100000;
    }
}

std::vector<std::string> default_methods(ris::cli::Command c, bool reciprocal) {
    switch (c) {
    case ris::cli::Command::Optimize: return {"sdp", "greedy", "u1", "random"};
    case ris::cli::Command::Crossover: return {"asymptotic", "mc"};
    default: return reciprocal ? std::vector<std::string>{"mc"} : std::vector<std::string>{"sdp"};
    }
}

ris::cli::ExperimentSpec to_spec(const Flags& f, ris::cli::Command cmd) {
    ris::cli::ExperimentSpec s;
    s.command = cmd;
    s.figure = f.figure;
    s.base.sigma2 = f.sigma2;
    s.base.noise_mw = ris::dbm_to_mw(f.noise_dbm);
    s.base.omega = f.omega.empty() ? 0.0 : f.omega.front();
    s.base.nu = f.nu;
    if (f.reciprocity == "reciprocal") {
        s.base.reciprocity = ris::Reciprocity::Reciprocal;
    } else if (f.reciprocity == "nonreciprocal") {
        s.base.reciprocity = ris::Reciprocity::NonReciprocal;
    } else {
        throw std::invalid_argument("--reciprocity: expected reciprocal or nonreciprocal");
    }
    s.base.gamma_th = ris::db_to_linear(f.gamma_th_db);
    s.base.phase_error = ris::cli::parse_phase_error(f.phase_error);
    s.L_list = f.L;
    s.schemes.clear();
    for (int k : f.scheme) {
        if (k != 1 && k != 2) throw std::invalid_argument("--scheme: entries must be 1 or 2");
        s.schemes.push_back(k == 1 ? ris::Scheme::One : ris::Scheme::Two);
    }
    s.p_dbm = ris::cli::parse_range(f.p_dbm);
    s.omega_list = f.omega;
    s.methods = f.methods.empty() ? default_methods(cmd, s.base.reciprocity == ris::Reciprocity::Reciprocal)
                                  : f.methods;
    s.trials = f.trials ? f.trials : (cmd == ris::cli::Command::Reproduce ? 0 : default_trials(cmd));
    s.seed = f.seed;
    s.workers = f.workers > 0 ? f.workers : ris::default_workers();
    s.randomization_candidates = f.candidates;
    s.greedy_grid = f.greedy_grid;
    s.output = f.output;
    s.svg = f.svg;
    return s;
}

void emit(const ris::cli::ExperimentSpec& spec) {
    const ris::cli::Table t = ris::cli::run(spec);
    const std::string csv = ris::cli::to_csv(t);
    if (spec.output.empty()) {
        std::cout << csv;
    } else {
        ris::cli::write_file(spec.output, csv);
    }
    if (!spec.svg.empty()) ris::cli::write_file(spec.svg, ris::cli::to_svg(t));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS two-way link simulator: outage, spectral efficiency, max-min phase design"};
    app.set_config("--config", "", "flat key=value file; command-line flags override it");
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    app.add_option("--L", f.L, "RIS elements L, comma list (columns get an _L<n> suffix when several)")
        ->delimiter(',');
    app.add_option("--sigma2", f.sigma2, "variance of every fading coefficient, CN(0, sigma2) [linear]");
    app.add_option("--p-dbm", f.p_dbm, "transmit power sweep P1 = P2, start:stop:step or one value [dBm]");
    app.add_option("--noise-dbm", f.noise_dbm, "receiver noise power sigma_w^2 [dBm]; -70 dBm = 1e-7 mW");
    app.add_option("--omega", f.omega,
                   "loop-interference coefficient omega in sigma_i^2 = omega P^nu [mW^(1-nu)]; comma list for "
                   "crossover")
        ->delimiter(',');
    app.add_option("--nu", f.nu, "loop-interference power exponent nu in [0, 1]");
    app.add_option("--scheme", f.scheme, "1 = one slot with loop interference, 2 = two interference-free slots")
        ->delimiter(',');
    app.add_option("--reciprocity", f.reciprocity, "reciprocal | nonreciprocal");
    app.add_option("--gamma-th-db", f.gamma_th_db, "outage SINR threshold gamma_th [dB]");
    app.add_option("--phase-error", f.phase_error,
                   "RIS phase error: none | uniform:delta | vonmises:mu:kappa [rad]");
    app.add_option("--method", f.methods,
                   "comma list from mc, exact, gamma, clt, asymptotic, phase-error, sdp, greedy, u1, random")
        ->delimiter(',');
    app.add_option("--trials", f.trials, "Monte Carlo trials (default depends on the command)");
    app.add_option("--seed", f.seed, "RNG seed");
    app.add_option("--workers", f.workers, "worker threads (default: RIS_WORKERS or hardware count)");
    app.add_option("--candidates", f.candidates, "Gaussian randomization candidates K for sdp");
    app.add_option("--greedy-grid", f.greedy_grid, "phase grid size K for greedy");
    app.add_option("--output", f.output, "CSV path (stdout if empty); reproduce: file prefix");
    app.add_option("--svg", f.svg, "also write a line plot here; reproduce: any value enables plots");

    app.add_subcommand("outage", "outage probability vs P");
    app.add_subcommand("se", "average spectral efficiency vs P");
    app.add_subcommand("optimize", "per-trial max-min SINR design on a non-reciprocal link");
    app.add_subcommand("crossover", "power where Scheme 1 and Scheme 2 SE cross, vs omega");
    auto* rep = app.add_subcommand("reproduce", "write the CSVs behind one figure (fig3..fig8)");
    rep->add_option("figure", f.figure, "fig3 | fig4 | fig5 | fig6 | fig7 | fig8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        const auto cmd = ris::cli::parse_command(app.get_subcommands().front()->get_name());
        const ris::cli::ExperimentSpec spec = to_spec(f, cmd);
        if (cmd == ris::cli::Command::Reproduce) {
            for (const auto& part : ris::cli::preset(spec.figure, spec, spec.output)) {
                emit(part);
                std::cerr << "wrote " << part.output << '\n';
            }
        } else {
            emit(spec);
        }
    } catch (const std::exception& e) {
        std::cerr << "ris_sim: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
