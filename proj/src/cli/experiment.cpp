#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "ris/analytic.hpp"
#include "ris/cli.hpp"
#include "ris/errors.hpp"
#include "ris/mc.hpp"
#include "ris/optim.hpp"
#include "ris/parallel.hpp"

namespace ris::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const std::set<std::string> kMcMethods{"mc", "u1", "random", "sdp", "greedy"};
const std::set<std::string> kAnalyticMethods{"exact", "gamma", "clt", "asymptotic", "phase-error"};

bool is_mc(const std::string& m) { return kMcMethods.count(m) > 0; }

mc::PhaseRule rule_of(const std::string& m) {
    if (m == "mc") return mc::PhaseRule::Optimal;
    if (m == "u1") return mc::PhaseRule::U1Phase;
    if (m == "random") return mc::PhaseRule::Random;
    if (m == "sdp") return mc::PhaseRule::SdpRelax;
    if (m == "greedy") return mc::PhaseRule::Greedy;
    throw std::invalid_argument("not a Monte Carlo method: " + m);
}

int scheme_number(Scheme s) { return s == Scheme::One ? 1 : 2; }

SystemConfig config_for(const ExperimentSpec& spec, int L, Scheme scheme, double omega) {
    SystemConfig cfg = spec.base;
    cfg.L = L;
    cfg.scheme = scheme;
    cfg.omega = omega;
    return cfg;
}

std::string suffix(const ExperimentSpec& spec, int L, Scheme scheme) {
    std::string s;
    if (spec.L_list.size() > 1) s += "_L" + std::to_string(L);
    if (spec.schemes.size() > 1) s += "_s" + std::to_string(scheme_number(scheme));
    return s;
}

bool nu_endpoint(double nu) { return nu == 0.0 || nu == 1.0; }

double analytic_outage(const std::string& m, const SystemConfig& cfg) {
    const double rho = sinr_budget(cfg).rho1;
    const double g = cfg.gamma_th;
    const double s2 = cfg.sigma2;
    if (m == "exact") return analytic::outage_exact(cfg.L, g, rho, s2);
    if (m == "gamma") return analytic::outage_gamma(cfg.L, g, rho, analytic::gamma_approx_params(s2));
    if (m == "clt") return analytic::outage_clt(g, rho, analytic::clt_params(cfg.L, s2));
    if (m == "phase-error") return analytic::outage_phase_error_uniform_pi(cfg.L, g, rho, s2);
    if (m == "asymptotic") {
        const double v = cfg.scheme == Scheme::Two
                             ? analytic::asymptotic_outage(cfg.L, g, cfg.p1_mw, 0.0, 0.0, cfg.noise_mw, s2)
                             : analytic::asymptotic_outage(cfg.L, g, cfg.p1_mw, cfg.omega, cfg.nu, cfg.noise_mw, s2);
        // the high-power law is meaningless where it leaves (0, 1]
        return v > 0.0 && v <= 1.0 ? v : kNaN;
    }
    throw std::invalid_argument("unknown outage method: " + m);
}

double analytic_se(const std::string& m, const SystemConfig& cfg) {
    if (m == "asymptotic") {
        return analytic::asymptotic_se(cfg.L, cfg.p1_mw, cfg.omega, cfg.nu, cfg.noise_mw, cfg.sigma2, cfg.scheme);
    }
    const double rho = sinr_budget(cfg).rho1;
    const double s2 = cfg.sigma2;
    const int L = cfg.L;
    double se = 0.0;
    if (m == "exact") {
        se = L == 1 ? analytic::se_reciprocal(1, rho, s2)
                    : analytic::spectral_efficiency([&](double x) { return analytic::outage_exact(L, x, rho, s2); });
    } else if (m == "gamma") {
        const auto p = analytic::gamma_approx_params(s2);
        se = analytic::spectral_efficiency([&](double x) { return analytic::outage_gamma(L, x, rho, p); });
    } else if (m == "clt") {
        const auto p = analytic::clt_params(L, s2);
        se = analytic::spectral_efficiency([&](double x) { return analytic::outage_clt(x, rho, p); });
    } else if (m == "phase-error") {
        se = analytic::se_phase_error_uniform_pi(L, rho, s2);
    } else {
        throw std::invalid_argument("unknown se method: " + m);
    }
    return cfg.scheme == Scheme::Two ? 0.5 * se : se;
}

struct Column {
    std::string name;
    ColumnFormat format;
    std::vector<double> values;
};

Table assemble(const std::string& first, const std::vector<double>& x, std::vector<Column>& cols) {
    Table t;
    t.add_column(first);
    for (const auto& c : cols) t.add_column(c.name, c.format);
    t.rows.resize(x.size());
    for (std::size_t r = 0; r < x.size(); ++r) {
        t.rows[r].push_back(x[r]);
        for (const auto& c : cols) t.rows[r].push_back(c.values[r]);
    }
    return t;
}

Table run_metric(const ExperimentSpec& spec) {
    const bool outage = spec.command == Command::Outage;
    const std::string metric = outage ? "outage" : "se";
    const ColumnFormat fmt = outage ? ColumnFormat::Scientific : ColumnFormat::General;
    const bool reciprocal = spec.base.reciprocity == Reciprocity::Reciprocal;
    const std::size_t n = spec.p_dbm.size();
    std::vector<Column> cols;

    for (int L : spec.L_list) {
        for (Scheme scheme : spec.schemes) {
            const SystemConfig cfg0 = config_for(spec, L, scheme, spec.base.omega);
            const std::string sfx = suffix(spec, L, scheme);
            for (const auto& m : spec.methods) {
                if (!is_mc(m)) {
                    Column c{m + "_" + metric + sfx, fmt, std::vector<double>(n)};
                    for (std::size_t i = 0; i < n; ++i) {
                        const SystemConfig cfg = mc::at_power(cfg0, spec.p_dbm[i]);
                        c.values[i] = outage ? analytic_outage(m, cfg) : analytic_se(m, cfg);
                    }
                    cols.push_back(std::move(c));
                    continue;
                }
                mc::PhasePolicy policy;
                policy.rule = rule_of(m);
                policy.randomization_candidates = spec.randomization_candidates;
                policy.greedy_grid = spec.greedy_grid;
                // P1 = P2 keeps the budget ratio fixed, so one design serves the whole grid.
                const mc::TrialGains gains =
                    mc::simulate_gains(mc::at_power(cfg0, spec.p_dbm.front()), policy, spec.trials, spec.seed,
                                       spec.workers);
                std::vector<std::pair<std::string, mc::User>> users;
                if (reciprocal) {
                    users.push_back({"", mc::User::One});
                } else {
                    users.push_back({"_u1", mc::User::One});
                    users.push_back({"_u2", mc::User::Two});
                }
                for (const auto& [tag, user] : users) {
                    Column v{m + "_" + metric + tag + sfx, fmt, std::vector<double>(n)};
                    Column e{m + "_" + metric + tag + sfx + "_stderr", fmt, std::vector<double>(n)};
                    for (std::size_t i = 0; i < n; ++i) {
                        const SinrBudget b = sinr_budget(mc::at_power(cfg0, spec.p_dbm[i]));
                        const mc::McEstimate est = outage ? mc::outage_from_gains(gains, b, cfg0.gamma_th, user)
                                                          : mc::se_from_gains(gains, b, user, scheme);
                        v.values[i] = est.value;
                        e.values[i] = est.std_error;
                    }
                    cols.push_back(std::move(v));
                    cols.push_back(std::move(e));
                }
            }
        }
    }
    Table t = assemble("p_dbm", spec.p_dbm, cols);
    t.log_y = outage;
    return t;
}

struct OptimizeRow {
    double t_star = 0.0;
    std::vector<double> values;
};

Table run_optimize(const ExperimentSpec& spec) {
    const SystemConfig cfg = mc::at_power(config_for(spec, spec.L_list.front(), spec.schemes.front(), spec.base.omega),
                                          spec.p_dbm.front());
    const SinrBudget budget = sinr_budget(cfg);
    const std::uint64_t rseed = mc::randomization_seed(spec.seed);
    const bool with_greedy = std::find(spec.methods.begin(), spec.methods.end(), "greedy") != spec.methods.end();
    std::vector<OptimizeRow> rows(spec.trials);

    parallel_for(rows.size(), spec.workers, [&](std::size_t i) {
        Rng rng(spec.seed, i);
        const ChannelRealization ch = sample_channels(cfg, rng);
        const optim::QuadraticFormPair forms = optim::build_quadratic_forms(ch, budget);
        const optim::SdpResult sdp = optim::sdp_maxmin_joint(forms);
        OptimizeRow& row = rows[i];
        row.t_star = sdp.t_star;
        double greedy_objective = kNaN;
        double greedy_sweeps = kNaN;
        for (const auto& m : spec.methods) {
            PhaseVector phases;
            if (m == "sdp") {
                phases = optim::gaussian_randomization(sdp.A_star, forms, spec.randomization_candidates, rseed, i)
                             .phases;
            } else if (m == "greedy") {
                const optim::MaxMinResult g = optim::greedy_iterative(ch, budget, spec.greedy_grid);
                phases = g.phases;
                greedy_objective = g.sweep_objective.empty() ? kNaN : g.sweep_objective.back();
                greedy_sweeps = static_cast<double>(g.iterations);
            } else if (m == "u1") {
                phases = optim::baseline_phases(ch, optim::Method::U1Phase, rng);
            } else {
                phases = optim::baseline_phases(ch, optim::Method::Random, rng);
            }
            const SinrPair s = sinr_nonreciprocal(ch, phases, budget);
            row.values.push_back(s.gamma1);
            row.values.push_back(s.gamma2);
            row.values.push_back(s.min());
        }
        if (with_greedy) {
            row.values.push_back(greedy_objective);
            row.values.push_back(greedy_sweeps);
        }
    });

    Table t;
    t.add_column("trial");
    t.add_column("t_star");
    for (const auto& m : spec.methods) {
        t.add_column(m + "_gamma1");
        t.add_column(m + "_gamma2");
        t.add_column(m + "_min");
    }
    if (with_greedy) {
        t.add_column("greedy_objective");
        t.add_column("greedy_sweeps");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<double> r{static_cast<double>(i), rows[i].t_star};
        r.insert(r.end(), rows[i].values.begin(), rows[i].values.end());
        t.rows.push_back(std::move(r));
    }
    t.log_y = true;
    return t;
}

Table run_crossover(const ExperimentSpec& spec) {
    const std::size_t n = spec.omega_list.size();
    std::vector<Column> cols;
    for (int L : spec.L_list) {
        const std::string sfx = spec.L_list.size() > 1 ? "_L" + std::to_string(L) : "";
        for (const auto& m : spec.methods) {
            Column v{m + "_p_dbm" + sfx, ColumnFormat::General, std::vector<double>(n)};
            Column e{m + "_p_dbm" + sfx + "_stderr", ColumnFormat::General, std::vector<double>(n)};
            for (std::size_t i = 0; i < n; ++i) {
                const SystemConfig cfg = config_for(spec, L, Scheme::One, spec.omega_list[i]);
                if (m == "asymptotic") {
                    v.values[i] = mw_to_dbm(
                        analytic::scheme_crossover_power(L, cfg.omega, cfg.nu, cfg.noise_mw, cfg.sigma2).p_mw);
                    continue;
                }
                try {
                    const mc::Crossover c =
                        mc::find_crossover(cfg, mc::PhasePolicy{}, spec.p_dbm, spec.trials, spec.seed, spec.workers);
                    v.values[i] = c.p_dbm;
                    e.values[i] = c.std_error_db;
                } catch (const NoCrossover&) {
                    v.values[i] = kNaN;
                    e.values[i] = kNaN;
                }
            }
            cols.push_back(std::move(v));
            if (m == "mc") cols.push_back(std::move(e));
        }
    }
    return assemble("omega", spec.omega_list, cols);
}

}  // namespace

Command parse_command(const std::string& name) {
    if (name == "outage") return Command::Outage;
    if (name == "se") return Command::Se;
    if (name == "optimize") return Command::Optimize;
    if (name == "crossover") return Command::Crossover;
    if (name == "reproduce") return Command::Reproduce;
    throw std::invalid_argument("unknown command: " + name);
}

std::string command_name(Command c) {
    switch (c) {
    case Command::Outage: return "outage";
    case Command::Se: return "se";
    case Command::Optimize: return "optimize";
    case Command::Crossover: return "crossover";
    case Command::Reproduce: return "reproduce";
    }
    return "?";
}

void validate(const ExperimentSpec& spec) {
    auto fail = [](const std::string& msg) { throw std::invalid_argument(msg); };
    if (spec.command == Command::Reproduce) fail("reproduce expands into presets before validation");
    if (spec.L_list.empty()) fail("--L: empty list");
    if (spec.p_dbm.empty()) fail("--p-dbm: empty sweep");
    if (spec.methods.empty()) fail("--method: empty list");
    if (spec.schemes.empty()) fail("--scheme: empty list");
    for (int L : spec.L_list) {
        if (L < 1) fail("--L: every entry must be >= 1");
    }
    const bool reciprocal = spec.base.reciprocity == Reciprocity::Reciprocal;
    bool any_mc = false;
    for (const auto& m : spec.methods) {
        const bool mc_method = is_mc(m);
        any_mc = any_mc || mc_method;
        if (!mc_method && kAnalyticMethods.count(m) == 0) fail("--method: unknown method '" + m + "'");
        switch (spec.command) {
        case Command::Outage:
        case Command::Se:
            if (!reciprocal && (m == "mc" || !mc_method)) {
                fail("--method " + m + ": needs a reciprocal channel; use sdp, greedy, u1 or random");
            }
            if (reciprocal && (m == "sdp" || m == "greedy")) {
                fail("--method " + m + ": max-min design needs --reciprocity nonreciprocal");
            }
            if (m == "asymptotic" && !nu_endpoint(spec.base.nu)) fail("--method asymptotic: needs --nu 0 or 1");
            break;
        case Command::Optimize:
            if (m != "sdp" && m != "greedy" && m != "u1" && m != "random") {
                fail("--method " + m + ": optimize takes sdp, greedy, u1, random");
            }
            if (reciprocal) fail("optimize: needs --reciprocity nonreciprocal");
            break;
        case Command::Crossover:
            if (m != "asymptotic" && m != "mc") fail("--method " + m + ": crossover takes asymptotic, mc");
            if (!reciprocal) fail("crossover: needs a reciprocal channel");
            if (!nu_endpoint(spec.base.nu)) fail("crossover: needs --nu 0 or 1");
            if (m == "mc" && spec.p_dbm.size() < 2) fail("crossover: --p-dbm needs at least two points");
            break;
        case Command::Reproduce:
            break;
        }
    }
    if (spec.command == Command::Crossover && spec.omega_list.empty()) fail("--omega: empty list");
    if (any_mc && spec.trials < 1) fail("--trials: must be >= 1");
    if (spec.randomization_candidates < 1) fail("randomization candidates must be >= 1");
    if (spec.greedy_grid < 2) fail("greedy grid must be >= 2");
    for (int L : spec.L_list) {
        for (double omega : spec.omega_list) {
            SystemConfig cfg = config_for(spec, L, spec.schemes.front(), omega);
            cfg.validate();
        }
    }
}

Table run(const ExperimentSpec& spec) {
    validate(spec);
    Table t;
    switch (spec.command) {
    case Command::Outage:
    case Command::Se:
        t = run_metric(spec);
        break;
    case Command::Optimize:
        t = run_optimize(spec);
        break;
    case Command::Crossover:
        t = run_crossover(spec);
        break;
    case Command::Reproduce:
        break;
    }
    t.title = command_name(spec.command);
    return t;
}

}  // namespace ris::cli
