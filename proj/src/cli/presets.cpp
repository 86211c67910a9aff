#include <cmath>
#include <stdexcept>

#include "ris/cli.hpp"
#include "ris/numerics.hpp"

namespace ris::cli {

namespace {

struct Builder {
    const ExperimentSpec& overrides;
    std::string prefix;
    std::vector<ExperimentSpec> out;

    ExperimentSpec& add(const std::string& part, Command cmd, std::uint64_t default_trials) {
        ExperimentSpec s;
        s.command = cmd;
        s.trials = overrides.trials ? overrides.trials : default_trials;
        s.seed = overrides.seed;
        s.workers = overrides.workers;
        s.output = prefix + "_" + part + ".csv";
        if (!overrides.svg.empty()) s.svg = prefix + "_" + part + ".svg";
        out.push_back(s);
        return out.back();
    }
};

std::vector<double> decades(int lo, int hi) {
    std::vector<double> v;
    for (int e = lo; e <= hi; ++e) v.push_back(std::pow(10.0, e));
    return v;
}

std::string delta_tag(int eighths) { return "delta" + std::to_string(eighths) + "pi8"; }

}  // namespace

std::vector<std::string> preset_names() { return {"fig3", "fig4", "fig5", "fig6", "fig7", "fig8"}; }

std::vector<ExperimentSpec> preset(const std::string& figure, const ExperimentSpec& overrides,
                                   const std::string& prefix) {
    const bool dir = !prefix.empty() && prefix.back() == '/';
    Builder b{overrides, prefix.empty() || dir ? prefix + figure : prefix, {}};
    const double pi = numerics::kPi;

    if (figure == "fig3") {
        // single element, reciprocal: exact law against simulation, both interference laws
        for (double nu : {0.0, 1.0}) {
            const std::string tag = nu == 0.0 ? "nu0" : "nu1";
            auto& o = b.add("outage_" + tag, Command::Outage, 1000000);
            o.base.nu = nu;
            o.p_dbm = parse_range("-40:40:2");
            o.methods = {"mc", "exact", "asymptotic"};
            auto& s = b.add("se_" + tag, Command::Se, 100000);
            s.base.nu = nu;
            s.p_dbm = parse_range("-40:40:2");
            s.schemes = {Scheme::One, Scheme::Two};
            s.methods = {"mc", "exact", "asymptotic"};
        }
    } else if (figure == "fig4") {
        auto& o = b.add("outage", Command::Outage, 1000000);
        o.L_list = {2, 4, 16, 32, 64};
        o.p_dbm = parse_range("-70:30:2");
        o.methods = {"mc", "gamma", "clt", "asymptotic"};
    } else if (figure == "fig5") {
        for (double nu : {0.0, 1.0}) {
            auto& s = b.add(nu == 0.0 ? "se_nu0" : "se_nu1", Command::Se, 10000);
            s.base.nu = nu;
            s.base.noise_mw = 1e-10;
            s.L_list = {2, 16, 64};
            s.schemes = {Scheme::One, Scheme::Two};
            s.p_dbm = parse_range("-40:40:2");
            s.methods = {"mc", "gamma", "asymptotic"};
        }
    } else if (figure == "fig6") {
        for (double nu : {0.0, 1.0}) {
            auto& c = b.add(nu == 0.0 ? "boundary_nu0" : "boundary_nu1", Command::Crossover, 10000);
            c.base.nu = nu;
            c.base.noise_mw = 1e-10;
            c.L_list = {2, 16, 64};
            c.omega_list = decades(-14, -2);
            c.p_dbm = parse_range("-160:60:2");
            c.methods = {"asymptotic", "mc"};
        }
    } else if (figure == "fig7") {
        for (int eighths : {0, 1, 2, 4, 8}) {
            const PhaseErrorModel pe =
                eighths == 0 ? PhaseErrorModel::none() : PhaseErrorModel::uniform(eighths * pi / 8.0);
            auto& o = b.add("outage_" + delta_tag(eighths), Command::Outage, 1000000);
            o.base.phase_error = pe;
            o.L_list = {4, 16};
            o.p_dbm = parse_range("-40:40:2");
            o.methods = {"mc"};
            if (eighths == 8) o.methods.push_back("phase-error");
            auto& s = b.add("se_" + delta_tag(eighths), Command::Se, 10000);
            s.base.phase_error = pe;
            s.L_list = {4, 32};
            s.p_dbm = parse_range("-40:40:2");
            s.methods = {"mc"};
            if (eighths == 8) s.methods.push_back("phase-error");
        }
    } else if (figure == "fig8") {
        auto& a = b.add("se_L8", Command::Se, 1000);
        a.base.reciprocity = Reciprocity::NonReciprocal;
        a.L_list = {8};
        a.p_dbm = parse_range("-20:30:2");
        a.methods = {"sdp", "greedy", "u1", "random"};
        auto& r = b.add("se_reciprocal", Command::Se, 1000);
        r.L_list = {1, 2, 4, 16};
        r.p_dbm = parse_range("-30:30:2");
        r.methods = {"mc"};
        auto& n = b.add("se_nonreciprocal", Command::Se, 1000);
        n.base.reciprocity = Reciprocity::NonReciprocal;
        n.L_list = {1, 2, 4, 16};
        n.p_dbm = parse_range("-30:30:2");
        n.methods = {"sdp"};
    } else {
        throw std::invalid_argument("reproduce: unknown figure '" + figure + "' (fig3..fig8)");
    }
    return b.out;
}

}  // namespace ris::cli
