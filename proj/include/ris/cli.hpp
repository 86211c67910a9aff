#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ris/channel.hpp"

namespace ris::cli {

enum class Command { Outage, Se, Optimize, Crossover, Reproduce };

Command parse_command(const std::string& name);
std::string command_name(Command c);

struct ExperimentSpec {
    Command command = Command::Outage;
    std::string figure;  // reproduce only
    SystemConfig base;   // L, scheme and omega are taken from the lists below
    std::vector<int> L_list{1};
    std::vector<Scheme> schemes{Scheme::One};
    std::vector<double> p_dbm{0.0};
    std::vector<double> omega_list{1e-4};  // crossover sweeps omega
    std::vector<std::string> methods{"mc"};
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
    int randomization_candidates = 100;
    int greedy_grid = 360;
    std::string output;
    std::string svg;
};

/// Throws std::invalid_argument with a one-line message.
void validate(const ExperimentSpec& spec);

enum class ColumnFormat { General, Scientific };

struct Table {
    std::vector<std::string> header;
    std::vector<ColumnFormat> format;
    std::vector<std::vector<double>> rows;
    bool log_y = false;
    std::string title;

    void add_column(std::string name, ColumnFormat fmt = ColumnFormat::General);
    std::size_t column(const std::string& name) const;  // throws std::out_of_range
};

/// Runs one non-reproduce spec.
Table run(const ExperimentSpec& spec);

/// Expands `reproduce figN` into the specs behind that figure; outputs are
/// `<prefix>_<part>.csv`.  Trials and seed of `overrides` are honoured when
/// nonzero.
std::vector<ExperimentSpec> preset(const std::string& figure, const ExperimentSpec& overrides,
                                   const std::string& prefix);
std::vector<std::string> preset_names();

std::string to_csv(const Table& table);
std::string to_svg(const Table& table);

void write_file(const std::string& path, const std::string& contents);

/// "a:b:c" inclusive grid with step c; a single number gives one point.
std::vector<double> parse_range(const std::string& text);
/// none | uniform:delta | vonmises:mu:kappa (radians).
PhaseErrorModel parse_phase_error(const std::string& text);

}  // namespace ris::cli
