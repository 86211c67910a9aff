#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "ris/cli.hpp"

namespace ris::cli {

namespace {

std::string format_value(double v, ColumnFormat fmt) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (fmt == ColumnFormat::Scientific) return fmt::format("{:.9e}", v);
    return fmt::format("{:.10g}", v);
}

double parse_double(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument(what + ": cannot parse '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

}  // namespace

void Table::add_column(std::string name, ColumnFormat fmt) {
    header.push_back(std::move(name));
    format.push_back(fmt);
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw std::out_of_range("no column " + name);
}

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c) out += ',';
        out += table.header[c];
    }
    out += "\r\n";
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_value(row[c], table.format[c]);
        }
        out += "\r\n";
    }
    return out;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << contents;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::vector<double> parse_range(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) return {parse_double(parts[0], "range")};
    if (parts.size() != 3) throw std::invalid_argument("range: expected start:stop:step, got '" + text + "'");
    const double a = parse_double(parts[0], "range start");
    const double b = parse_double(parts[1], "range stop");
    const double step = parse_double(parts[2], "range step");
    if (!(step > 0.0) || b < a) throw std::invalid_argument("range: need step > 0 and stop >= start in '" + text + "'");
    const auto n = static_cast<long>(std::floor((b - a) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) out.push_back(a + static_cast<double>(i) * step);
    return out;
}

PhaseErrorModel parse_phase_error(const std::string& text) {
    const auto parts = split(text, ':');
    if (parts.empty() || parts[0] == "none") {
        if (parts.size() > 1) throw std::invalid_argument("--phase-error none takes no parameters");
        return PhaseErrorModel::none();
    }
    if (parts[0] == "uniform" && parts.size() == 2) {
        return PhaseErrorModel::uniform(parse_double(parts[1], "--phase-error uniform delta"));
    }
    if (parts[0] == "vonmises" && parts.size() == 3) {
        return PhaseErrorModel::von_mises(parse_double(parts[1], "--phase-error vonmises mu"),
                                          parse_double(parts[2], "--phase-error vonmises kappa"));
    }
    throw std::invalid_argument("--phase-error: expected none, uniform:delta or vonmises:mu:kappa, got '" + text +
                                "'");
}

}  // namespace ris::cli
