#include "cvxft/io.hpp"
#include "cvxft/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cvxft {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    // prefer the short form when it round-trips
    char shortbuf[40];
    std::snprintf(shortbuf, sizeof(shortbuf), "%.15g", v);
    double back = std::strtod(shortbuf, nullptr);
    return (back == v) ? std::string(shortbuf) : std::string(buf);
}

std::string fmt(int v) { return std::to_string(v); }
std::string fmt(std::size_t v) { return std::to_string(v); }

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != header_.size()) throw Error("csv row width mismatch");
    rows_.push_back(cells);
}

std::string CsvWriter::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
    os << '\n';
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
    }
    return os.str();
}

void CsvWriter::write(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << str();
}

std::map<std::string, std::string> parse_key_value(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto ltrim = line.find_first_not_of(" \t\r");
        if (ltrim == std::string::npos) continue;
        auto rtrim = line.find_last_not_of(" \t\r");
        line = line.substr(ltrim, rtrim - ltrim + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value, got '" + line + "'");
        auto key = line.substr(0, eq);
        auto val = line.substr(eq + 1);
        auto kend = key.find_last_not_of(" \t");
        key = key.substr(0, kend + 1);
        auto vstart = val.find_first_not_of(" \t");
        val = (vstart == std::string::npos) ? "" : val.substr(vstart);
        kv[key] = val;
    }
    return kv;
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_key_value(ss.str());
}

std::vector<Eigen::VectorXd> read_points_csv(const std::string& path, int expected_dim) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read points file '" + path + "'");
    std::vector<Eigen::VectorXd> pts;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto vals = parse_double_list(line);
        if (expected_dim > 0 && int(vals.size()) != expected_dim)
            throw ConfigError("point with wrong dimension in '" + path + "'");
        pts.push_back(Eigen::Map<Eigen::VectorXd>(vals.data(), long(vals.size())));
    }
    return pts;
}

void write_points_csv(const std::string& path, const std::vector<Eigen::VectorXd>& pts) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    for (const auto& p : pts) {
        for (long i = 0; i < p.size(); ++i) f << (i ? "," : "") << fmt(p(i));
        f << '\n';
    }
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(std::stod(tok));
    }
    return out;
}

} // namespace cvxft
