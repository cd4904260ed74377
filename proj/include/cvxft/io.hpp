#ifndef CVXFT_IO_HPP
#define CVXFT_IO_HPP

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

namespace cvxft {

// shortest round-trip decimal formatting, so identical runs give identical files
std::string fmt(double v);
std::string fmt(int v);
std::string fmt(std::size_t v);

// A plain CSV table: header once, then rows; writes with '\n' endings.
class CsvWriter {
  public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    void write(const std::string& path) const;
    std::string str() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

// flat key=value text config; '#' starts a comment, blank lines ignored
std::map<std::string, std::string> parse_key_value(const std::string& text);
std::map<std::string, std::string> read_key_value_file(const std::string& path);

// one point per line, comma-separated coordinates
std::vector<Eigen::VectorXd> read_points_csv(const std::string& path, int expected_dim);
void write_points_csv(const std::string& path, const std::vector<Eigen::VectorXd>& pts);

std::vector<double> parse_double_list(const std::string& csv);

} // namespace cvxft

#endif
