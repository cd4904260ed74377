#ifndef CVXFT_PACKING_HPP
#define CVXFT_PACKING_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace cvxft {

using Vec = Eigen::VectorXd;

// Point collection with a uniform grid hash (cell side = separation) so that
// all points within the separation of p live in the 3^d cells around p's.
class SeparatedSet {
  public:
    SeparatedSet(int dim, double cell_side);

    void insert(const Vec& p);
    std::size_t size() const { return points_.size(); }
    const std::vector<Vec>& points() const { return points_; }

    // true iff some stored point is strictly closer than dist
    bool has_neighbor_within(const Vec& p, double dist) const;

  private:
    int dim_;
    double side_;
    std::vector<Vec> points_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;

    std::uint64_t cell_key(const Vec& p) const;
    template <typename Fn> void for_neighbor_cells(const Vec& p, Fn&& fn) const;
};

struct GreedyPack {
    std::size_t count;
    std::vector<Vec> retained;
};

// Deterministic lexicographic-scan greedy packing: a point is kept iff its
// distance to every previously kept point is >= separation. The result is a
// maximal separated subset, so count bounds the entropy from below up to the
// dimensional kissing constant (<= 19 in d=2).
GreedyPack greedy_pack(const std::vector<Vec>& points, double separation = 1.0);

// slow reference used by the equivalence tests
GreedyPack greedy_pack_nohash(const std::vector<Vec>& points, double separation = 1.0);

// Occupied cells of a grid with side 0.99/sqrt(d): cell diameter < 1, so any
// 1-separated subset of the input has at most one point per cell.
std::size_t cell_upper_bound(const std::vector<Vec>& points, int dim);

struct ExponentFit {
    double slope;
    double intercept;
    double residual; // rms of log residuals
};

// Least squares line through (log R, log value). Values must be positive,
// >= 3 rows, R spanning at least a factor 4.
ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& rows);

// One scaling experiment: entropy bounds per R for a fixed (body, eta).
struct ScalingRow {
    double R;
    std::size_t entropy_lower; // greedy count
    std::size_t entropy_upper; // occupied-cell count
    std::size_t samples;       // X samples before packing
    double tol;
};

struct ScalingReport {
    std::string body_id;
    Vec eta;
    std::vector<ScalingRow> rows;
    ExponentFit lower_fit{0, 0, 0};
    ExponentFit upper_fit{0, 0, 0};
    bool fits_defined = false; // false when some row has zero entropy
};

// fits both bounds when every row is positive; otherwise marks fits undefined
void fit_scaling_report(ScalingReport& report);

} // namespace cvxft

#endif
