#include "cvxft/packing.hpp"
#include "cvxft/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cvxft {

namespace {

// pack per-dimension cell indices into one 64-bit key (21 bits each, offset)
std::uint64_t pack_cells(const int* c, int dim) {
    std::uint64_t key = 0;
    for (int j = 0; j < dim; ++j) {
        std::uint64_t v = std::uint64_t(std::int64_t(c[j]) + (1 << 20)) & ((1 << 21) - 1);
        key = (key << 21) | v;
    }
    return key;
}

std::vector<int> sorted_lex_order(const std::vector<Vec>& pts) {
    std::vector<int> order(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Vec &pa = pts[a], &pb = pts[b];
        for (long j = 0; j < pa.size(); ++j) {
            if (pa(j) != pb(j)) return pa(j) < pb(j);
        }
        return a < b;
    });
    return order;
}

} // namespace

SeparatedSet::SeparatedSet(int dim, double cell_side) : dim_(dim), side_(cell_side) {
    if (dim < 1 || dim > 3) throw DomainError("separated set supports d in {1,2,3}");
    if (cell_side <= 0.0) throw DomainError("cell side must be positive");
}

std::uint64_t SeparatedSet::cell_key(const Vec& p) const {
    int c[3] = {0, 0, 0};
    for (int j = 0; j < dim_; ++j) c[j] = int(std::floor(p(j) / side_));
    return pack_cells(c, dim_);
}

template <typename Fn>
void SeparatedSet::for_neighbor_cells(const Vec& p, Fn&& fn) const {
    int c[3] = {0, 0, 0};
    for (int j = 0; j < dim_; ++j) c[j] = int(std::floor(p(j) / side_));
    int lo[3] = {0, 0, 0}, hi[3] = {0, 0, 0};
    for (int j = 0; j < dim_; ++j) {
        lo[j] = c[j] - 1;
        hi[j] = c[j] + 1;
    }
    int it[3];
    for (it[0] = lo[0]; it[0] <= hi[0]; ++it[0])
        for (it[1] = (dim_ > 1 ? lo[1] : 0); it[1] <= (dim_ > 1 ? hi[1] : 0); ++it[1])
            for (it[2] = (dim_ > 2 ? lo[2] : 0); it[2] <= (dim_ > 2 ? hi[2] : 0); ++it[2]) {
                auto found = cells_.find(pack_cells(it, dim_));
                if (found != cells_.end()) fn(found->second);
            }
}

void SeparatedSet::insert(const Vec& p) {
    cells_[cell_key(p)].push_back(int(points_.size()));
    points_.push_back(p);
}

bool SeparatedSet::has_neighbor_within(const Vec& p, double dist) const {
    bool hit = false;
    for_neighbor_cells(p, [&](const std::vector<int>& idx) {
        if (hit) return;
        for (int i : idx) {
            if ((points_[i] - p).norm() < dist) {
                hit = true;
                return;
            }
        }
    });
    return hit;
}

GreedyPack greedy_pack(const std::vector<Vec>& points, double separation) {
    if (separation <= 0.0) throw DomainError("separation must be positive");
    GreedyPack out{0, {}};
    if (points.empty()) return out;
    SeparatedSet set(int(points.front().size()), separation);
    for (int i : sorted_lex_order(points)) {
        if (!set.has_neighbor_within(points[i], separation)) set.insert(points[i]);
    }
    out.count = set.size();
    out.retained = set.points();
    return out;
}

GreedyPack greedy_pack_nohash(const std::vector<Vec>& points, double separation) {
    if (separation <= 0.0) throw DomainError("separation must be positive");
    GreedyPack out{0, {}};
    for (int i : sorted_lex_order(points)) {
        bool ok = true;
        for (const Vec& q : out.retained) {
            if ((points[i] - q).norm() < separation) {
                ok = false;
                break;
            }
        }
        if (ok) out.retained.push_back(points[i]);
    }
    out.count = out.retained.size();
    return out;
}

std::size_t cell_upper_bound(const std::vector<Vec>& points, int dim) {
    if (points.empty()) return 0;
    double side = 0.99 / std::sqrt(double(dim));
    SeparatedSet set(dim, side);
    std::size_t occupied = 0;
    std::unordered_map<std::uint64_t, bool> seen;
    for (const Vec& p : points) {
        int c[3] = {0, 0, 0};
        for (int j = 0; j < dim; ++j) c[j] = int(std::floor(p(j) / side));
        if (seen.emplace(pack_cells(c, dim), true).second) ++occupied;
    }
    return occupied;
}

ExponentFit fit_exponent(const std::vector<std::pair<double, double>>& rows) {
    if (rows.size() < 3) throw InsufficientDataError("exponent fit needs >= 3 rows");
    double rmin = rows.front().first, rmax = rows.front().first;
    for (const auto& [R, v] : rows) {
        if (!(v > 0.0)) throw DomainError("exponent fit needs positive values");
        if (!(R > 0.0)) throw DomainError("exponent fit needs positive R");
        rmin = std::min(rmin, R);
        rmax = std::max(rmax, R);
    }
    if (rmax < 4.0 * rmin - 1e-12)
        throw InsufficientDataError("R values must span at least a factor 4");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = double(rows.size());
    for (const auto& [R, v] : rows) {
        double x = std::log(R), y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - slope * sx) / n;
    double ss = 0;
    for (const auto& [R, v] : rows) {
        double e = std::log(v) - (slope * std::log(R) + intercept);
        ss += e * e;
    }
    return {slope, intercept, std::sqrt(ss / n)};
}

void fit_scaling_report(ScalingReport& report) {
    std::vector<std::pair<double, double>> lo, hi;
    report.fits_defined = !report.rows.empty();
    for (const auto& r : report.rows) {
        if (r.entropy_lower == 0 || r.entropy_upper == 0) report.fits_defined = false;
        lo.emplace_back(r.R, double(r.entropy_lower));
        hi.emplace_back(r.R, double(r.entropy_upper));
    }
    if (report.fits_defined) {
        report.lower_fit = fit_exponent(lo);
        report.upper_fit = fit_exponent(hi);
    }
}

} // namespace cvxft
