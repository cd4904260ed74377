#include "cvxft/spectra.hpp"
#include "cvxft/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cvxft {

double pair_orthogonality(const Body& body, const Vec& lambda, const Vec& mu, Method method,
                          int resolution) {
    Vec d = lambda - mu;
    if (d.norm() == 0.0)
        throw DomainError("pair orthogonality needs distinct points (|<e,e>| is the volume)");
    TransformEvaluator ev(body, method, resolution);
    return std::fabs(ev(d));
}

double pair_orthogonality(const Body& body, const Vec& lambda, const Vec& mu) {
    bool closed = body.kind == BodyKind::Cube ||
                  (body.kind == BodyKind::Ball && body.dim <= 3);
    return pair_orthogonality(body, lambda, mu, closed ? Method::Closed : Method::Herz, 2048);
}

CandidateSpectrum lattice_spectrum(const Body& cube, const Ball& B) {
    if (cube.kind != BodyKind::Cube)
        throw MethodUnavailableError("lattice spectrum is constructed for cubes");
    double step = 1.0 / (2.0 * cube.half_side);
    int d = cube.dim;
    CandidateSpectrum spec;
    spec.body = cube;
    spec.generator = "cube-lattice";
    // iterate the integer box around B, keep points inside
    std::vector<long> lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
        lo[j] = long(std::ceil((B.center(j) - B.radius) / step));
        hi[j] = long(std::floor((B.center(j) + B.radius) / step));
    }
    std::vector<long> it(lo);
    while (true) {
        Vec p(d);
        for (int j = 0; j < d; ++j) p(j) = it[j] * step;
        if (B.contains(p)) spec.points.push_back(p);
        int j = 0;
        while (j < d && ++it[j] > hi[j]) {
            it[j] = lo[j];
            ++j;
        }
        if (j == d) break;
    }
    return spec;
}

double min_gap(const std::vector<Vec>& points) {
    if (points.size() < 2) throw InsufficientDataError("min gap needs at least two points");
    int d = int(points.front().size());
    // coarse-to-fine: start from a generous cell, shrink until the hash resolves it
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < points.size() && i < 64; ++i)
        best = std::min(best, (points[i] - points[0]).norm());
    while (true) {
        SeparatedSet set(d, std::max(best, 1e-12));
        bool improved = false;
        for (const Vec& p : points) {
            if (set.has_neighbor_within(p, best)) {
                // a closer pair exists; find it exactly within the neighborhood
                for (const Vec& q : set.points()) {
                    double dd = (p - q).norm();
                    if (dd < best) {
                        best = dd;
                        improved = true;
                    }
                }
            }
            set.insert(p);
        }
        if (!improved) break;
    }
    return best;
}

std::vector<std::size_t> density_count(const std::vector<Vec>& points,
                                       const std::vector<Ball>& balls) {
    std::vector<std::size_t> out;
    out.reserve(balls.size());
    for (const Ball& b : balls) {
        std::size_t c = 0;
        for (const Vec& p : points)
            if (b.contains(p)) ++c;
        out.push_back(c);
    }
    return out;
}

Prop02Result prop02_pipeline(const Body& body, const CandidateSpectrum& spectrum, double R) {
    if (body.kind != BodyKind::Cube)
        throw MethodUnavailableError("the exact pipeline is run on the cube spectrum");
    int d = body.dim;
    Prop02Result res;
    res.B = Ball{Vec::Zero(d), R};
    res.B1 = Ball{Vec::Zero(d), 0.5 * R}; // B1 - B2 = Ball(0, R) = B
    res.B2 = Ball{Vec::Zero(d), 0.5 * R};

    // pick lambda1, lambda2 in B1 with |lambda1 - lambda2| in [0.5, 2]:
    // deterministic scan from the origin outward
    std::vector<Vec> inB1;
    for (const Vec& p : spectrum.points)
        if (res.B1.contains(p)) inB1.push_back(p);
    std::sort(inB1.begin(), inB1.end(), [](const Vec& a, const Vec& b) {
        double na = a.norm(), nb = b.norm();
        if (na != nb) return na < nb;
        for (long j = 0; j < a.size(); ++j)
            if (a(j) != b(j)) return a(j) < b(j);
        return false;
    });
    bool found = false;
    for (std::size_t i = 0; i < inB1.size() && !found; ++i)
        for (std::size_t j = i + 1; j < inB1.size() && !found; ++j) {
            double g = (inB1[i] - inB1[j]).norm();
            if (g >= 0.5 && g <= 2.0) {
                res.lambda1 = inB1[i];
                res.lambda2 = inB1[j];
                found = true;
            }
        }
    if (!found)
        throw DensityFailureError("no spectrum pair at distance ~1 inside B1; "
                                  "the candidate is not behaving like a spectrum");
    res.eta = res.lambda2 - res.lambda1;

    // translated set (B2 cap Lambda) - lambda2, each member verified to lie in X
    double worst = 0.0;
    for (const Vec& lam : spectrum.points) {
        if (!res.B2.contains(lam)) continue;
        Vec xi = lam - res.lambda2;
        Vec xe = lam - res.lambda1; // xi + eta
        if (xi.norm() == 0.0 || xe.norm() == 0.0) continue; // lambda = lambda_i themselves
        if (!res.B.contains(xi) || !res.B.contains(xe)) continue;
        double r1 = pair_orthogonality(body, lam, res.lambda2);
        double r2 = pair_orthogonality(body, lam, res.lambda1);
        worst = std::max({worst, r1, r2});
        if (r1 > 1e-10 || r2 > 1e-10) continue; // not certified: drop, count in residual
        res.points.push_back(xi);
    }
    res.max_orthogonality_residual = worst;
    res.entropy_lower = greedy_pack(res.points, 1.0).count;
    res.entropy_upper = cell_upper_bound(res.points, d);
    return res;
}

} // namespace cvxft
