#include "cvxft/zeroset.hpp"
#include "cvxft/errors.hpp"
#include "cvxft/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cvxft {

namespace {

constexpr double kBisectTol = 1e-10;
constexpr double kExactZero = 1e-8; // "identically on the zero set" threshold

double bessel_i0(double x) {
    double t = 0.25 * x * x, term = 1.0, sum = 1.0;
    for (int k = 1; k < 64; ++k) {
        term *= t / (double(k) * double(k));
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}

double clamp_unit(double c) { return std::min(1.0, std::max(-1.0, c)); }

struct Bisection {
    double root;
    double residual;
};

template <typename F>
Bisection bisect(const F& f, double a, double b, double fa, double fb) {
    for (int it = 0; it < 80 && (b - a) > kBisectTol; ++it) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return {m, 0.0};
        if ((fa < 0.0) != (fm < 0.0)) {
            b = m;
            fb = fm;
        } else {
            a = m;
            fa = fm;
        }
    }
    double m = 0.5 * (a + b);
    (void)fb;
    return {m, std::fabs(f(m))};
}

bool evaluator_is_expensive(const TransformEvaluator& ev) {
    return ev.method() == Method::Herz || ev.method() == Method::Quadrature;
}

// core scan shared by radial_zeros and zero_distance
template <typename F>
RadialZeros scan_roots(const F& f, double r_min, double r_max, double h) {
    RadialZeros out;
    int n = std::max(2, int(std::ceil((r_max - r_min) / h)) + 1);
    std::vector<double> rs(n), vs(n);
    for (int i = 0; i < n; ++i) {
        rs[i] = std::min(r_min + i * h, r_max);
        vs[i] = f(rs[i]);
    }
    double amp = 0.0;
    for (double v : vs) amp = std::max(amp, std::fabs(v));
    if (amp == 0.0) return out;
    int shell = 0;
    for (int i = 0; i < n; ++i) {
        if (vs[i] == 0.0) {
            out.samples.push_back({Vec(), rs[i], 0.0, shell++});
            continue;
        }
        if (i + 1 < n && vs[i + 1] != 0.0 && (vs[i] < 0.0) != (vs[i + 1] < 0.0)) {
            Bisection b = bisect(f, rs[i], rs[i + 1], vs[i], vs[i + 1]);
            out.samples.push_back({Vec(), b.root, b.residual, shell++});
        }
        // grazing: |f| dips near zero without changing sign
        if (i > 0 && i + 1 < n && std::fabs(vs[i]) <= 1e-3 * amp &&
            std::fabs(vs[i]) < std::fabs(vs[i - 1]) && std::fabs(vs[i]) <= std::fabs(vs[i + 1]) &&
            (vs[i - 1] < 0.0) == (vs[i] < 0.0) && (vs[i + 1] < 0.0) == (vs[i] < 0.0))
            ++out.grazing_flags;
    }
    return out;
}

} // namespace

BandlimitedProfile::BandlimitedProfile(const std::function<double(double)>& f, double r_lo,
                                       double r_hi, double bandwidth) {
    taps_ = 16;
    h_ = 1.0 / (8.0 * bandwidth);
    r0_ = r_lo - (taps_ + 2) * h_;
    int n = int(std::ceil((r_hi + (taps_ + 2) * h_ - r0_) / h_)) + 2;
    vals_.resize(n);
    for (int i = 0; i < n; ++i) vals_[i] = f(r0_ + i * h_);
    // Kaiser window values are computed per tap offset at call time; nothing
    // else to precompute here.
    lut_scale_ = 1.0 / bessel_i0(14.0);
    kernel_lut_.clear();
}

double BandlimitedProfile::operator()(double r) const {
    double t = (r - r0_) / h_;
    int j0 = int(std::floor(t));
    double sum = 0.0;
    const double beta = 14.0;
    for (int j = j0 - taps_ + 1; j <= j0 + taps_; ++j) {
        if (j < 0 || j >= int(vals_.size())) continue;
        double d = t - j;
        double s = (d == 0.0) ? 1.0 : std::sin(M_PI * d) / (M_PI * d);
        double u = d / taps_;
        double w = (std::fabs(u) >= 1.0) ? 0.0 : bessel_i0(beta * std::sqrt(1.0 - u * u)) * lut_scale_;
        sum += vals_[j] * s * w;
    }
    return sum;
}

RadialZeros radial_zeros(const TransformEvaluator& ev, const Vec& u, double r_min, double r_max,
                         double step) {
    if (!(r_min > 0.0) || !(r_min < r_max)) throw DomainError("need 0 < r_min < r_max");
    Vec un = u / u.norm();
    double P = support(ev.body(), un);
    double hmax = 1.0 / (8.0 * P);
    if (step == 0.0) step = hmax;
    if (step > hmax * (1.0 + 1e-12))
        throw ResolutionError("radial scan step exceeds 1/(8 P(u))");
    RadialZeros out;
    if (evaluator_is_expensive(ev)) {
        BandlimitedProfile prof(ev.radial(un), r_min, r_max, P);
        out = scan_roots([&](double r) { return prof(r); }, r_min, r_max, step);
    } else {
        auto f = ev.radial(un);
        out = scan_roots(f, r_min, r_max, step);
    }
    for (auto& s : out.samples) s.direction = un;
    return out;
}

namespace {

ZeroDistance zero_distance_impl(const TransformEvaluator& ev, const Vec& xi, bool signed_out) {
    if (xi.norm() == 0.0) throw DomainError("zero frequency vector");
    Vec un = xi / xi.norm();
    double r0 = xi.norm();
    double P = support(ev.body(), un);
    double period = 1.0 / P;
    double lo = std::max(1e-9, r0 - 0.5 * period);
    double hi = r0 + 0.5 * period;
    RadialZeros rz = radial_zeros(ev, un, lo, hi);
    if (rz.samples.empty()) return {period, false};
    double best = period;
    for (const auto& s : rz.samples) {
        double d = r0 - s.radius;
        if (std::fabs(d) < std::fabs(best)) best = d;
    }
    return {signed_out ? best : std::fabs(best), true};
}

} // namespace

ZeroDistance zero_distance(const TransformEvaluator& ev, const Vec& xi) {
    return zero_distance_impl(ev, xi, false);
}

ZeroDistance zero_distance_signed(const TransformEvaluator& ev, const Vec& xi) {
    return zero_distance_impl(ev, xi, true);
}

std::vector<ZeroSample> ShellGrid::flatten() const {
    std::vector<ZeroSample> out;
    for (const auto& ray : rays)
        out.insert(out.end(), ray.zeros.begin(), ray.zeros.end());
    return out;
}

namespace {

// directions of the cap of rays that meet B, as a quasi-uniform grid
ShellGrid make_grid_2d(const NormalCone& cone, const Ball& B, int n_dirs, double angular_c) {
    double dist = B.center.norm();
    if (dist <= B.radius) throw DomainError("B must not contain the origin");
    double w = std::asin(B.radius / dist);
    double axis_angle = std::atan2(B.center(1), B.center(0));
    Vec baxis(2);
    baxis << std::cos(axis_angle), std::sin(axis_angle);
    double off = std::acos(clamp_unit(baxis.dot(cone.axis)));
    if (off + w > cone.half_angle + 1e-12)
        throw DomainError("B is not contained in the cone's interior");
    if (n_dirs < 2) throw ResolutionError("need at least 2 directions");
    double spacing = 2.0 * w / (n_dirs - 1);
    if (spacing > angular_c / B.radius * (1.0 + 1e-12))
        throw ResolutionError("cap spacing coarser than c/R");
    ShellGrid grid;
    grid.angular_spacing = spacing;
    grid.rays.resize(n_dirs);
    for (int i = 0; i < n_dirs; ++i) {
        double th = axis_angle - w + i * spacing;
        Vec u(2);
        u << std::cos(th), std::sin(th);
        grid.rays[i].u = u;
        if (i > 0) grid.rays[i].neighbors.push_back(i - 1);
        if (i + 1 < n_dirs) grid.rays[i].neighbors.push_back(i + 1);
    }
    return grid;
}

ShellGrid make_grid_3d(const NormalCone& cone, const Ball& B, int n_dirs, double angular_c) {
    double dist = B.center.norm();
    if (dist <= B.radius) throw DomainError("B must not contain the origin");
    double w = std::asin(B.radius / dist);
    Vec a = B.center / dist;
    double off = std::acos(clamp_unit(a.dot(cone.axis)));
    if (off + w > cone.half_angle + 1e-12)
        throw DomainError("B is not contained in the cone's interior");
    double cap_area = 2.0 * M_PI * (1.0 - std::cos(w));
    double delta = std::sqrt(cap_area / std::max(2, n_dirs));
    if (delta > angular_c / B.radius * (1.0 + 1e-12))
        throw ResolutionError("cap spacing coarser than c/R");
    // orthonormal frame around the cap axis
    Vec e1 = Vec::Zero(3);
    e1(std::fabs(a(0)) < 0.9 ? 0 : 1) = 1.0;
    e1 -= a * a.dot(e1);
    e1.normalize();
    Vec e2(3);
    e2 << a(1) * e1(2) - a(2) * e1(1), a(2) * e1(0) - a(0) * e1(2), a(0) * e1(1) - a(1) * e1(0);

    ShellGrid grid;
    grid.angular_spacing = delta;
    int K = std::max(1, int(std::ceil(w / delta)));
    std::vector<std::vector<int>> ring_idx;
    for (int k = 0; k <= K; ++k) {
        double th = w * k / K;
        int m = (k == 0) ? 1 : std::max(1, int(std::ceil(2.0 * M_PI * std::sin(th) / delta)));
        std::vector<int> idx;
        for (int j = 0; j < m; ++j) {
            double phi = 2.0 * M_PI * (j + 0.5 * (k % 2)) / m;
            Vec u = std::cos(th) * a + std::sin(th) * (std::cos(phi) * e1 + std::sin(phi) * e2);
            ShellRay ray;
            ray.u = u;
            idx.push_back(int(grid.rays.size()));
            grid.rays.push_back(std::move(ray));
        }
        ring_idx.push_back(idx);
    }
    // ring-internal neighbors plus the azimuthally nearest ray in adjacent rings
    auto azimuth = [&](int i) {
        const Vec& u = grid.rays[i].u;
        return std::atan2(u.dot(e2), u.dot(e1));
    };
    for (int k = 0; k <= K; ++k) {
        const auto& ring = ring_idx[k];
        int m = int(ring.size());
        for (int j = 0; j < m; ++j) {
            int i = ring[j];
            if (m > 1) {
                grid.rays[i].neighbors.push_back(ring[(j + 1) % m]);
                grid.rays[i].neighbors.push_back(ring[(j + m - 1) % m]);
            }
            for (int kk : {k - 1, k + 1}) {
                if (kk < 0 || kk > K) continue;
                const auto& other = ring_idx[kk];
                int best = other[0];
                double besta = 1e9, az = azimuth(i);
                for (int cand : other) {
                    double d = std::fabs(std::remainder(azimuth(cand) - az, 2.0 * M_PI));
                    if (d < besta) {
                        besta = d;
                        best = cand;
                    }
                }
                grid.rays[i].neighbors.push_back(best);
            }
        }
    }
    return grid;
}

// [r-, r+] window of the ray t*u inside B; false when the ray misses B
bool ray_window(const Vec& u, const Ball& B, double& rlo, double& rhi) {
    double b = u.dot(B.center);
    double disc = b * b - (B.center.squaredNorm() - B.radius * B.radius);
    if (disc <= 0.0 || b <= 0.0) return false;
    double s = std::sqrt(disc);
    rlo = std::max(1e-9, b - s);
    rhi = b + s;
    return rhi > rlo;
}

} // namespace

ShellGrid shell_index_grid(const TransformEvaluator& ev, const NormalCone& cone, const Ball& B,
                           int n_dirs, double angular_c) {
    ShellGrid grid = (B.center.size() == 2) ? make_grid_2d(cone, B, n_dirs, angular_c)
                                            : make_grid_3d(cone, B, n_dirs, angular_c);
    parallel_for(grid.rays.size(), [&](std::size_t i) {
        ShellRay& ray = grid.rays[i];
        double rlo, rhi;
        if (!ray_window(ray.u, B, rlo, rhi)) return;
        RadialZeros rz = radial_zeros(ev, ray.u, rlo, rhi);
        ray.zeros = std::move(rz.samples);
        ray.grazing_flags = rz.grazing_flags;
    });
    return grid;
}

std::vector<ZeroSample> shell_index(const TransformEvaluator& ev, const NormalCone& cone,
                                    const Ball& B, int n_dirs, double angular_c) {
    return shell_index_grid(ev, cone, B, n_dirs, angular_c).flatten();
}

namespace {

int default_n_dirs(const Ball& B, double angular_c) {
    double dist = B.center.norm();
    double w = std::asin(std::min(1.0, B.radius / dist));
    int n = int(std::ceil(2.0 * w / (angular_c / B.radius))) + 1;
    return std::max(n, 2);
}

// nearest zero (by radius) on a ray, or -1
int nearest_zero(const ShellRay& ray, double radius, double max_dr) {
    if (ray.zeros.empty()) return -1;
    auto it = std::lower_bound(ray.zeros.begin(), ray.zeros.end(), radius,
                               [](const ZeroSample& z, double r) { return z.radius < r; });
    int best = -1;
    double bd = max_dr;
    for (auto cand : {it, it == ray.zeros.begin() ? it : std::prev(it)}) {
        if (cand == ray.zeros.end()) continue;
        double d = std::fabs(cand->radius - radius);
        if (d < bd) {
            bd = d;
            best = int(cand - ray.zeros.begin());
        }
    }
    return best;
}

} // namespace

std::vector<XSample> x_set(const TransformEvaluator& ev, const Vec& eta, const Ball& B,
                           const XSetOptions& opt) {
    double em = eta.norm();
    if (em < 0.5 || em > 2.0)
        throw DomainError("|eta| must lie in [0.5, 2] (the propositions quantify over |eta| ~ 1)");
    const Body& body = ev.body();
    double tol = opt.c_delta / B.radius;
    // cone for the grid: the tightest cone around B (the caller-level experiment
    // cone is validated upstream; here we only need directions that meet B)
    double dist = B.center.norm();
    double w = std::asin(std::min(1.0, B.radius / dist));
    NormalCone cone(B.center, std::min(M_PI_2 * 0.999, w * (1.0 + 1e-9) + 1e-12));
    int n_dirs = opt.n_dirs > 0 ? opt.n_dirs : default_n_dirs(B, opt.angular_c);
    ShellGrid grid = shell_index_grid(ev, cone, B, n_dirs, opt.angular_c);

    const bool prefilter = ev.method() == Method::Herz && body.kind != BodyKind::Cube;
    const int d = body.dim;

    struct Key {
        int ray, zero;
        bool operator<(const Key& o) const {
            return ray != o.ray ? ray < o.ray : zero < o.zero;
        }
    };

    // candidates: shell samples with the translate inside B (and, for expensive
    // evaluators, a generous model-phase prefilter on the translate)
    std::vector<Key> cands;
    std::map<Key, int> want; // key -> slot in svals
    auto note = [&](const Key& k) {
        if (want.emplace(k, int(want.size())).second) return;
    };
    for (int i = 0; i < int(grid.rays.size()); ++i) {
        const auto& ray = grid.rays[i];
        for (int k = 0; k < int(ray.zeros.size()); ++k) {
            Vec y = ray.zeros[k].point() + eta;
            if (!B.contains(y)) continue;
            if (prefilter) {
                double Py = support(body, y);
                double phi = 2.0 * M_PI * Py - 0.25 * M_PI * (d + 1);
                double t = std::remainder(phi - M_PI_2, M_PI);
                double pred = std::fabs(t) / (2.0 * M_PI * support(body, y / y.norm()));
                if (pred > 5.0 * tol + 0.01) continue;
            }
            cands.push_back({i, k});
            note({i, k});
            for (int j : ray.neighbors) {
                int kk = nearest_zero(grid.rays[j], ray.zeros[k].radius,
                                      0.35 / support(body, ray.zeros[k].direction));
                if (kk >= 0) note({j, kk});
            }
        }
    }

    // signed shifted distances, one per unique (ray, zero)
    std::vector<Key> keys(want.size());
    for (const auto& [k, slot] : want) keys[slot] = k;
    std::vector<ZeroDistance> svals(keys.size());
    parallel_for(keys.size(), [&](std::size_t s) {
        const auto& k = keys[s];
        Vec y = grid.rays[k.ray].zeros[k.zero].point() + eta;
        svals[s] = zero_distance_signed(ev, y);
    });
    auto sval = [&](const Key& k) -> const ZeroDistance* {
        auto it = want.find(k);
        return it == want.end() ? nullptr : &svals[it->second];
    };

    std::vector<XSample> out;
    for (const Key& c : cands) {
        const auto& ray = grid.rays[c.ray];
        const ZeroSample& z = ray.zeros[c.zero];
        const ZeroDistance* s0 = sval(c);
        if (!s0 || !s0->found || std::fabs(s0->distance) > tol) continue;
        bool keep = true;
        if (opt.require_crossing && std::fabs(s0->distance) > kExactZero) {
            double smin = s0->distance, smax = s0->distance;
            double guard = 0.25 / (2.0 * support(body, z.direction)); // quarter shell spacing
            for (int j : ray.neighbors) {
                int kk = nearest_zero(grid.rays[j], z.radius, 0.35 / support(body, z.direction));
                if (kk < 0) continue;
                const ZeroDistance* sn = sval({j, kk});
                if (!sn || !sn->found || std::fabs(sn->distance) > guard) continue;
                smin = std::min(smin, sn->distance);
                smax = std::max(smax, sn->distance);
            }
            keep = (smin <= 0.0 && smax >= 0.0);
        }
        if (keep) out.push_back({z, std::fabs(s0->distance), eta});
    }
    return out;
}

} // namespace cvxft
