#include "cvxft/transform.hpp"
#include "cvxft/errors.hpp"
#include "cvxft/special.hpp"

#include <cmath>
#include <vector>

namespace cvxft {

namespace {

using cplx = std::complex<double>;

constexpr double kTwoPi = 2.0 * M_PI;

// 8-point Gauss-Legendre on [-1,1]; one panel per <=1.5 oscillation
// wavelengths keeps the panel error below ~1e-13.
constexpr double kGlx[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                            -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                            0.7966664774136267,  0.9602898564975363};
constexpr double kGlw[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                            0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                            0.2223810344533745, 0.1012285362903763};

inline cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

void check_dim_le3(const Body& body, const char* what) {
    if (body.dim > 3) throw MethodUnavailableError(std::string(what) + " supports d <= 3 only");
}

// ---- closed forms ---------------------------------------------------------

double closed_ball(const Body& body, double rho) {
    double r = body.radius;
    if (rho == 0.0) return body.volume();
    double z = kTwoPi * r * rho;
    if (body.dim == 2) return kTwoPi * r * r * bessel_j1(z) / z;
    // d = 3: r^3 (r rho)^{-3/2} J_{3/2}(z) = 4 pi r^3 (sin z - z cos z)/z^3
    return 4.0 * M_PI * r * r * r * sin_minus_zcos(z) / (z * z * z);
}

// ---- volume quadrature ----------------------------------------------------

struct Axis {
    double half_width;
    double h;
    std::vector<double> mid;
    std::vector<cplx> phase; // e^{-2 pi i xi_j mid_k}
};

Axis make_axis(double half_width, int n, double xi_j) {
    Axis a;
    a.half_width = half_width;
    a.h = 2.0 * half_width / n;
    a.mid.resize(n);
    a.phase.resize(n);
    for (int k = 0; k < n; ++k) {
        a.mid[k] = -half_width + (k + 0.5) * a.h;
        a.phase[k] = cis(-kTwoPi * xi_j * a.mid[k]);
    }
    return a;
}

// z-section of a convex body over the column (x, y); empty => lo > hi
bool z_section(const Body& body, double x, double y, double& lo, double& hi) {
    switch (body.kind) {
        case BodyKind::Cube:
            lo = -body.half_side;
            hi = body.half_side;
            return true;
        case BodyKind::Ball: {
            double t = body.radius * body.radius - x * x - y * y;
            if (t <= 0.0) return false;
            hi = std::sqrt(t);
            lo = -hi;
            return true;
        }
        case BodyKind::Ellipsoid: {
            double t = 1.0 - (x / body.axes(0)) * (x / body.axes(0)) -
                       (y / body.axes(1)) * (y / body.axes(1));
            if (t <= 0.0) return false;
            hi = body.axes(2) * std::sqrt(t);
            lo = -hi;
            return true;
        }
        default: return false;
    }
}

double quadrature_2d(const Body& body, const Vec& xi, int n) {
    Vec e0 = Vec::Zero(2), e1 = Vec::Zero(2);
    e0(0) = 1.0;
    e1(1) = 1.0;
    Axis ax = make_axis(support(body, e0), n, xi(0));
    Axis ay = make_axis(support(body, e1), n, xi(1));
    cplx total = 0.0;
    Vec p(2);
    for (int i = 0; i < n; ++i) {
        p(0) = ax.mid[i];
        cplx rowsum = 0.0;
        for (int j = 0; j < n; ++j) {
            p(1) = ay.mid[j];
            if (body.contains(p)) rowsum += ay.phase[j];
        }
        total += ax.phase[i] * rowsum;
    }
    return total.real() * ax.h * ay.h;
}

double quadrature_3d(const Body& body, const Vec& xi, int n) {
    Vec e = Vec::Zero(3);
    Axis axs[3];
    for (int j = 0; j < 3; ++j) {
        e.setZero();
        e(j) = 1.0;
        axs[j] = make_axis(support(body, e), n, xi(j));
    }
    // prefix sums over the z phases; each column contributes a contiguous range
    std::vector<cplx> pre(n + 1, 0.0);
    for (int k = 0; k < n; ++k) pre[k + 1] = pre[k] + axs[2].phase[k];
    const double h = axs[2].h, w = axs[2].half_width;
    cplx total = 0.0;
    for (int i = 0; i < n; ++i) {
        cplx rowsum = 0.0;
        for (int j = 0; j < n; ++j) {
            double lo, hi;
            if (!z_section(body, axs[0].mid[i], axs[1].mid[j], lo, hi)) continue;
            int klo = int(std::ceil((lo + w) / h - 0.5));
            int khi = int(std::floor((hi + w) / h - 0.5));
            klo = std::max(klo, 0);
            khi = std::min(khi, n - 1);
            if (khi < klo) continue;
            rowsum += axs[1].phase[j] * (pre[khi + 1] - pre[klo]);
        }
        total += axs[0].phase[i] * rowsum;
    }
    return total.real() * axs[0].h * axs[1].h * axs[2].h;
}

// ---- Herz boundary integral -----------------------------------------------

// straight segment from p0 to p1 with outward normal nv, Gauss-Legendre
// panels sized to <= 1.5 wavelengths of the along-edge phase rate
cplx segment_gl(const Vec& p0, const Vec& p1, const Vec& nv, const Vec& xi, int min_nodes) {
    Vec d = p1 - p0;
    double L = d.norm();
    Vec xih = xi / xi.norm();
    double g = xih.dot(nv);
    double rate = std::fabs(d.dot(xi)) / L; // cycles per unit length
    int npan = std::max({1, int(std::ceil(L * rate / 1.5)), (min_nodes + 7) / 8});
    cplx sum = 0.0;
    double hp = L / npan;
    for (int p = 0; p < npan; ++p) {
        double t0 = p * hp;
        for (int q = 0; q < 8; ++q) {
            double t = t0 + 0.5 * hp * (1.0 + kGlx[q]);
            Vec x = p0 + (t / L) * d;
            sum += (0.5 * hp * kGlw[q]) * cis(kTwoPi * x.dot(xi));
        }
    }
    return g * sum;
}

// circular arc, center c radius rho, normal angle psi in [psi0, psi1]
cplx arc_gl(const Vec& c, double rho, double psi0, double psi1, const Vec& xi, int min_nodes) {
    double nrm = xi.norm();
    double z = kTwoPi * rho * nrm; // max phase rate in psi
    double span = psi1 - psi0;
    int npan = std::max({1, int(std::ceil(span * z / (1.5 * kTwoPi))), (min_nodes + 7) / 8});
    double xh0 = xi(0) / nrm, xh1 = xi(1) / nrm;
    double base = kTwoPi * (c(0) * xi(0) + c(1) * xi(1));
    cplx sum = 0.0;
    double hp = span / npan;
    for (int p = 0; p < npan; ++p) {
        double a = psi0 + p * hp;
        for (int q = 0; q < 8; ++q) {
            double psi = a + 0.5 * hp * (1.0 + kGlx[q]);
            double ux = std::cos(psi), uy = std::sin(psi);
            double g = xh0 * ux + xh1 * uy;
            double ph = base + kTwoPi * rho * (ux * xi(0) + uy * xi(1));
            sum += (0.5 * hp * kGlw[q] * g) * cis(ph);
        }
    }
    return rho * sum;
}

cplx herz_raw_2d(const Body& body, const Vec& xi, int n) {
    switch (body.kind) {
        case BodyKind::Ball: {
            double r = body.radius;
            double xh0 = xi(0) / xi.norm(), xh1 = xi(1) / xi.norm();
            cplx sum = 0.0;
            double h = kTwoPi / n;
            for (int k = 0; k < n; ++k) {
                double th = k * h;
                double ux = std::cos(th), uy = std::sin(th);
                sum += (xh0 * ux + xh1 * uy) * cis(kTwoPi * r * (ux * xi(0) + uy * xi(1)));
            }
            return sum * (r * h);
        }
        case BodyKind::Ellipsoid: {
            // x(t) = (a cos t, b sin t); (xihat.n) dl = xihat.(b cos t, a sin t) dt
            double a = body.axes(0), b = body.axes(1);
            double xh0 = xi(0) / xi.norm(), xh1 = xi(1) / xi.norm();
            cplx sum = 0.0;
            double h = kTwoPi / n;
            for (int k = 0; k < n; ++k) {
                double t = k * h;
                double ct = std::cos(t), st = std::sin(t);
                double g = xh0 * b * ct + xh1 * a * st;
                sum += g * cis(kTwoPi * (a * ct * xi(0) + b * st * xi(1)));
            }
            return sum * h;
        }
        case BodyKind::Cube: {
            double s = body.half_side;
            int per = std::max(8, n / 4);
            Vec p0(2), p1(2), nv(2);
            cplx sum = 0.0;
            auto edge = [&](double x0, double y0, double x1, double y1, double nx, double ny) {
                p0 << x0, y0;
                p1 << x1, y1;
                nv << nx, ny;
                sum += segment_gl(p0, p1, nv, xi, per);
            };
            edge(s, -s, s, s, 1, 0);
            edge(s, s, -s, s, 0, 1);
            edge(-s, s, -s, -s, -1, 0);
            edge(-s, -s, s, -s, 0, -1);
            return sum;
        }
        case BodyKind::RoundedSquare: {
            double s = body.half_side, rho = body.corner_radius, c = s - rho;
            int per = std::max(8, n / 8);
            cplx sum = 0.0;
            Vec cc(2), p0(2), p1(2), nv(2);
            auto arc = [&](double cx, double cy, double a0) {
                cc << cx, cy;
                sum += arc_gl(cc, rho, a0, a0 + M_PI_2, xi, per);
            };
            arc(c, c, 0.0);
            arc(-c, c, M_PI_2);
            arc(-c, -c, M_PI);
            arc(c, -c, 1.5 * M_PI);
            auto edge = [&](double x0, double y0, double x1, double y1, double nx, double ny) {
                p0 << x0, y0;
                p1 << x1, y1;
                nv << nx, ny;
                sum += segment_gl(p0, p1, nv, xi, per);
            };
            edge(s, -c, s, c, 1, 0);
            edge(c, s, -c, s, 0, 1);
            edge(-s, c, -s, -c, -1, 0);
            edge(-c, -s, c, -s, 0, -1);
            return sum;
        }
    }
    return 0.0;
}

cplx herz_raw_3d(const Body& body, const Vec& xi, int n) {
    double nrm = xi.norm();
    switch (body.kind) {
        case BodyKind::Ball:
        case BodyKind::Ellipsoid: {
            // x = A s, s on the unit sphere; (xihat.n) dsigma = det(A) (xihat.A^{-1}s) dsigma_s
            Vec a(3);
            if (body.kind == BodyKind::Ball)
                a << body.radius, body.radius, body.radius;
            else
                a = body.axes;
            double detA = a.prod();
            int n_phi = std::max(16, n);
            int n_mu = std::max(32, n / 2);
            // Gauss-Legendre nodes in mu on [-1,1] from composite GL-8 panels
            int npan = (n_mu + 7) / 8;
            cplx sum = 0.0;
            double hp = 2.0 / npan;
            double hphi = kTwoPi / n_phi;
            for (int p = 0; p < npan; ++p) {
                for (int q = 0; q < 8; ++q) {
                    double mu = -1.0 + hp * (p + 0.5 * (1.0 + kGlx[q]));
                    double wmu = 0.5 * hp * kGlw[q];
                    double rxy = std::sqrt(std::max(0.0, 1.0 - mu * mu));
                    cplx ring = 0.0;
                    for (int k = 0; k < n_phi; ++k) {
                        double phi = k * hphi;
                        double sx = rxy * std::cos(phi), sy = rxy * std::sin(phi), sz = mu;
                        double g = (xi(0) * sx / a(0) + xi(1) * sy / a(1) + xi(2) * sz / a(2)) / nrm;
                        double ph = kTwoPi * (a(0) * sx * xi(0) + a(1) * sy * xi(1) + a(2) * sz * xi(2));
                        ring += g * cis(ph);
                    }
                    sum += wmu * hphi * detA * ring;
                }
            }
            return sum;
        }
        case BodyKind::Cube: {
            double s = body.half_side;
            // 6 faces; tensor GL panels sized to the in-face phase rates
            cplx sum = 0.0;
            for (int axis = 0; axis < 3; ++axis) {
                for (int sign = -1; sign <= 1; sign += 2) {
                    int u = (axis + 1) % 3, v = (axis + 2) % 3;
                    double ru = std::fabs(xi(u)), rv = std::fabs(xi(v));
                    int pu = std::max({1, int(std::ceil(2.0 * s * ru / 1.5)), n / 48});
                    int pv = std::max({1, int(std::ceil(2.0 * s * rv / 1.5)), n / 48});
                    double hu = 2.0 * s / pu, hv = 2.0 * s / pv;
                    double g = sign * xi(axis) / nrm;
                    double base = kTwoPi * sign * s * xi(axis);
                    cplx face = 0.0;
                    for (int i = 0; i < pu; ++i)
                        for (int qi = 0; qi < 8; ++qi) {
                            double cu = -s + hu * (i + 0.5 * (1.0 + kGlx[qi]));
                            cplx inner = 0.0;
                            for (int j = 0; j < pv; ++j)
                                for (int qj = 0; qj < 8; ++qj) {
                                    double cv = -s + hv * (j + 0.5 * (1.0 + kGlx[qj]));
                                    inner += (0.5 * hv * kGlw[qj]) *
                                             cis(base + kTwoPi * (cu * xi(u) + cv * xi(v)));
                                }
                            face += (0.5 * hu * kGlw[qi]) * inner;
                        }
                    sum += g * face;
                }
            }
            return sum;
        }
        default:
            throw MethodUnavailableError("herz boundary: unsupported d=3 body kind");
    }
}

double ball_chi(const Body& body, double rho) { return closed_ball(body, rho); }

} // namespace

double chi_hat_closed(const Body& body, const Vec& xi) {
    switch (body.kind) {
        case BodyKind::Cube: {
            double v = 1.0;
            for (int j = 0; j < body.dim; ++j) v *= cube_factor(body.half_side, xi(j));
            return v;
        }
        case BodyKind::Ball:
            if (body.dim > 3)
                throw MethodUnavailableError("closed-form ball transform implemented for d in {2,3}");
            return ball_chi(body, xi.norm());
        default:
            throw MethodUnavailableError("closed form available for ball and cube only");
    }
}

double chi_hat_quadrature(const Body& body, const Vec& xi, int n) {
    check_dim_le3(body, "volume quadrature");
    if (n < 32) throw ResolutionError("quadrature needs n >= 32 points per dimension");
    return (body.dim == 2) ? quadrature_2d(body, xi, n) : quadrature_3d(body, xi, n);
}

std::complex<double> herz_boundary_complex(const Body& body, const Vec& xi, int n) {
    if (xi.norm() == 0.0) throw DomainError("herz boundary integral is singular at xi = 0");
    check_dim_le3(body, "herz boundary integral");
    cplx raw = (body.dim == 2) ? herz_raw_2d(body, xi, n) : herz_raw_3d(body, xi, n);
    // chi_hat = raw / (2 pi i |xi|)
    return raw / (cplx(0.0, 1.0) * kTwoPi * xi.norm());
}

double herz_boundary(const Body& body, const Vec& xi, int n) {
    return herz_boundary_complex(body, xi, n).real();
}

CutoffWindow::CutoffWindow(Vec center_, double radius_, int order_)
    : center(std::move(center_)), radius(radius_), order(order_) {
    if (radius <= 0.0) throw DomainError("window radius must be positive");
    if (order < 2) throw DomainError("window smoothness order must be >= 2");
}

double CutoffWindow::eval(const Vec& x) const {
    double t = (x - center).norm() / radius;
    if (t >= 1.0) return 0.0;
    return std::pow(1.0 - t * t, order);
}

NormalCone CutoffWindow::patch_cone(const Body& body) const {
    if (body.kind == BodyKind::Ball) {
        double r = body.radius;
        double span = 2.0 * std::asin(std::min(1.0, radius / (2.0 * r)));
        return NormalCone(center, std::min(span, M_PI_2 * 0.999));
    }
    if (body.kind == BodyKind::Ellipsoid && body.dim == 2) {
        // normal at the center, then scan the patch for the normal spread
        Vec u0 = (center.array() / body.axes.array().square()).matrix().normalized();
        double a = body.axes(0), b = body.axes(1);
        double worst = 0.0;
        for (int k = 0; k < 4096; ++k) {
            double t = kTwoPi * k / 4096;
            Vec x(2);
            x << a * std::cos(t), b * std::sin(t);
            if ((x - center).norm() >= radius) continue;
            Vec nx(2);
            nx << b * std::cos(t), a * std::sin(t);
            nx.normalize();
            worst = std::max(worst, std::acos(std::min(1.0, std::max(-1.0, nx.dot(u0)))));
        }
        if (worst <= 0.0) throw DomainError("window does not cover a boundary patch");
        return NormalCone(u0, std::min(worst, M_PI_2 * 0.999));
    }
    throw MethodUnavailableError("patch cone implemented for ball and d=2 ellipsoid");
}

LocalizedResult localized_boundary(const Body& body, const Vec& xi, const CutoffWindow& window,
                                   int n) {
    NormalCone cone = window.patch_cone(body);
    if (!cone.contains(xi))
        throw ConeViolationError("frequency lies outside the window patch normal cone");
    double nrm = xi.norm();
    cplx raw = 0.0;
    if (body.dim == 2 && (body.kind == BodyKind::Ball || body.kind == BodyKind::Ellipsoid)) {
        double a = (body.kind == BodyKind::Ball) ? body.radius : body.axes(0);
        double b = (body.kind == BodyKind::Ball) ? body.radius : body.axes(1);
        double xh0 = xi(0) / nrm, xh1 = xi(1) / nrm;
        double h = kTwoPi / n;
        Vec x(2);
        for (int k = 0; k < n; ++k) {
            double t = k * h;
            double ct = std::cos(t), st = std::sin(t);
            x << a * ct, b * st;
            double psi = window.eval(x) + window.eval(-x);
            if (psi == 0.0) continue;
            double g = xh0 * b * ct + xh1 * a * st;
            raw += (g * psi) * cis(kTwoPi * (x(0) * xi(0) + x(1) * xi(1)));
        }
        raw *= h;
    } else {
        throw MethodUnavailableError("localized boundary integral implemented for d=2 ball/ellipsoid");
    }
    double value = (raw / (cplx(0.0, 1.0) * kTwoPi * nrm)).real();
    double full = herz_boundary(body, xi, n);
    return {value, std::fabs(full - value)};
}

PhaseModelEval phase_model_eval(const Body& body, const Vec& xi, double phi0) {
    double nrm = xi.norm();
    if (nrm < 2.0) throw DomainError("phase model requires |xi| >= 2");
    Curvature k = curvature(body, xi); // direction-homogeneous
    if (k.flat_face || k.value <= 0.0)
        throw DegenerateCurvatureError("zero curvature at the stationary boundary point");
    int d = body.dim;
    double amplitude = std::pow(nrm, -0.5 * (d + 1)) / (M_PI * std::sqrt(k.value));
    double phase = kTwoPi * support(body, xi) - 0.25 * M_PI * (d + 1) + phi0;
    return {amplitude, phase, amplitude * std::cos(phase)};
}

double cos_residual(const Body& body, const Vec& xi, double phi0) {
    return std::fabs(std::cos(phase_model_eval(body, xi, phi0).phase));
}

double calibrate_phase_offset() {
    // exact d=2 unit ball near radius 20; minimize the max model error over a period
    Body ball = make_ball(2, 1.0);
    auto err = [&](double phi) {
        double worst = 0.0;
        for (int i = 0; i <= 400; ++i) {
            double r = 20.0 + i / 400.0;
            Vec xi(2);
            xi << r, 0.0;
            PhaseModelEval m = phase_model_eval(ball, xi, phi);
            worst = std::max(worst, std::fabs(chi_hat_closed(ball, xi) - m.value));
        }
        return worst;
    };
    double best_phi = 0.0, best = err(0.0);
    for (int k = -300; k <= 300; ++k) {
        double phi = k * 1e-3;
        double e = err(phi);
        if (e < best) {
            best = e;
            best_phi = phi;
        }
    }
    return best_phi;
}

TransformEvaluator::TransformEvaluator(Body body, Method method, int resolution)
    : body_(std::move(body)), method_(method), resolution_(resolution) {}

double TransformEvaluator::operator()(const Vec& xi) const {
    switch (method_) {
        case Method::Closed: return chi_hat_closed(body_, xi);
        case Method::Quadrature: return chi_hat_quadrature(body_, xi, resolution_);
        case Method::Herz: return herz_boundary(body_, xi, resolution_);
        case Method::Model: return phase_model_eval(body_, xi).value;
    }
    return 0.0;
}

std::function<double(double)> TransformEvaluator::radial(const Vec& u) const {
    Vec un = u / u.norm();
    const TransformEvaluator* self = this;
    return [self, un](double r) { return (*self)(r * un); };
}

} // namespace cvxft
