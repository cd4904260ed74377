#ifndef CVXFT_ZEROSET_HPP
#define CVXFT_ZEROSET_HPP

#include "cvxft/transform.hpp"

#include <functional>
#include <vector>

namespace cvxft {

// A point of Z_Omega found as a radial root of r -> chi_hat(r u).
struct ZeroSample {
    Vec direction;    // unit
    double radius;
    double residual;  // |chi_hat| at the refined root
    int shell;        // ordinal of the root along the ray, 0-based from r_min

    Vec point() const { return radius * direction; }
};

struct RadialZeros {
    std::vector<ZeroSample> samples; // sorted by radius
    int grazing_flags = 0;           // |chi_hat| dipped below tolerance without a sign change
};

// Band-limited reconstruction of a radial slice from uniform samples.
// r -> chi_hat(r u) has bandwidth P(u) cycles/unit (frequencies u.x over the
// body), so sampling at step 1/(8 P) is 4x oversampled and windowed-sinc
// interpolation reconstructs it to ~1e-9 relative. Used to keep root scans
// affordable for quadrature-backed evaluators.
class BandlimitedProfile {
  public:
    BandlimitedProfile(const std::function<double(double)>& f, double r_lo, double r_hi,
                       double bandwidth);
    double operator()(double r) const;
    double step() const { return h_; }

  private:
    double r0_, h_;
    std::vector<double> vals_;
    std::vector<double> kernel_lut_; // Kaiser-windowed sinc, tabulated
    double lut_scale_;
    int taps_;
};

// Scans r -> chi_hat(r u) on a grid of step <= 1/(8 P(u)), brackets sign
// changes and refines each by bisection to |interval| <= 1e-10. step = 0
// picks the default 1/(8 P(u)); an explicit coarser step is a ResolutionError.
RadialZeros radial_zeros(const TransformEvaluator& ev, const Vec& u, double r_min, double r_max,
                         double step = 0.0);

struct ZeroDistance {
    double distance; // along the ray through xi, to the nearest root
    bool found;      // false: no root within the one-period search window
};

ZeroDistance zero_distance(const TransformEvaluator& ev, const Vec& xi);

// signed variant (positive: |xi| above the nearest root)
ZeroDistance zero_distance_signed(const TransformEvaluator& ev, const Vec& xi);

// Zero samples over a quasi-uniform direction grid covering the part of the
// cone whose rays meet B, angular spacing <= angular_c / B.radius.
struct ShellRay {
    Vec u;
    std::vector<ZeroSample> zeros;  // sorted by radius
    std::vector<int> neighbors;     // adjacent ray indices on the grid
    int grazing_flags = 0;
};

struct ShellGrid {
    std::vector<ShellRay> rays;
    double angular_spacing = 0.0;

    std::vector<ZeroSample> flatten() const;
};

ShellGrid shell_index_grid(const TransformEvaluator& ev, const NormalCone& cone, const Ball& B,
                           int n_dirs, double angular_c = 0.5);

std::vector<ZeroSample> shell_index(const TransformEvaluator& ev, const NormalCone& cone,
                                    const Ball& B, int n_dirs, double angular_c = 0.5);

// A zero sample whose eta-translate also lies (within tol) on the zero set.
struct XSample {
    ZeroSample base;
    double delta_plus; // |signed distance of base.point()+eta to the nearest root|
    Vec eta;
};

struct XSetOptions {
    double c_delta = 1.0;     // retention tolerance tol = c_delta / B.radius
    double angular_c = 0.5;   // direction grid constant
    int n_dirs = 0;           // 0: derived from angular_c
    // Keep a sample only when the signed shifted-distance changes sign across
    // the same shell on adjacent rays (or vanishes identically, the hyperplane
    // case). Certifies proximity to a true transversal intersection of Z and
    // Z - eta; without it, eta resonant with the shell spacing retains
    // near-tangent translates that the exact X set does not contain.
    bool require_crossing = true;
};

std::vector<XSample> x_set(const TransformEvaluator& ev, const Vec& eta, const Ball& B,
                           const XSetOptions& opt = {});

} // namespace cvxft

#endif
