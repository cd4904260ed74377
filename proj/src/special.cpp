#include "cvxft/special.hpp"

#include <cmath>

namespace cvxft {

double sin_pi(double x) {
    // reduce to |r| <= 1/2 with r = x - round(x); sin(pi x) = +-sin(pi r)
    double n = std::round(x);
    double r = x - n;
    double s = std::sin(M_PI * r);
    // odd multiples of pi flip the sign
    return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -s : s;
}

double cos_pi(double x) {
    double n = std::round(x);
    double r = x - n;
    double c = std::cos(M_PI * r);
    return (std::fmod(std::fabs(n), 2.0) == 1.0) ? -c : c;
}

double cube_factor(double s, double t) {
    double a = 2.0 * s * t;
    if (a == 0.0) return 2.0 * s;
    return sin_pi(a) / (M_PI * t);
}

namespace {

double j1_series(double z) {
    // J1(z) = sum_m (-1)^m (z/2)^{2m+1} / (m! (m+1)!)
    double t = 0.5 * z;
    double term = t;
    double sum = term;
    for (int m = 1; m <= 64; ++m) {
        term *= -t * t / (double(m) * double(m + 1));
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

double j1_asymptotic(double z) {
    // Hankel expansion: J1(z) = sqrt(2/(pi z)) (P cos w - Q sin w), w = z - 3pi/4,
    // with terms t_j = prod_{i<=j}(mu-(2i-1)^2) / (j! (8z)^j), mu = 4,
    // P = sum_{j even} (-1)^{j/2} t_j, Q = sum_{j odd} (-1)^{(j-1)/2} t_j.
    // Truncated at the smallest term.
    const double mu = 4.0;
    double P = 0.0, Q = 0.0;
    double t = 1.0, tprev = 0.0;
    for (int j = 0; j < 40; ++j) {
        if (j > 0) {
            double f = 2.0 * j - 1.0;
            t *= (mu - f * f) / (double(j) * 8.0 * z);
            if (std::fabs(t) > std::fabs(tprev)) break;
        }
        if (j % 2 == 0)
            P += ((j / 2) % 2 == 0 ? t : -t);
        else
            Q += (((j - 1) / 2) % 2 == 0 ? t : -t);
        tprev = t;
    }
    double w = z - 0.75 * M_PI;
    return std::sqrt(2.0 / (M_PI * z)) * (P * std::cos(w) - Q * std::sin(w));
}

} // namespace

double bessel_j1(double z) {
    if (z < 0.0) return -bessel_j1(-z);
    return (z < 12.0) ? j1_series(z) : j1_asymptotic(z);
}

double sin_minus_zcos(double z) {
    if (std::fabs(z) > 0.5) return std::sin(z) - z * std::cos(z);
    // z^3/3 - z^5/30 + z^7/840 - ...  (term ratio -z^2/((2m+2)(2m+3)))
    double z2 = z * z;
    double term = z2 * z / 3.0;
    double sum = term;
    for (int m = 1; m <= 12; ++m) {
        term *= -z2 / ((2.0 * m + 2.0) * (2.0 * m + 3.0));
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

} // namespace cvxft
