#ifndef CVXFT_GEOMETRY_HPP
#define CVXFT_GEOMETRY_HPP

#include <Eigen/Dense>
#include <map>
#include <string>

namespace cvxft {

using Vec = Eigen::VectorXd;

enum class BodyKind { Ball, Cube, Ellipsoid, RoundedSquare };

// A symmetric convex body, represented through its support function
//   P(xi) = sup_{x in boundary} x . xi
// (positively 1-homogeneous, even, >= c|xi|). The Gauss map and curvature are
// derived from P; no mesh representation is kept.
struct Body {
    BodyKind kind;
    int dim;
    double radius = 0.0;        // ball
    double half_side = 0.0;     // cube, rounded-square
    Vec axes;                   // ellipsoid semi-axes
    double corner_radius = 0.0; // rounded-square
    bool piecewise = false;     // smoothness flag

    double volume() const;
    bool contains(const Vec& x) const; // exact per-kind membership
    std::string id() const;            // short tag for reports, e.g. "ball-d2-r1"
};

Body make_ball(int dim, double radius);
Body make_cube(int dim, double half_side);
Body make_ellipsoid(const Vec& semi_axes);
Body make_rounded_square(double half_side, double corner_radius);

// key=value spec: kind=ball|cube|ellipsoid|rounded-square, dim=, radius=,
// half_side=, axes=a,b[,c], rho=
Body make_body(const std::map<std::string, std::string>& spec);

double support(const Body& body, const Vec& xi);

// Boundary point with outward normal u (= grad of support at u). Errors with
// NonUniqueMaximizerError at directions normal to a flat face of a piecewise body.
Vec gauss_point(const Body& body, const Vec& u);

struct Curvature {
    double value = 0.0;
    bool flat_face = false; // piecewise body, direction normal to a flat piece
};

// Gaussian curvature of the boundary at gauss_point(body, u).
Curvature curvature(const Body& body, const Vec& u);

// Cone of directions within half_angle of axis; closed under positive scaling.
struct NormalCone {
    Vec axis;          // unit
    double half_angle; // in (0, pi/2)

    NormalCone(Vec axis_, double half_angle_);
    bool contains(const Vec& xi) const;
};

// Frequency-space ball B.
struct Ball {
    Vec center;
    double radius;

    bool contains(const Vec& p) const { return (p - center).norm() <= radius; }
};

} // namespace cvxft

#endif
