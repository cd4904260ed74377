#include "cvxft/geometry.hpp"
#include "cvxft/errors.hpp"

#include <cmath>
#include <sstream>

namespace cvxft {

namespace {

constexpr double kFlatTol = 1e-12; // relative: |u_j| below this is "on a flat normal"

void check_nonzero(const Vec& xi) {
    if (xi.norm() == 0.0) throw DomainError("zero frequency vector");
}

double unit_ball_volume(int d) {
    return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

std::string num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

} // namespace

double Body::volume() const {
    switch (kind) {
        case BodyKind::Ball: return unit_ball_volume(dim) * std::pow(radius, dim);
        case BodyKind::Cube: return std::pow(2.0 * half_side, dim);
        case BodyKind::Ellipsoid: return unit_ball_volume(dim) * axes.prod();
        case BodyKind::RoundedSquare: {
            double s = half_side, rho = corner_radius;
            return 4.0 * s * s - (4.0 - M_PI) * rho * rho;
        }
    }
    return 0.0;
}

bool Body::contains(const Vec& x) const {
    switch (kind) {
        case BodyKind::Ball: return x.norm() <= radius;
        case BodyKind::Cube: return x.cwiseAbs().maxCoeff() <= half_side;
        case BodyKind::Ellipsoid: return (x.array() / axes.array()).matrix().squaredNorm() <= 1.0;
        case BodyKind::RoundedSquare: {
            double ax = std::fabs(x(0)), ay = std::fabs(x(1));
            double s = half_side, c = half_side - corner_radius;
            if (std::max(ax, ay) > s) return false;
            if (ax <= c || ay <= c) return true;
            double dx = ax - c, dy = ay - c;
            return dx * dx + dy * dy <= corner_radius * corner_radius;
        }
    }
    return false;
}

std::string Body::id() const {
    switch (kind) {
        case BodyKind::Ball: return "ball-d" + std::to_string(dim) + "-r" + num(radius);
        case BodyKind::Cube: return "cube-d" + std::to_string(dim) + "-s" + num(half_side);
        case BodyKind::Ellipsoid: {
            std::string s = "ellipsoid-d" + std::to_string(dim) + "-a";
            for (int i = 0; i < dim; ++i) s += (i ? "," : "") + num(axes(i));
            return s;
        }
        case BodyKind::RoundedSquare:
            return "rsq-s" + num(half_side) + "-rho" + num(corner_radius);
    }
    return "body";
}

Body make_ball(int dim, double radius) {
    if (dim < 2) throw DomainError("dimension must be >= 2");
    if (radius <= 0.0) throw DomainError("ball radius must be positive");
    Body b;
    b.kind = BodyKind::Ball;
    b.dim = dim;
    b.radius = radius;
    b.piecewise = false;
    return b;
}

Body make_cube(int dim, double half_side) {
    if (dim < 2) throw DomainError("dimension must be >= 2");
    if (half_side <= 0.0) throw DomainError("cube half-side must be positive");
    Body b;
    b.kind = BodyKind::Cube;
    b.dim = dim;
    b.half_side = half_side;
    b.piecewise = true;
    return b;
}

Body make_ellipsoid(const Vec& semi_axes) {
    if (semi_axes.size() < 2) throw DomainError("dimension must be >= 2");
    if ((semi_axes.array() <= 0.0).any()) throw DomainError("semi-axes must be positive");
    Body b;
    b.kind = BodyKind::Ellipsoid;
    b.dim = int(semi_axes.size());
    b.axes = semi_axes;
    b.piecewise = false;
    return b;
}

Body make_rounded_square(double half_side, double corner_radius) {
    if (half_side <= 0.0 || corner_radius <= 0.0) throw DomainError("parameters must be positive");
    if (corner_radius > half_side) throw DomainError("corner radius exceeds half-side");
    Body b;
    b.kind = BodyKind::RoundedSquare;
    b.dim = 2;
    b.half_side = half_side;
    b.corner_radius = corner_radius;
    b.piecewise = true;
    return b;
}

Body make_body(const std::map<std::string, std::string>& spec) {
    auto get = [&](const std::string& k) -> std::string {
        auto it = spec.find(k);
        if (it == spec.end()) throw ConfigError("missing body key '" + k + "'");
        return it->second;
    };
    std::string kind = get("kind");
    if (kind == "ball") return make_ball(std::stoi(get("dim")), std::stod(get("radius")));
    if (kind == "cube") return make_cube(std::stoi(get("dim")), std::stod(get("half_side")));
    if (kind == "ellipsoid") {
        std::stringstream ss(get("axes"));
        std::vector<double> a;
        std::string tok;
        while (std::getline(ss, tok, ',')) a.push_back(std::stod(tok));
        Vec v = Eigen::Map<Vec>(a.data(), long(a.size()));
        return make_ellipsoid(v);
    }
    if (kind == "rounded-square") {
        auto it = spec.find("dim");
        if (it != spec.end() && std::stoi(it->second) != 2)
            throw DomainError("rounded-square requires dim = 2");
        return make_rounded_square(std::stod(get("half_side")), std::stod(get("rho")));
    }
    throw ConfigError("unknown body kind '" + kind + "'");
}

double support(const Body& body, const Vec& xi) {
    check_nonzero(xi);
    switch (body.kind) {
        case BodyKind::Ball: return body.radius * xi.norm();
        case BodyKind::Cube: return body.half_side * xi.cwiseAbs().sum();
        case BodyKind::Ellipsoid:
            return std::sqrt((body.axes.array().square() * xi.array().square()).sum());
        case BodyKind::RoundedSquare:
            // Minkowski sum of the inner square (half-side s - rho) and a rho-disk
            return (body.half_side - body.corner_radius) * xi.cwiseAbs().sum() +
                   body.corner_radius * xi.norm();
    }
    return 0.0;
}

Vec gauss_point(const Body& body, const Vec& u) {
    check_nonzero(u);
    double nrm = u.norm();
    switch (body.kind) {
        case BodyKind::Ball: return (body.radius / nrm) * u;
        case BodyKind::Ellipsoid: {
            Vec g = body.axes.array().square() * u.array();
            return g / support(body, u);
        }
        case BodyKind::Cube: {
            // generic directions select a vertex; any vanishing component means
            // the maximizer is a whole edge/face
            for (int j = 0; j < body.dim; ++j)
                if (std::fabs(u(j)) <= kFlatTol * nrm)
                    throw NonUniqueMaximizerError("cube: direction normal to a flat face");
            Vec v(body.dim);
            for (int j = 0; j < body.dim; ++j) v(j) = body.half_side * (u(j) > 0 ? 1.0 : -1.0);
            return v;
        }
        case BodyKind::RoundedSquare: {
            for (int j = 0; j < 2; ++j)
                if (std::fabs(u(j)) <= kFlatTol * nrm)
                    throw NonUniqueMaximizerError("rounded-square: direction normal to a flat edge");
            double c = body.half_side - body.corner_radius;
            Vec v(2);
            v(0) = c * (u(0) > 0 ? 1.0 : -1.0);
            v(1) = c * (u(1) > 0 ? 1.0 : -1.0);
            return v + (body.corner_radius / nrm) * u;
        }
    }
    return Vec();
}

Curvature curvature(const Body& body, const Vec& u) {
    check_nonzero(u);
    double nrm = u.norm();
    switch (body.kind) {
        case BodyKind::Ball:
            return {std::pow(body.radius, -(body.dim - 1)), false};
        case BodyKind::Ellipsoid: {
            // tangent plane at distance h = P(u/|u|): K = h^{d+1} / prod(a_j^2)
            double h = support(body, u) / nrm;
            return {std::pow(h, body.dim + 1) / std::pow(body.axes.prod(), 2.0), false};
        }
        case BodyKind::RoundedSquare: {
            for (int j = 0; j < 2; ++j)
                if (std::fabs(u(j)) <= kFlatTol * nrm) return {0.0, true};
            return {1.0 / body.corner_radius, false};
        }
        case BodyKind::Cube: {
            int nonzero = 0;
            for (int j = 0; j < body.dim; ++j)
                if (std::fabs(u(j)) > kFlatTol * nrm) ++nonzero;
            if (nonzero <= 1) return {0.0, true}; // face normal
            throw DomainError("cube boundary is not smooth at a vertex");
        }
    }
    return {0.0, false};
}

NormalCone::NormalCone(Vec axis_, double half_angle_) : axis(std::move(axis_)), half_angle(half_angle_) {
    double n = axis.norm();
    if (n == 0.0) throw DomainError("cone axis must be nonzero");
    axis /= n;
    if (!(half_angle > 0.0 && half_angle < M_PI / 2.0))
        throw DomainError("cone half-angle must lie in (0, pi/2)");
}

bool NormalCone::contains(const Vec& xi) const {
    double n = xi.norm();
    if (n == 0.0) return false;
    double c = axis.dot(xi) / n;
    return std::acos(std::min(1.0, std::max(-1.0, c))) <= half_angle;
}

} // namespace cvxft
