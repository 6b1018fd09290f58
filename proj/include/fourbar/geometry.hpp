#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"
#include "lengths.hpp"
#include "projreal.hpp"

namespace fourbar {

struct Vec2 {
    double x = 0, y = 0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// signed turn from a to b, in (-pi, pi]
inline double turn(Vec2 a, Vec2 b) { return std::atan2(cross(a, b), dot(a, b)); }

// A: x-joint at the origin, D: y-joint at (beta, 0), B: z-joint, C: w-joint.
// Bars: AD = beta, DB = gamma, BC = delta, CA = alpha.
struct Vertices {
    Vec2 A, B, C, D;
};

struct Closure {
    double residual;
    double rho_z, rho_w;
    Vertices v;
};

inline Closure closure_oracle(const BarLengths& L, double rho_x, double rho_y)
{
    Vertices v;
    v.A = {0, 0};
    v.D = {L.beta, 0};
    v.B = {L.beta + L.gamma * std::cos(rho_y), L.gamma * std::sin(rho_y)};
    v.C = {-L.alpha * std::cos(rho_x), L.alpha * std::sin(rho_x)};
    const double residual = std::abs(norm(v.B - v.C) - L.delta);
    double rz = turn(v.B - v.D, v.C - v.B);
    double rw = turn(v.C - v.B, v.A - v.C);
    if (rz == -std::numbers::pi) rz = std::numbers::pi;
    if (rw == -std::numbers::pi) rw = std::numbers::pi;
    return {residual, rz, rw, v};
}

struct Configuration {
    std::array<ProjReal, 4> t;    // x, y, z, w
    std::array<double, 4> rho{};  // rho_x .. rho_w
    Vertices vertices;
    double u = 0, v = 0;          // |C - D|, |B - A|
    double residual = 0;

    const ProjReal& x() const { return t[0]; }
    const ProjReal& y() const { return t[1]; }
    const ProjReal& z() const { return t[2]; }
    const ProjReal& w() const { return t[3]; }
};

// Builds the geometric configuration from half-angle tangents and checks it
// closes: bar residual and the recovered z, w tangents must agree within tol.
// Returns false (leaving out untouched) when they do not.
inline bool try_configuration(const BarLengths& L, const std::array<ProjReal, 4>& t, double tol,
                              Configuration& out)
{
    const double rx = t[0].angle(), ry = t[1].angle();
    const Closure cl = closure_oracle(L, rx, ry);
    if (!(cl.residual <= tol * L.sigma)) return false;
    if (proj_distance(ProjReal::from_angle(cl.rho_z), t[2]) > tol) return false;
    if (proj_distance(ProjReal::from_angle(cl.rho_w), t[3]) > tol) return false;
    out.t = t;
    out.rho = {rx, ry, t[2].angle(), t[3].angle()};
    out.vertices = cl.v;
    out.u = norm(cl.v.C - cl.v.D);
    out.v = norm(cl.v.B - cl.v.A);
    out.residual = cl.residual;
    return true;
}

inline Configuration make_configuration(const BarLengths& L, const std::array<ProjReal, 4>& t, double tol = 1e-7)
{
    Configuration c;
    if (!try_configuration(L, t, tol, c))
        throw Error(err::ResidualTooLarge, "parametrization and closure geometry disagree");
    return c;
}

} // namespace fourbar
