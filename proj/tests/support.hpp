#pragma once

// Shared fixtures and independent oracles for the unit and acceptance suites.

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <fourbar/fourbar.hpp>

namespace testsupport {

using fourbar::Kind;
using fourbar::Quad;

struct ClassSample {
    Kind kind;
    std::vector<Quad> tuples;
};

// three representatives per class
inline const std::vector<ClassSample>& representatives()
{
    static const std::vector<ClassSample> reps{
        {Kind::Rhombus, {{1, 1, 1, 1}, {2, 2, 2, 2}, {0.7, 0.7, 0.7, 0.7}}},
        {Kind::Isogram, {{2, 1, 2, 1}, {1, 3, 1, 3}, {1.5, 0.4, 1.5, 0.4}}},
        {Kind::DeltoidI, {{2, 3, 3, 2}, {1, 2.5, 2.5, 1}, {3, 1, 1, 3}}},
        {Kind::DeltoidII, {{3, 3, 2, 2}, {2, 2, 3, 3}, {1, 1, 4, 4}}},
        {Kind::ConicI, {{2, 3, 2, 1}, {2, 3, 4, 3}, {1, 2.5, 3, 1.5}}},
        {Kind::ConicII, {{1, 2, 3, 4}, {2, 3, 1.5, 2.5}, {3, 2, 1.5, 0.5}}},
        {Kind::ConicIII, {{1, 3, 2, 2}, {2, 3, 4, 1}, {1.5, 2.5, 3, 1}}},
        {Kind::Elliptic, {{2, 3, 4, 6}, {1, 2, 3, 3.5}, {3, std::sqrt(8.0), std::sqrt(6.0), std::sqrt(7.0)}}},
    };
    return reps;
}

// valid lengths whose class pattern values are all at least gap*sigma away from zero
inline fourbar::BarLengths random_elliptic(std::mt19937_64& rng, double gap = 1e-3)
{
    std::uniform_real_distribution<double> u(0.2, 5.0);
    for (;;) {
        Quad q{u(rng), u(rng), u(rng), u(rng)};
        const double s = fourbar::semi_perimeter(q);
        bool ok = true;
        for (double v : q) ok = ok && v < 2 * s - v - gap * s;
        const auto [a, b, c, d] = q;
        ok = ok && std::abs(a - b + c - d) > gap * s && std::abs(a - b - c + d) > gap * s &&
             std::abs(a + b - c - d) > gap * s;
        if (ok) return fourbar::validate_lengths(q);
    }
}

inline fourbar::BarLengths random_valid(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (;;) {
        Quad q{u(rng), u(rng), u(rng), u(rng)};
        try {
            return fourbar::validate_lengths(q);
        } catch (const fourbar::Error&) {
        }
    }
}

// a^2 + c^2 = b^2 + d^2
inline fourbar::BarLengths random_orthodiagonal(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.3, 5.0), f(0.05, 0.95);
    for (;;) {
        const double a = u(rng), c = u(rng);
        const double r2 = a * a + c * c;
        const double b = std::sqrt(r2 * f(rng));
        const double d = std::sqrt(r2 - b * b);
        try {
            auto L = fourbar::validate_lengths(a, b, c, d);
            if (fourbar::classify(L).kind == Kind::Elliptic) return L;
        } catch (const fourbar::Error&) {
        }
    }
}

// ---- geometric oracles, independent of the closure code in the library ----

struct P2 {
    double x, y;
};

inline double orient2(P2 a, P2 b, P2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

// proper crossing of closed segments pq and rs (touching endpoints do not count)
inline bool proper_cross(P2 p, P2 q, P2 r, P2 s)
{
    const double d1 = orient2(p, q, r), d2 = orient2(p, q, s), d3 = orient2(r, s, p), d4 = orient2(r, s, q);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

inline bool quad_self_crosses(const fourbar::Vertices& v)
{
    const P2 A{v.A.x, v.A.y}, B{v.B.x, v.B.y}, C{v.C.x, v.C.y}, D{v.D.x, v.D.y};
    // polygon A-D-B-C-A: opposite sides AD/BC and DB/CA
    return proper_cross(A, D, B, C) || proper_cross(D, B, C, A);
}

inline std::vector<P2> circle_intersections(P2 c0, double r0, P2 c1, double r1)
{
    const double dx = c1.x - c0.x, dy = c1.y - c0.y, d = std::hypot(dx, dy);
    if (d == 0) return {};
    const double a = (r0 * r0 - r1 * r1 + d * d) / (2 * d);
    double h2 = r0 * r0 - a * a;
    if (h2 < -1e-9 * r0 * r0) return {};
    const double h = std::sqrt(std::max(0.0, h2));
    const P2 m{c0.x + a * dx / d, c0.y + a * dy / d};
    return {{m.x - h * dy / d, m.y + h * dx / d}, {m.x + h * dy / d, m.y - h * dx / d}};
}

inline double wrap_angle(double a)
{
    const double pi = std::numbers::pi;
    while (a <= -pi) a += 2 * pi;
    while (a > pi) a -= 2 * pi;
    return a;
}

// Half-angle tangents of a closed quadrilateral A=(0,0), D=(beta,0), B, C with
// x from C = (-alpha cos, alpha sin), y from B - D, z and w as turning angles.
inline std::array<fourbar::ProjReal, 4> tangents_of(const fourbar::BarLengths& L, P2 B, P2 C)
{
    const double rx = std::atan2(C.y, -C.x);
    const double ry = std::atan2(B.y, B.x - L.beta);
    auto turn = [](P2 a, P2 b) { return std::atan2(a.x * b.y - a.y * b.x, a.x * b.x + a.y * b.y); };
    const double rz = turn({B.x - L.beta, B.y}, {C.x - B.x, C.y - B.y});
    const double rw = turn({C.x - B.x, C.y - B.y}, {-C.x, -C.y});
    auto tp = [](double r) { return fourbar::ProjReal(std::sin(wrap_angle(r) / 2), std::cos(wrap_angle(r) / 2)); };
    return {tp(rx), tp(ry), tp(rz), tp(rw)};
}

// All configurations with joint k folded flat (rotational angle pi), built by
// circle intersection.
inline std::vector<std::array<fourbar::ProjReal, 4>> folded_configurations(const fourbar::BarLengths& L, int k)
{
    const double a = L.alpha, b = L.beta, c = L.gamma, d = L.delta;
    const P2 A{0, 0}, D{b, 0};
    std::vector<std::array<fourbar::ProjReal, 4>> out;
    switch (k) {
    case 0: {
        const P2 C{a, 0};
        for (P2 B : circle_intersections(D, c, C, d)) out.push_back(tangents_of(L, B, C));
        break;
    }
    case 1: {
        const P2 B{b - c, 0};
        for (P2 C : circle_intersections(A, a, B, d)) out.push_back(tangents_of(L, B, C));
        break;
    }
    case 2: {
        // C on the ray from D through B at signed distance c - d
        for (P2 C : circle_intersections(D, std::abs(c - d), A, a)) {
            const double f = c / (c - d);
            const P2 B{D.x + f * (C.x - D.x), D.y + f * (C.y - D.y)};
            out.push_back(tangents_of(L, B, C));
        }
        break;
    }
    case 3: {
        // C = -a B / (d - a), so |B| = |d - a|
        for (P2 B : circle_intersections(D, c, A, std::abs(d - a))) {
            const P2 C{-a * B.x / (d - a), -a * B.y / (d - a)};
            out.push_back(tangents_of(L, B, C));
        }
        break;
    }
    }
    return out;
}

inline double tuple_gap(const std::array<fourbar::ProjReal, 4>& s, const std::array<fourbar::ProjReal, 4>& t)
{
    return fourbar::tuple_distance(s, t);
}

// ---- CLI runner ----

struct RunResult {
    int status;
    std::string out;
};

inline RunResult run_cli(const std::string& args)
{
    const std::string cmd = std::string(FOURBAR_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    RunResult r{-1, {}};
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

} // namespace testsupport
