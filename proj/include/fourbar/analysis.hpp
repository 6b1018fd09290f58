#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "geometry.hpp"
#include "infinity.hpp"
#include "lengths.hpp"
#include "param.hpp"

namespace fourbar {

struct Grashof {
    bool holds;
    double margin;  // sigma - max - min
};

inline Grashof grashof(const BarLengths& L)
{
    const Quad q = L.quad();
    const double mx = *std::max_element(q.begin(), q.end()), mn = *std::min_element(q.begin(), q.end());
    const double margin = L.sigma - mx - mn;
    return {margin > 0, margin};
}

namespace detail {

inline int orient(Vec2 a, Vec2 b, Vec2 c)
{
    const double v = cross(b - a, c - a);
    return (v > 0) - (v < 0);
}

inline bool segments_cross(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2)
{
    return orient(p1, p2, q1) * orient(p1, p2, q2) < 0 && orient(q1, q2, p1) * orient(q1, q2, p2) < 0;
}

}

// Opposite bars crossing: AD with BC, or DB with CA.
inline bool crosses_geometrically(const Vertices& v)
{
    return detail::segments_cross(v.A, v.D, v.B, v.C) || detail::segments_cross(v.D, v.B, v.C, v.A);
}

inline bool is_self_intersected(const Configuration& c)
{
    std::array<int, 4> s{};
    for (int i = 0; i < 4; ++i) {
        s[i] = sign_of(c.t[i]);
        if (s[i] == 0) throw Error(err::AngleAtInfinityOrZero, "sign test needs finite nonzero tangents");
    }
    static const std::array<std::array<int, 4>, 4> patterns{
        {{1, 1, -1, -1}, {-1, 1, 1, -1}, {-1, -1, 1, 1}, {1, -1, -1, 1}}};
    return std::find(patterns.begin(), patterns.end(), s) != patterns.end();
}

// sign test where it applies, vertex geometry otherwise
inline bool self_intersected(const Configuration& c)
{
    for (const auto& t : c.t)
        if (t.is_zero() || t.is_inf()) return crosses_geometrically(c.vertices);
    return is_self_intersected(c);
}

struct TopologyReport {
    LinkageClass cls;
    std::vector<std::string> branch_kinds;  // "S1", "line" or "arc" per finite branch
    int finite_branches = 0;
    int finite_components = 0;
    int infinity_circles = 0;
    int infinity_points = 0;  // reachable isolated points
    bool grashof = false;
    double grashof_margin = 0;
    std::vector<std::string> fully_rotating_joints;
    std::array<bool, 4> reaches_infinity{};  // per tangent x, y, z, w
    std::string elliptic_form;               // "cn" / "sn" for elliptic lengths
};

// joint j sits between bars j-1 and j (x: alpha,beta; y: beta,gamma; ...)
inline std::array<double, 4> joint_bars(const BarLengths& L, int j)
{
    const Quad q = L.quad();
    return {q[j], q[(j + 1) % 4], q[(j + 2) % 4], q[(j + 3) % 4]};
}

// folded flat (angle pi, tangent inf): the diagonal |p - q| must be spanned by the other two bars
inline bool joint_reaches_pi(const BarLengths& L, int j, double tol = 1e-12)
{
    const auto [p, q, r, s] = joint_bars(L, j);
    return std::abs(r - s) <= std::abs(p - q) + tol * L.sigma;
}

inline bool joint_reaches_zero(const BarLengths& L, int j, double tol = 1e-12)
{
    const auto [p, q, r, s] = joint_bars(L, j);
    return p + q <= r + s + tol * L.sigma;
}

inline TopologyReport topology_report(const BarLengths& L, double rel_tol = default_class_tol)
{
    TopologyReport r;
    r.cls = classify(L, rel_tol);
    const auto branches = enumerate_branches(L, rel_tol);
    bool cn_halves = false;
    for (const auto& b : branches) {
        if (b.kind == ParamKind::InfinityCircle) {
            ++r.infinity_circles;
            continue;
        }
        ++r.finite_branches;
        if (b.kind == ParamKind::EllipticCn) {
            r.branch_kinds.push_back("arc");
            cn_halves = true;
        } else {
            r.branch_kinds.push_back(b.compact ? "S1" : "line");
        }
    }
    r.finite_components = cn_halves ? 1 : r.finite_branches;
    for (const auto& s : solutions_at_infinity(L, rel_tol)) {
        if (s.circle) {
            // circles already counted when they are enumerated as branches
            if (r.cls.kind == Kind::DeltoidII) ++r.infinity_circles;
        } else if (s.reachable) {
            ++r.infinity_points;
        }
    }
    const Grashof g = grashof(L);
    r.grashof = g.holds;
    r.grashof_margin = g.margin;
    static const char* names[] = {"x", "y", "z", "w"};
    for (int j = 0; j < 4; ++j) {
        r.reaches_infinity[j] = joint_reaches_pi(L, j);
        if (joint_reaches_pi(L, j) && joint_reaches_zero(L, j)) r.fully_rotating_joints.push_back(names[j]);
    }
    if (r.cls.kind == Kind::Elliptic) r.elliptic_form = modulus_M(L) > 1 ? "cn" : "sn";
    return r;
}

} // namespace fourbar
