#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lengths.hpp"
#include "param.hpp"
#include "projreal.hpp"

namespace fourbar {

struct InfinitySolution {
    bool circle = false;          // a one-parameter family rather than a point
    std::string pattern;          // e.g. "(x,inf,-x,inf)" for circles
    std::optional<Tuple4> tuple;  // present for reachable points; a representative for circles
    bool reachable = true;
    std::string condition;        // gating inequality, empty when always reachable
};

namespace detail {

inline double root(double v)
{
    if (v < 0 && v > -1e-12) v = 0;
    return std::sqrt(v);
}

inline ProjReal fin(double v) { return ProjReal::finite(v); }
inline ProjReal rec(double v) { return ProjReal(1.0, v); }  // 1/v, inf at 0

inline void add_pair(std::vector<InfinitySolution>& out, bool gate, const std::string& cond, const Tuple4& p,
                     const Tuple4& q)
{
    for (const Tuple4* t : {&p, &q}) {
        InfinitySolution s;
        s.reachable = gate;
        s.condition = cond;
        if (gate) s.tuple = *t;
        out.push_back(s);
    }
}

}

inline std::vector<InfinitySolution> solutions_at_infinity(const BarLengths& L, double rel_tol = default_class_tol)
{
    using namespace detail;
    const Kind kind = classify(L, rel_tol).kind;
    const double a = L.alpha, b = L.beta, c = L.gamma, d = L.delta, s = L.sigma;
    const ProjReal inf = ProjReal::infinity(), zero(0.0, 1.0), one(1.0, 1.0);
    std::vector<InfinitySolution> out;
    auto point = [&](Tuple4 t) {
        InfinitySolution x;
        x.tuple = t;
        out.push_back(x);
    };
    auto circle = [&](const char* pattern, Tuple4 rep) {
        InfinitySolution x;
        x.circle = true;
        x.pattern = pattern;
        x.tuple = rep;
        out.push_back(x);
    };
    switch (kind) {
    case Kind::Rhombus:
        circle("(x,inf,-x,inf)", {one, inf, -one, inf});
        circle("(inf,y,inf,-y)", {inf, one, inf, -one});
        break;
    case Kind::Isogram:
        point({inf, zero, inf, zero});
        point({zero, inf, zero, inf});
        break;
    case Kind::DeltoidI: circle("(x,inf,-x,inf)", {one, inf, -one, inf}); break;
    case Kind::DeltoidII: circle("(inf,y,inf,-y)", {inf, one, inf, -one}); break;
    case Kind::ConicI: point({inf, inf, inf, inf}); break;
    case Kind::ConicII: {
        const double sg = sgn((a + b - c - d) / 2);
        point({inf, zero, inf, zero});
        if (d * a > b * c) {
            const double X = root(a * (b - c) / (c * (b - a)) - 1), Z = root(d * (c - b) / (b * (c - d)) - 1),
                         Wi = root(d * a / (b * c) - 1);
            add_pair(out, true, "delta*alpha > beta*gamma", {fin(sg * X), inf, fin(-sg * Z), rec(Wi)},
                     {fin(-sg * X), inf, fin(sg * Z), rec(-Wi)});
        } else {
            const double X = root(b * (a - d) / (d * (a - b)) - 1), Yi = root(b * c / (d * a) - 1),
                         Z = root(c * (d - a) / (a * (d - c)) - 1);
            add_pair(out, true, "delta*alpha < beta*gamma", {fin(sg * X), rec(Yi), fin(-sg * Z), inf},
                     {fin(-sg * X), rec(-Yi), fin(sg * Z), inf});
        }
        break;
    }
    case Kind::ConicIII: {
        const double sg = sgn((-a + b + c - d) / 2);
        point({zero, inf, zero, inf});
        if (c * d > a * b) {
            const double Y = root(c * (b - a) / (a * (b - c)) - 1), Zi = root(c * d / (a * b) - 1),
                         W = root(d * (a - b) / (b * (a - d)) - 1);
            add_pair(out, true, "gamma*delta > alpha*beta", {inf, fin(sg * Y), rec(Zi), fin(-sg * W)},
                     {inf, fin(-sg * Y), rec(-Zi), fin(sg * W)});
        } else {
            const double Xi = root(a * b / (c * d) - 1), Y = root(b * (c - d) / (d * (c - b)) - 1),
                         W = root(a * (d - c) / (c * (d - a)) - 1);
            add_pair(out, true, "gamma*delta < alpha*beta", {rec(Xi), fin(sg * Y), inf, fin(-sg * W)},
                     {rec(-Xi), fin(-sg * Y), inf, fin(sg * W)});
        }
        break;
    }
    case Kind::Elliptic: {
        const double M1 = modulus_M(L) - 1;
        const double sa = s - a, sb = s - b, sc = s - c, sd = s - d;
        const double t1 = s - a - c > 0 ? 1.0 : -1.0, t2 = s - b - d > 0 ? 1.0 : -1.0;
        {
            const bool g = M1 * (s - a - b) < 0;
            Tuple4 p{}, q{};
            if (g) {
                const double Y = root(c * (b - a) / (sb * (s - a - c)) - 1), Zi = root(c * d / (sa * sb) - 1),
                             W = root(d * (a - b) / (sa * (s - b - d)) - 1);
                p = {inf, fin(t1 * Y), rec(Zi), fin(-t1 * W)};
                q = {inf, fin(-t1 * Y), rec(-Zi), fin(t1 * W)};
            }
            add_pair(out, g, "(M-1)(sigma-alpha-beta) < 0", p, q);
        }
        {
            const bool g = M1 * (s - b - c) < 0;
            Tuple4 p{}, q{};
            if (g) {
                const double Z = root(d * (c - b) / (sc * (s - b - d)) - 1), Wi = root(d * a / (sb * sc) - 1),
                             X = root(a * (b - c) / (sb * (s - a - c)) - 1);
                p = {fin(-t2 * X), inf, fin(t2 * Z), rec(Wi)};
                q = {fin(t2 * X), inf, fin(-t2 * Z), rec(-Wi)};
            }
            add_pair(out, g, "(M-1)(sigma-beta-gamma) < 0", p, q);
        }
        {
            const bool g = M1 * (s - c - d) < 0;
            Tuple4 p{}, q{};
            if (g) {
                const double W = root(a * (d - c) / (sd * (s - a - c)) - 1), Xi = root(a * b / (sc * sd) - 1),
                             Y = root(b * (c - d) / (sc * (s - b - d)) - 1);
                p = {rec(Xi), fin(-t1 * Y), inf, fin(t1 * W)};
                q = {rec(-Xi), fin(t1 * Y), inf, fin(-t1 * W)};
            }
            add_pair(out, g, "(M-1)(sigma-gamma-delta) < 0", p, q);
        }
        {
            const bool g = M1 * (s - d - a) < 0;
            Tuple4 p{}, q{};
            if (g) {
                const double X = root(b * (a - d) / (sa * (s - b - d)) - 1), Yi = root(b * c / (sa * sd) - 1),
                             Z = root(c * (d - a) / (sd * (s - a - c)) - 1);
                p = {fin(t2 * X), rec(Yi), fin(-t2 * Z), inf};
                q = {fin(-t2 * X), rec(-Yi), fin(t2 * Z), inf};
            }
            add_pair(out, g, "(M-1)(sigma-delta-alpha) < 0", p, q);
        }
        break;
    }
    }
    return out;
}

} // namespace fourbar
