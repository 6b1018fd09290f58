#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "coeffs.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "lengths.hpp"
#include "projreal.hpp"

namespace fourbar {

struct SolveResult {
    std::vector<Configuration> configs;
    // (x,inf,-x,inf) points of the rhombus / deltoid I infinity circle, kept apart from configs
    std::vector<Configuration> on_infinity_circle;
    // true when x lies on a circle of solutions (some relation vanishes for every value)
    bool continuum = false;
};

inline double tuple_distance(const std::array<ProjReal, 4>& a, const std::array<ProjReal, 4>& b)
{
    double d = 0;
    for (int i = 0; i < 4; ++i) d = std::max(d, proj_distance(a[i], b[i]));
    return d;
}

// Worst normalized residual of the pairwise relations around the quadrilateral.
inline double relation_residual(const BarLengths& L, const std::array<ProjReal, 4>& t)
{
    const Quad q = L.quad();
    double r = 0;
    for (int k = 0; k < 4; ++k) r = std::max(r, std::abs(eval_f(f_coeffs(shift(q, k)), t[k], t[(k + 1) % 4])));
    for (int k = 0; k < 2; ++k) r = std::max(r, std::abs(eval_g(g_coeffs(shift(q, k)), t[k], t[k + 2])));
    return r / (L.sigma * L.sigma);
}

inline SolveResult solve_at_x(const BarLengths& L, const ProjReal& x, double tol = 1e-7)
{
    SolveResult out;
    const auto [a, b, c, d] = L.quad();
    const Kind kind = classify(L).kind;
    const bool has_y_circle = kind == Kind::Rhombus || kind == Kind::DeltoidI;
    std::vector<ProjReal> ys, zs, ws;
    try {
        const auto yr = solve_f_for_second(f_coeffs(L), x);
        const auto wr = solve_f_for_second(f_coeffs(Quad{b, a, d, c}), x);
        ys = yr.roots;
        ws = wr.roots;
        zs = solve_g_for_opposite(g_coeffs(L), x);
    } catch (const Error& e) {
        if (e.code != err::DegenerateIdentically) throw;
        out.continuum = true;
        if (kind == Kind::Rhombus) {
            // the finite branch still passes through this x
            const std::array<ProjReal, 4> t{x, x.inverse(), x, x.inverse()};
            Configuration cfg;
            if (try_configuration(L, t, tol, cfg)) out.configs.push_back(cfg);
        }
        return out;
    }
    for (const auto& y : ys)
        for (const auto& z : zs)
            for (const auto& w : ws) {
                const std::array<ProjReal, 4> t{x, y, z, w};
                Configuration cfg;
                if (!try_configuration(L, t, tol, cfg)) continue;
                if (relation_residual(L, t) > tol) continue;
                auto add = [&](std::vector<Configuration>& dest) {
                    const bool dup = std::any_of(dest.begin(), dest.end(),
                                                 [&](const Configuration& o) { return tuple_distance(o.t, t) < 1e-9; });
                    if (!dup) dest.push_back(cfg);
                };
                const bool on_circle = has_y_circle && y.is_inf() && w.is_inf();
                if (on_circle) add(out.on_infinity_circle);
                // where the circle meets the finite branch
                if (!on_circle || x.is_zero() || (kind == Kind::DeltoidI && x.is_inf())) add(out.configs);
            }
    return out;
}

} // namespace fourbar
