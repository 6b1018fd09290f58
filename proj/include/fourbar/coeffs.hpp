#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "lengths.hpp"
#include "projreal.hpp"

namespace fourbar {

// f(x,y) = f22 x^2y^2 + f20 x^2 + 2 f11 xy + f02 y^2 + f00
struct AdjCoeffs {
    double f22, f20, f11, f02, f00;
};

// g(x,z) = g22 x^2z^2 + g20 x^2 + g02 z^2 + g00
struct OppCoeffs {
    double g22, g20, g02, g00;
};

// h(u,v) = u^4v^2 + u^2v^4 + h11 u^2v^2 + h10 u^2 + h01 v^2 + h00
struct DiagCoeffs {
    double h11, h10, h01, h00;
};

namespace detail {

inline void cross_check(double a, double b, double scale, const char* what)
{
    if (std::abs(a - b) > 1e-12 * scale)
        throw std::logic_error(std::string("coefficient forms disagree: ") + what);
}

inline double mag2(const Quad& q)
{
    const double m = std::abs(q[0]) + std::abs(q[1]) + std::abs(q[2]) + std::abs(q[3]);
    return m * m + 1e-300;
}

}

// Works on signed tuples too (strip-switched lengths).
inline AdjCoeffs f_coeffs(const Quad& q)
{
    const auto [a, b, c, d] = q;
    const double s = semi_perimeter(q);
    AdjCoeffs f{(s - b) * (s - b - d), (s - a) * (s - a - d), -a * c, (s - c) * (s - c - d), s * (s - d)};
    const double sc = detail::mag2(q);
    detail::cross_check(f.f22, (a - b + c + d) * (a - b + c - d) / 4, sc, "f22");
    detail::cross_check(f.f20, (-a + b + c + d) * (-a + b + c - d) / 4, sc, "f20");
    detail::cross_check(f.f02, (a + b - c - d) * (a + b - c + d) / 4, sc, "f02");
    detail::cross_check(f.f00, (a + b + c + d) * (a + b + c - d) / 4, sc, "f00");
    return f;
}

inline OppCoeffs g_coeffs(const Quad& q)
{
    const auto [a, b, c, d] = q;
    const double s = semi_perimeter(q);
    OppCoeffs g{(s - a - c) * (s - b - c), (s - a) * (s - b), -(s - c) * (s - d), s * (s - a - b)};
    const double sc = detail::mag2(q);
    detail::cross_check(g.g22, (a - b + c - d) * (-a + b + c - d) / 4, sc, "g22");
    detail::cross_check(g.g20, (-a + b + c + d) * (a - b + c + d) / 4, sc, "g20");
    detail::cross_check(g.g02, (-a - b + c - d) * (a + b + c - d) / 4, sc, "g02");
    detail::cross_check(g.g00, (a + b + c + d) * (-a - b + c + d) / 4, sc, "g00");
    return g;
}

inline DiagCoeffs h_coeffs(const Quad& q)
{
    const auto [a, b, c, d] = q;
    const double a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
    DiagCoeffs h{-(a2 + b2 + c2 + d2), -(b2 - c2) * (d2 - a2), -(a2 - b2) * (c2 - d2),
                 (a2 * c2 - b2 * d2) * (a2 - b2 + c2 - d2)};
    const double s = semi_perimeter(q);
    const double sa = s - a, sb = s - b, scc = s - c, sd = s - d;
    detail::cross_check(h.h11, -(sa * sa + sb * sb + scc * scc + sd * sd), detail::mag2(q), "h11");
    return h;
}

inline AdjCoeffs f_coeffs(const BarLengths& L) { return f_coeffs(L.quad()); }
inline OppCoeffs g_coeffs(const BarLengths& L) { return g_coeffs(L.quad()); }
inline DiagCoeffs h_coeffs(const BarLengths& L) { return h_coeffs(L.quad()); }

// Relabelings used by the pairwise relations around the quadrilateral.
// f(shift(L,k), t_k, t_{k+1}) = 0 for (t_0..t_3) = (x,y,z,w); g(shift(L,k), t_k, t_{k+2}) = 0.
inline Quad shift(const Quad& q, int k)
{
    Quad r;
    for (int i = 0; i < 4; ++i) r[i] = q[(i + k) % 4];
    return r;
}

// Bihomogeneous forms. Note the f02 monomial is x2^2 y1^2.
inline double eval_f(const AdjCoeffs& c, const ProjReal& x, const ProjReal& y)
{
    const double x1 = x.num, x2 = x.den, y1 = y.num, y2 = y.den;
    return c.f22 * x1 * x1 * y1 * y1 + c.f20 * x1 * x1 * y2 * y2 + 2 * c.f11 * x1 * y1 * x2 * y2 +
           c.f02 * x2 * x2 * y1 * y1 + c.f00 * x2 * x2 * y2 * y2;
}

inline double eval_g(const OppCoeffs& c, const ProjReal& x, const ProjReal& z)
{
    const double x1 = x.num, x2 = x.den, z1 = z.num, z2 = z.den;
    return c.g22 * x1 * x1 * z1 * z1 + c.g20 * x1 * x1 * z2 * z2 + c.g02 * z1 * z1 * x2 * x2 +
           c.g00 * x2 * x2 * z2 * z2;
}

inline double eval_h(const DiagCoeffs& c, double u, double v)
{
    const double U = u * u, V = v * v;
    return U * U * V + U * V * V + c.h11 * U * V + c.h10 * U + c.h01 * V + c.h00;
}

struct QuadraticRoots {
    std::vector<ProjReal> roots;
    bool real = true;  // false: complex-conjugate pair, roots is empty
};

// Roots of A t1^2 + 2B t1 t2 + C t2^2 = 0 on the projective line.
inline QuadraticRoots solve_binary_quadratic(double A, double B, double C)
{
    QuadraticRoots out;
    const double scale = std::max({std::abs(A), std::abs(B), std::abs(C)});
    if (scale == 0.0) throw Error(err::DegenerateIdentically, "all quadratic coefficients vanish");
    const double a = A / scale, b = B / scale, c = C / scale;
    double disc = b * b - a * c;
    if (disc < 0) {
        if (disc < -1e-13) {
            out.real = false;
            return out;
        }
        disc = 0;
    }
    const double q = -(b + std::copysign(std::sqrt(disc), b));
    if (q == 0.0) {
        // b == 0 and a*c == 0
        out.roots.push_back(a == 0.0 ? ProjReal::infinity() : ProjReal(0.0, 1.0));
        return out;
    }
    ProjReal r1(q, a), r2(c, q);
    out.roots.push_back(r1);
    if (proj_distance(r1, r2) > 1e-15) out.roots.push_back(r2);
    return out;
}

inline QuadraticRoots solve_f_for_second(const AdjCoeffs& c, const ProjReal& x)
{
    const double x1 = x.num, x2 = x.den;
    return solve_binary_quadratic(c.f22 * x1 * x1 + c.f02 * x2 * x2, c.f11 * x1 * x2,
                                  c.f20 * x1 * x1 + c.f00 * x2 * x2);
}

// z with g(x,z) = 0: z^2 = -(g20 x^2 + g00) / (g22 x^2 + g02)
inline std::vector<ProjReal> solve_g_for_opposite(const OppCoeffs& c, const ProjReal& x)
{
    const double x1 = x.num, x2 = x.den;
    const double P = c.g22 * x1 * x1 + c.g02 * x2 * x2;
    const double R = c.g20 * x1 * x1 + c.g00 * x2 * x2;
    const double scale = std::max(std::abs(P), std::abs(R));
    if (scale == 0.0) throw Error(err::DegenerateIdentically, "g vanishes for every z at this x");
    const double p = P / scale, r = R / scale;
    const double eps = 1e-14;
    if (std::abs(p) <= eps) return {ProjReal::infinity()};
    if (std::abs(r) <= eps) return {ProjReal(0.0, 1.0)};
    if ((p > 0) == (r > 0)) return {};
    ProjReal z(std::sqrt(std::abs(r)), std::sqrt(std::abs(p)));
    return {z, -z};
}

struct StripSwitch {
    Quad lengths;
    std::array<ProjReal, 4> config;
};

inline StripSwitch switch_strip(const Quad& L, const std::array<ProjReal, 4>& t, int variant)
{
    const auto [a, b, c, d] = L;
    const auto& [x, y, z, w] = t;
    auto ninv = [](const ProjReal& p) { return -p.inverse(); };
    switch (variant) {
    case 1: return {{a, b, -c, -d}, {x, ninv(y), -z, ninv(w)}};
    case 2: return {{-a, b, c, -d}, {ninv(x), y, ninv(z), -w}};
    case 3: return {{-a, -b, c, d}, {-x, ninv(y), z, ninv(w)}};
    case 4: return {{a, -b, -c, d}, {ninv(x), -y, ninv(z), w}};
    }
    throw std::invalid_argument("switch_strip: variant must be 1..4");
}

} // namespace fourbar
