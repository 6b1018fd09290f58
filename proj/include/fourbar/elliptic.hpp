#pragma once

// Jacobi elliptic functions and complete integrals.
// k is always the modulus, never the parameter m = k^2.

#include <cmath>
#include <algorithm>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace fourbar {

using cplx = std::complex<double>;

inline double agm(double a, double b)
{
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
        double an = (a + b) / 2;
        b = std::sqrt(a * b);
        a = an;
    }
    return (a + b) / 2;
}

// complementary modulus without the cancellation of sqrt(1 - k*k)
inline double complement(double k) { return std::sqrt((1 - k) * (1 + k)); }

// K from the complementary modulus directly (keeps precision when k is close to 1)
inline double complete_K_from_complement(double kp)
{
    if (!(kp > 0 && kp <= 1)) throw Error(err::ModulusOutOfRange, "k' must be in (0,1]");
    return std::numbers::pi / (2 * agm(1.0, kp));
}

inline double complete_K(double k)
{
    if (!(k >= 0 && k < 1)) throw Error(err::ModulusOutOfRange, "k must be in [0,1), K(1) is infinite");
    return complete_K_from_complement(complement(k));
}

struct Modulus {
    double k = 0, k_prime = 1, K = std::numbers::pi / 2, K_prime = 0;
};

// both k and k' given so callers can keep whichever is computed accurately
inline Modulus make_modulus(double k, double kp)
{
    if (!(k > 0 && k < 1 && kp > 0 && kp < 1))
        throw Error(err::ModulusOutOfRange, "elliptic modulus must be strictly inside (0,1)");
    return {k, kp, complete_K_from_complement(kp), complete_K_from_complement(k)};
}

inline Modulus make_modulus(double k) { return make_modulus(k, complement(k)); }

template <class T>
struct Triple {
    T sn, cn, dn;
};
using JacobiReal = Triple<double>;
using JacobiTriple = Triple<cplx>;

namespace detail {

// descending Landen / AGM; 0 < k < 1
inline JacobiReal jacobi_landen(double u, double k, double kp)
{
    double a[40], c[40];
    a[0] = 1;
    double b = kp;
    c[0] = k;
    int n = 0;
    while (std::abs(c[n]) > 1e-15 && n < 38) {
        a[n + 1] = (a[n] + b) / 2;
        c[n + 1] = (a[n] - b) / 2;
        b = std::sqrt(a[n] * b);
        ++n;
    }
    double phi = std::ldexp(a[n] * u, n);
    for (int i = n; i > 0; --i) phi = (phi + std::asin(c[i] / a[i] * std::sin(phi))) / 2;
    const double sn = std::sin(phi), cn = std::cos(phi);
    return {sn, cn, std::sqrt(kp * kp + k * k * cn * cn)};
}

}

// Real argument; k' passed explicitly (must equal sqrt(1-k^2)).
inline JacobiReal jacobi_real(double u, double k, double kp)
{
    if (!(k >= 0 && k <= 1)) throw Error(err::ModulusOutOfRange, "k must be in [0,1]");
    if (u == 0) return {0, 1, 1};
    if (k == 0) return {std::sin(u), std::cos(u), 1};
    if (kp == 0) {
        double sech = 1 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }
    const double K = complete_K_from_complement(kp);
    // reduce to [-2K, 2K] using the 4K period of sn and cn (dn has period 2K)
    double r = std::remainder(u, 4 * K);
    const double eps = 4 * std::numeric_limits<double>::epsilon() * K;
    if (std::abs(r - K) <= eps) return {1, 0, kp};
    if (std::abs(r + K) <= eps) return {-1, 0, kp};
    if (std::abs(std::abs(r) - 2 * K) <= eps) return {0, -1, 1};
    if (std::abs(r) <= eps) return {0, 1, 1};
    return detail::jacobi_landen(r, k, kp);
}

inline JacobiReal jacobi_real(double u, double k) { return jacobi_real(u, k, complement(k)); }

// Poles sit at 2mK + (2n+1) i K'. Returns the distance to the nearest one.
inline double pole_distance(cplx t, const Modulus& m)
{
    const double du = t.real() - 2 * m.K * std::round(t.real() / (2 * m.K));
    const double dv = t.imag() - m.K_prime - 2 * m.K_prime * std::round((t.imag() - m.K_prime) / (2 * m.K_prime));
    return std::hypot(du, dv);
}

inline JacobiTriple jacobi_complex(cplx t, const Modulus& m)
{
    if (pole_distance(t, m) < 1e-8) throw Error(err::NearPole, "argument within 1e-8 of a pole");
    const auto [s, c, d] = jacobi_real(t.real(), m.k, m.k_prime);
    if (t.imag() == 0) return {s, c, d};
    // imaginary transformation: sn(iv;k) = i sc(v;k'), cn(iv;k) = nc(v;k'), dn(iv;k) = dc(v;k')
    const auto [s1, c1, d1] = jacobi_real(t.imag(), m.k_prime, m.k);
    const double k2 = m.k * m.k;
    const double den = c1 * c1 + k2 * s * s * s1 * s1;
    const cplx I(0, 1);
    return {(s * d1 + I * c * d * s1 * c1) / den, (c * c1 - I * s * d * s1 * d1) / den,
            (d * c1 * d1 - I * k2 * s * c * s1) / den};
}

inline JacobiTriple jacobi_complex(cplx t, double k) { return jacobi_complex(t, make_modulus(k)); }

using HomPair = std::pair<cplx, cplx>;

// (num, den) for each function, finite everywhere including at poles.
inline Triple<HomPair> jacobi_homogeneous(cplx t, const Modulus& m)
{
    if (pole_distance(t, m) > 0.25 * std::min(m.K, m.K_prime)) {
        const auto j = jacobi_complex(t, m);
        return {{j.sn, 1.0}, {j.cn, 1.0}, {j.dn, 1.0}};
    }
    // shift by iK': sn(u+iK') = 1/(k sn u), cn(u+iK') = -i dn u/(k sn u), dn(u+iK') = -i cn u/sn u
    const auto j = jacobi_complex(t - cplx(0, m.K_prime), m);
    const cplx I(0, 1);
    return {{1.0, m.k * j.sn}, {-I * j.dn, m.k * j.sn}, {-I * j.cn, j.sn}};
}

inline double dc(double u, double k)
{
    const auto j = jacobi_real(u, k);
    return j.dn / j.cn;
}

// u in [0, K) with dc(u;k) = v. dc increases from 1 at u=0 to +inf at u=K.
inline double inverse_dc(double v, double k, double kp)
{
    if (!std::isfinite(v) || v < 1) throw Error(err::TargetOutOfRange, "dc takes values in [1, inf) on [0, K)");
    if (v == 1) return 0;
    const double K = complete_K_from_complement(kp);
    double lo = 0, hi = K;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        if (mid <= lo || mid >= hi) break;
        const auto j = jacobi_real(mid, k, kp);
        if (j.dn / j.cn < v && j.cn > 0) lo = mid;
        else hi = mid;
    }
    return (lo + hi) / 2;
}

inline double inverse_dc(double v, double k) { return inverse_dc(v, k, complement(k)); }

} // namespace fourbar
