#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fourbar {

// Point of R u {inf} as a ratio num/den, stored with max(|num|,|den|) = 1 and den >= 0.
struct ProjReal {
    double num = 0.0;
    double den = 1.0;

    ProjReal() = default;
    ProjReal(double n, double d) : num(n), den(d) { normalize(); }

    static ProjReal finite(double v)
    {
        if (std::isinf(v)) return infinity();
        return ProjReal(v, 1.0);
    }
    static ProjReal infinity() { return ProjReal(1.0, 0.0); }

    bool is_inf() const { return den == 0.0; }
    bool is_zero() const { return num == 0.0; }

    double value() const
    {
        return is_inf() ? std::numeric_limits<double>::infinity() : num / den;
    }

    ProjReal inverse() const { return ProjReal(den, num); }
    ProjReal operator-() const { return ProjReal(-num, den); }

    // rotational angle whose half-angle tangent this is, in (-pi, pi]
    double angle() const { return 2.0 * std::atan2(num, den); }

    static ProjReal from_angle(double rho)
    {
        if (std::abs(rho) == std::numbers::pi) return infinity();
        return ProjReal(std::sin(rho / 2.0), std::cos(rho / 2.0));
    }

    bool operator==(const ProjReal& o) const { return num == o.num && den == o.den; }

private:
    void normalize()
    {
        if (!std::isfinite(num) || !std::isfinite(den))
            throw std::invalid_argument("ProjReal: non-finite component");
        double m = std::max(std::abs(num), std::abs(den));
        if (m == 0.0) throw std::invalid_argument("ProjReal: (0,0) is not a point");
        num /= m;
        den /= m;
        if (den < 0.0 || (den == 0.0 && num < 0.0)) {
            num = -num;
            den = -den;
        }
        if (den == 0.0) { num = 1.0; den = 0.0; }
        if (num == 0.0) { num = 0.0; den = 1.0; }
    }
};

inline double proj_distance(const ProjReal& p, const ProjReal& q)
{
    double np = std::hypot(p.num, p.den), nq = std::hypot(q.num, q.den);
    return std::abs(p.num * q.den - p.den * q.num) / (np * nq);
}

inline int sign_of(const ProjReal& p)
{
    if (p.num == 0.0 || p.den == 0.0) return 0;
    return p.num > 0 ? 1 : -1;
}

// Real point from a homogeneous complex pair (n, d); the common phase is removed
// by multiplying through with conj(d) (or conj(n) when d is the small one).
// imag_out receives the leftover imaginary part relative to the pair's size.
inline ProjReal from_complex_pair(std::complex<double> n, std::complex<double> d, double* imag_out = nullptr)
{
    std::complex<double> ref = std::abs(d) >= std::abs(n) ? std::conj(d) : std::conj(n);
    std::complex<double> a = n * ref, b = d * ref;
    double scale = std::max(std::abs(a), std::abs(b));
    if (imag_out) *imag_out = std::max(std::abs(a.imag()), std::abs(b.imag())) / scale;
    return ProjReal(a.real(), b.real());
}

} // namespace fourbar
