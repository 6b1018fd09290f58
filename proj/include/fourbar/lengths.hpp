#pragma once

#include <array>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace fourbar {

// (alpha, beta, gamma, delta), possibly signed after a strip switch
using Quad = std::array<double, 4>;

inline double semi_perimeter(const Quad& q) { return (q[0] + q[1] + q[2] + q[3]) / 2.0; }

struct BarLengths {
    double alpha = 1, beta = 1, gamma = 1, delta = 1;
    double sigma = 2;

    Quad quad() const { return {alpha, beta, gamma, delta}; }
};

inline const char* bar_name(int i)
{
    static const char* names[] = {"alpha", "beta", "gamma", "delta"};
    return names[i];
}

inline BarLengths validate_lengths(double alpha, double beta, double gamma, double delta)
{
    Quad q{alpha, beta, gamma, delta};
    for (int i = 0; i < 4; ++i)
        if (!std::isfinite(q[i]) || q[i] <= 0)
            throw Error(err::NonPositiveLength, std::string(bar_name(i)) + " must be finite and > 0");
    double total = q[0] + q[1] + q[2] + q[3];
    for (int i = 0; i < 4; ++i)
        if (!(q[i] < total - q[i]))
            throw Error(err::QuadrilateralInequalityViolated,
                        std::string(bar_name(i)) + " is not shorter than the sum of the other three");
    return BarLengths{alpha, beta, gamma, delta, total / 2.0};
}

inline BarLengths validate_lengths(const Quad& q) { return validate_lengths(q[0], q[1], q[2], q[3]); }

enum class Kind { Rhombus, Isogram, DeltoidI, DeltoidII, ConicI, ConicII, ConicIII, Elliptic };

inline const char* kind_name(Kind k)
{
    switch (k) {
    case Kind::Rhombus: return "rhombus";
    case Kind::Isogram: return "isogram";
    case Kind::DeltoidI: return "deltoid_i";
    case Kind::DeltoidII: return "deltoid_ii";
    case Kind::ConicI: return "conic_i";
    case Kind::ConicII: return "conic_ii";
    case Kind::ConicIII: return "conic_iii";
    case Kind::Elliptic: return "elliptic";
    }
    return "?";
}

struct LinkageClass {
    Kind kind = Kind::Elliptic;
    bool orthodiagonal = false;
};

inline constexpr double default_class_tol = 1e-9;

inline LinkageClass classify(const BarLengths& L, double rel_tol = default_class_tol)
{
    const double a = L.alpha, b = L.beta, c = L.gamma, d = L.delta;
    const bool z1 = std::abs(a - b + c - d) <= rel_tol * L.sigma;
    const bool z2 = std::abs(a - b - c + d) <= rel_tol * L.sigma;
    const bool z3 = std::abs(a + b - c - d) <= rel_tol * L.sigma;
    LinkageClass out;
    if (z1 && z2 && z3) out.kind = Kind::Rhombus;
    else if (z2 && z3) out.kind = Kind::Isogram;
    else if (z1 && z3) out.kind = Kind::DeltoidI;
    else if (z1 && z2) out.kind = Kind::DeltoidII;
    else if (z1) out.kind = Kind::ConicI;
    else if (z2) out.kind = Kind::ConicII;
    else if (z3) out.kind = Kind::ConicIII;
    else {
        out.kind = Kind::Elliptic;
        out.orthodiagonal = std::abs(a * a + c * c - b * b - d * d) <= rel_tol * L.sigma * L.sigma;
    }
    return out;
}

inline BarLengths conjugate(const BarLengths& L)
{
    // the conjugate of a valid tuple is always valid; validate_lengths re-checks it
    return validate_lengths(L.sigma - L.alpha, L.sigma - L.beta, L.sigma - L.gamma, L.sigma - L.delta);
}

} // namespace fourbar
