#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "param.hpp"

namespace fourbar {

enum class Coordinate { Normalized, RhoX, S };

inline Coordinate parse_coordinate(const std::string& s)
{
    if (s == "normalized") return Coordinate::Normalized;
    if (s == "rho_x") return Coordinate::RhoX;
    if (s == "s") return Coordinate::S;
    throw std::invalid_argument("coordinate must be normalized, rho_x or s");
}

struct TracePoint {
    double coord;  // the requested coordinate of this sample
    Configuration config;
};

struct Trace {
    BranchDescriptor branch;
    std::vector<TracePoint> points;
};

inline constexpr int max_trace_samples = 100000;

// offset that keeps line samples off snap points (which sit at rational fractions of the domain)
inline constexpr double trace_phase = 0.3819660112501051;

inline Trace trace_branch(const BarLengths& L, int branch_id, int samples, Coordinate coord = Coordinate::Normalized,
                          double rel_tol = default_class_tol)
{
    if (samples < 2 || samples > max_trace_samples) throw std::invalid_argument("samples must be in [2, 100000]");
    const auto branches = enumerate_branches(L, rel_tol);
    if (branch_id < 1 || branch_id > static_cast<int>(branches.size()))
        throw std::invalid_argument("branch " + std::to_string(branch_id) + " does not exist for this class (" +
                                    std::to_string(branches.size()) + " branches)");
    Trace tr;
    tr.branch = branches[branch_id - 1];
    const BranchSampler smp(L, tr.branch, rel_tol);
    const bool circle = tr.branch.form != Form::Line;
    tr.points.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double u = (i + (circle ? 0.0 : trace_phase)) / samples;
        const double s = smp.s_from_normalized(u);
        Configuration c = smp.sample(s);
        double v = u;
        if (coord == Coordinate::S) v = s;
        else if (coord == Coordinate::RhoX) v = c.rho[0];
        tr.points.push_back({v, std::move(c)});
    }
    return tr;
}

} // namespace fourbar
