#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "lengths.hpp"

namespace fourbar {

struct IdentityResult {
    int id;
    bool checked;         // [8] only applies to orthodiagonal orderings
    double max_residual;  // |lhs - rhs| / sigma^degree, worst over chain links and orderings
};

struct IdentityReport {
    std::vector<IdentityResult> items;
    double max_residual = 0;
};

namespace detail {

// each identity is a chain e0 = e1 = ... of expressions of one degree
struct Chain {
    int id;
    int degree;
    std::vector<double> values;
};

inline std::vector<Chain> identity_chains(double a, double b, double c, double d)
{
    const double s = (a + b + c + d) / 2;
    const double sa = s - a, sb = s - b, sc = s - c, sd = s - d;
    std::vector<Chain> out;
    out.push_back({1, 1, {s - a - b, -(s - c - d)}});
    out.push_back({2, 2, {sa * sb - a * b, s * (s - a - b), -s * (s - c - d), c * d - sc * sd}});
    out.push_back({3, 2,
                   {sa * sb - c * d, sa * sb - (c + d) * c + c * c, sa * sb - (2 * s - a - b) * c + c * c,
                    (s - a - c) * (s - b - c), -(s - c - a) * (s - d - a), a * b - sc * sd}});
    out.push_back({4, 1, {a + b, sc + sd}});
    out.push_back({4, 1, {a - b, sb - sa}});
    out.push_back({4, 2, {a * b + c * d, sa * sb + sc * sd}});
    const double P = sa * sb * sc * sd;
    out.push_back({5, 4,
                   {a * b * c * d - P, (sa * sb + sc * sd - c * d) * c * d - P,
                    (sa * sb - c * d) * (c * d - sc * sd), s * (s - a - b) * (s - a - c) * (s - b - c)}});
    const double sum = a + b + c + d, sq = a * a + b * b + c * c + d * d;
    const double ssum = sa + sb + sc + sd;
    out.push_back({6, 2,
                   {sq, sum * sum - 2 * (a * b + a * c + a * d + b * c + b * d + c * d),
                    ssum * ssum - 2 * (sa * sb + sa * sc + sa * sd + sb * sc + sb * sd + sc * sd),
                    sa * sa + sb * sb + sc * sc + sd * sd}});
    out.push_back({7, 2,
                   {a * b - c * d, 0.5 * ((a + b) * (a + b) + (c - d) * (c - d) - sq),
                    0.5 * ((sc + sd) * (sc + sd) + (sc - sd) * (sc - sd) - sq),
                    0.5 * (2 * sc * sc + 2 * sd * sd - sq), 0.5 * (-sa * sa - sb * sb + sc * sc + sd * sd)}});
    return out;
}

inline std::vector<Chain> orthodiagonal_chains(double a, double b, double c, double d)
{
    const double s = (a + b + c + d) / 2;
    std::vector<Chain> out;
    out.push_back({8, 2,
                   {(s - b) * (s - b - d), 0.25 * ((a + c - b) * (a + c - b) - d * d),
                    0.25 * ((a + c) * (a + c) - 2 * b * (a + c) + b * b - d * d), 0.5 * (b - a) * (b - c)}});
    out.push_back({8, 2, {(s - a) * (s - a - d), 0.5 * (b - a) * (b + c)}});
    out.push_back({8, 2, {(s - c) * (s - c - d), 0.5 * (b + a) * (b - c)}});
    out.push_back({8, 2, {s * (s - d), 0.5 * (b + a) * (b + c)}});
    out.push_back({8, 2, {(s - a) * (s - c), 0.5 * (a * c + b * d), (s - b) * (s - d)}});
    return out;
}

inline double chain_residual(const Chain& ch, double sigma)
{
    double r = 0;
    const double scale = std::pow(sigma, ch.degree);
    for (size_t i = 1; i < ch.values.size(); ++i)
        r = std::max(r, std::abs(ch.values[i] - ch.values[0]) / scale);
    return r;
}

}

// Evaluates every identity on all 24 orderings of the lengths.
inline IdentityReport verify_identities(const BarLengths& L, double ortho_tol = 1e-9)
{
    IdentityReport rep;
    for (int id = 1; id <= 8; ++id) rep.items.push_back({id, id != 8, 0.0});
    std::array<double, 4> q{L.alpha, L.beta, L.gamma, L.delta};
    std::sort(q.begin(), q.end());
    do {
        const auto [a, b, c, d] = q;
        for (const auto& ch : detail::identity_chains(a, b, c, d)) {
            auto& it = rep.items[ch.id - 1];
            it.max_residual = std::max(it.max_residual, detail::chain_residual(ch, L.sigma));
        }
        if (std::abs(a * a + c * c - b * b - d * d) <= ortho_tol * L.sigma * L.sigma) {
            auto& it = rep.items[7];
            it.checked = true;
            for (const auto& ch : detail::orthodiagonal_chains(a, b, c, d))
                it.max_residual = std::max(it.max_residual, detail::chain_residual(ch, L.sigma));
        }
    } while (std::next_permutation(q.begin(), q.end()));
    for (const auto& it : rep.items) rep.max_residual = std::max(rep.max_residual, it.max_residual);
    return rep;
}

} // namespace fourbar
