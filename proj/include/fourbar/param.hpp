#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "coeffs.hpp"
#include "elliptic.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "lengths.hpp"
#include "projreal.hpp"

namespace fourbar {

inline constexpr double pi = std::numbers::pi;

// sqrt(a) for a >= 0, i sqrt(-a) for a < 0
struct SignedValue {
    enum Axis { Real, Imaginary };
    double magnitude = 0;
    Axis axis = Real;

    cplx value() const { return axis == Real ? cplx(magnitude, 0) : cplx(0, magnitude); }
    bool is_real_nonzero() const { return axis == Real && magnitude > 0; }
    double square() const { return axis == Real ? magnitude * magnitude : -magnitude * magnitude; }
};

inline SignedValue signed_sqrt(double a)
{
    if (a >= 0) return {std::sqrt(a), SignedValue::Real};
    return {std::sqrt(-a), SignedValue::Imaginary};
}

struct Amplitudes {
    SignedValue p_x, p_y, p_z, p_w;
    std::array<SignedValue, 4> all() const { return {p_x, p_y, p_z, p_w}; }
};

// p_x^2 = -g00/g20, p_z^2 = -g00/g02; p_y, p_w from the cyclically shifted lengths
inline Amplitudes amplitudes(const Quad& q)
{
    const OppCoeffs g = g_coeffs(q), gy = g_coeffs(shift(q, 1));
    return {signed_sqrt(-g.g00 / g.g20), signed_sqrt(-gy.g00 / gy.g20), signed_sqrt(-g.g00 / g.g02),
            signed_sqrt(-gy.g00 / gy.g02)};
}

inline Amplitudes amplitudes(const BarLengths& L, double rel_tol = default_class_tol)
{
    const Kind k = classify(L, rel_tol).kind;
    if (k == Kind::Rhombus || k == Kind::Isogram || k == Kind::DeltoidI)
        throw Error(err::WrongClass, std::string("no amplitude form for ") + kind_name(k));
    return amplitudes(L.quad());
}

struct EllipticData {
    enum Form { CnForm, SnForm };
    double M = 0;
    Form form = CnForm;
    Modulus modulus;
};

inline double modulus_M(const BarLengths& L)
{
    const double s = L.sigma;
    return L.alpha * L.beta * L.gamma * L.delta / ((s - L.alpha) * (s - L.beta) * (s - L.gamma) * (s - L.delta));
}

inline EllipticData elliptic_data(const BarLengths& L, double rel_tol = default_class_tol)
{
    if (classify(L, rel_tol).kind != Kind::Elliptic) throw Error(err::WrongClass, "lengths are not of elliptic type");
    EllipticData e;
    e.M = modulus_M(L);
    const OppCoeffs g = g_coeffs(L);
    const double rhs = g.g22 * g.g00 / (g.g20 * g.g02);
    if (std::abs((1 - e.M) - rhs) > 1e-9 * (1 + e.M)) throw std::logic_error("1 - M disagrees with g-coefficients");
    if (e.M > 1) {
        e.form = EllipticData::CnForm;
        e.modulus = make_modulus(std::sqrt(std::max(0.0, -rhs / e.M)), std::sqrt(1 / e.M));
    } else {
        e.form = EllipticData::SnForm;
        e.modulus = make_modulus(std::sqrt(std::max(0.0, rhs)), std::sqrt(e.M));
    }
    return e;
}

struct PhaseShifts {
    cplx theta1, theta2;
};

namespace detail {

// theta1/theta2 from which neighbouring pair of amplitudes is real; Q = K or pi/2
inline PhaseShifts phase_rule(const Amplitudes& A, double Q, double th)
{
    const bool rx = A.p_x.is_real_nonzero(), ry = A.p_y.is_real_nonzero(), rz = A.p_z.is_real_nonzero(),
               rw = A.p_w.is_real_nonzero();
    const cplx I(0, 1);
    if (rx && ry) return {I * th, I * th + Q};
    if (ry && rz) return {-Q - I * th, -2 * Q - I * th};
    if (rz && rw) return {2 * Q - I * th, 3 * Q - I * th};
    if (rw && rx) return {Q + I * th, I * th};
    throw std::logic_error("amplitude pattern has no adjacent real pair");
}

inline double conic_theta(const Quad& q)
{
    const double ac = std::sqrt(std::abs(q[0] * q[2])), bd = std::sqrt(std::abs(q[1] * q[3]));
    return 0.5 * std::log(std::abs((ac + bd) / (ac - bd)));
}

inline double elliptic_theta(const BarLengths& L, const EllipticData& e)
{
    const double a = L.alpha, b = L.beta, c = L.gamma, d = L.delta, s = L.sigma;
    double target;
    if (e.form == EllipticData::CnForm)
        target = a + c < s ? std::sqrt((s - a) * (s - c) / (a * c)) : std::sqrt((s - b) * (s - d) / (b * d));
    else
        target = a + c > s ? std::sqrt(a * c / ((s - a) * (s - c))) : std::sqrt(b * d / ((s - b) * (s - d)));
    // phase is taken with the complementary modulus
    return inverse_dc(target, e.modulus.k_prime, e.modulus.k);
}

}

// Conic-I setup on a (possibly strip-switched) tuple with alpha - beta + gamma - delta = 0.
struct TrigSetup {
    Amplitudes amp;
    PhaseShifts ph;
    std::array<double, 2> lines;
};

inline TrigSetup conic_setup(const Quad& q)
{
    TrigSetup t;
    t.amp = amplitudes(q);
    t.ph = detail::phase_rule(t.amp, pi / 2, detail::conic_theta(q));
    t.lines = t.amp.p_x.is_real_nonzero() ? std::array<double, 2>{0, pi} : std::array<double, 2>{pi / 2, 3 * pi / 2};
    return t;
}

inline double sgn(double v) { return v > 0 ? 1.0 : -1.0; }

// The tuple a conic class is parametrized through, and the sign applied to y', w'.
struct ConicFrame {
    Quad q;
    double ysign;
};

inline ConicFrame conic_frame(const BarLengths& L, Kind k)
{
    const auto [a, b, c, d] = L.quad();
    switch (k) {
    case Kind::ConicI: return {{a, b, c, d}, 1.0};
    case Kind::ConicII: return {{a, b, -c, -d}, -sgn((a + b - c - d) / 2)};
    case Kind::ConicIII: return {{-a, b, c, -d}, -sgn((-a + b + c - d) / 2)};
    default: throw Error(err::WrongClass, "not a conic class");
    }
}

struct EllipticSetup {
    EllipticData data;
    Amplitudes amp;
    PhaseShifts ph;
    std::array<double, 2> lines;
};

inline EllipticSetup elliptic_setup(const BarLengths& L, double rel_tol = default_class_tol)
{
    EllipticSetup e;
    e.data = elliptic_data(L, rel_tol);
    e.amp = amplitudes(L.quad());
    const double K = e.data.modulus.K;
    e.ph = detail::phase_rule(e.amp, K, detail::elliptic_theta(L, e.data));
    const bool rx = e.amp.p_x.is_real_nonzero();
    if (e.data.form == EllipticData::CnForm)
        e.lines = rx ? std::array<double, 2>{0, 2 * K} : std::array<double, 2>{K, 3 * K};
    else
        e.lines = rx ? std::array<double, 2>{K, 3 * K} : std::array<double, 2>{0, 2 * K};
    return e;
}

// Conic classes report the phases of the tuple they are parametrized through.
inline PhaseShifts phase_shifts(const BarLengths& L, double rel_tol = default_class_tol)
{
    const Kind k = classify(L, rel_tol).kind;
    if (k == Kind::Elliptic) return elliptic_setup(L, rel_tol).ph;
    if (k == Kind::ConicI || k == Kind::ConicII || k == Kind::ConicIII)
        return conic_setup(conic_frame(L, k).q).ph;
    throw Error(err::WrongClass, std::string("no phase shifts for ") + kind_name(k));
}

enum class ParamKind { RationalCircle, TrigLine, EllipticCn, EllipticSn, InfinityCircle };

inline const char* param_kind_name(ParamKind k)
{
    switch (k) {
    case ParamKind::RationalCircle: return "RationalCircle";
    case ParamKind::TrigLine: return "TrigLine";
    case ParamKind::EllipticCn: return "EllipticCn";
    case ParamKind::EllipticSn: return "EllipticSn";
    case ParamKind::InfinityCircle: return "InfinityCircle";
    }
    return "?";
}

using Tuple4 = std::array<ProjReal, 4>;

struct SnapPoint {
    double s;
    bool at_infinity;  // x = inf, otherwise x = 0
    Tuple4 left, right;
};

struct SignInterval {
    double lo, hi;
    int sign;
};

// Rational and circle forms, selected by BranchDescriptor::form.
enum class Form {
    Reciprocal,     // y = 1/x, z = x, w = 1/x
    IsogramCrossed, // y = (a+b)/((a-b)x), z = -x, w = -y
    Deltoid,        // deltoid I finite branch
    XCircle,        // (x, inf, -x, inf), parameter rho_x
    YCircle,        // (inf, y, inf, -y), parameter rho_y
    Line            // complex-t line
};

struct BranchDescriptor {
    LinkageClass cls;
    int branch_id = 1;
    ParamKind kind = ParamKind::RationalCircle;
    Form form = Form::Line;
    double t_offset = 0;
    double s_lo = -pi, s_hi = pi;
    bool compact = true;
    std::string coordinate = "rho_x";  // what s means: rho_x, rho_y or s
    std::vector<SnapPoint> snaps;
    std::vector<SignInterval> xz_sign;
};

namespace detail {

inline ProjReal real_point(cplx n, cplx d)
{
    double im = 0;
    ProjReal p = from_complex_pair(n, d, &im);
    if (im > 1e-9) throw Error(err::ImaginaryResidue, "parametrized coordinate is not real");
    return p;
}

// s values on the line t0 + i s (within [lo, hi]) where F(t) is 0 (false) or a pole (true).
// F is cos when trig, otherwise cn or sn with quarter periods K, K'.
inline std::vector<std::pair<double, bool>> line_specials(bool trig, bool is_cn, double t0, double K, double Kp,
                                                          double lo, double hi)
{
    std::vector<std::pair<double, bool>> out;
    auto near_multiple = [](double v, double period, double offset) {
        const double r = std::remainder(v - offset, period);
        return std::abs(r) < 1e-9 * period;
    };
    if (trig) {
        if (near_multiple(t0, pi, pi / 2) && lo <= 0 && 0 <= hi) out.push_back({0.0, false});
        return out;
    }
    const bool on_zero_real = near_multiple(t0, 2 * K, 0);
    const bool on_K = near_multiple(t0, 2 * K, K);
    auto add = [&](double first, bool pole) {
        // first + 2n K'
        const double n0 = std::ceil((lo - first) / (2 * Kp) - 1e-12);
        for (double n = n0;; n += 1) {
            const double s = first + 2 * Kp * n;
            if (s > hi + 1e-12 * Kp) break;
            out.push_back({s, pole});
        }
    };
    if (is_cn) {
        if (on_K) add(0.0, false);
        if (on_zero_real) add(Kp, true);
    } else if (on_zero_real) {
        add(0.0, false);
        add(Kp, true);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}

class BranchSampler;

inline std::vector<BranchDescriptor> enumerate_branches(const BarLengths& L, double rel_tol = default_class_tol);

// Evaluates one branch; holds the per-class setup so repeated sampling is cheap.
class BranchSampler {
public:
    BranchSampler(const BarLengths& L, const BranchDescriptor& br, double rel_tol = default_class_tol)
        : L_(L), br_(br)
    {
        const Kind k = br.cls.kind;
        if (br.form != Form::Line) return;
        if (k == Kind::Elliptic) {
            ell_ = elliptic_setup(L, rel_tol);
        } else if (k == Kind::DeltoidII) {
            amp_ = amplitudes(L.quad());
        } else {
            frame_ = conic_frame(L, k);
            trig_ = conic_setup(frame_.q);
        }
    }

    const BranchDescriptor& branch() const { return br_; }
    const BarLengths& lengths() const { return L_; }

    // Raw tuple on the branch, no domain or snap checks.
    Tuple4 at(double s) const
    {
        switch (br_.form) {
        case Form::Line: return line_at(cplx(br_.t_offset, s));
        default: return rational_at(s);
        }
    }

    bool in_domain(double s) const
    {
        if (!std::isfinite(s)) return false;
        if (br_.compact) return s >= br_.s_lo && s <= br_.s_hi;
        return s > br_.s_lo && s < br_.s_hi;
    }

    Configuration sample(double s, double tol = 1e-7) const
    {
        if (!in_domain(s)) throw Error(err::OutOfDomain, "parameter outside the branch domain");
        for (const auto& sp : br_.snaps)
            if (std::abs(s - sp.s) <= 1e-9 * std::max(1.0, std::abs(sp.s)))
                throw Error(err::SnapPoint, "parameter is a snap point of the branch");
        return make_configuration(L_, at(s), tol);
    }

    // Uniform coordinate in [0,1) for sliders and tracing.
    double s_from_normalized(double u) const
    {
        if (br_.compact || std::isfinite(br_.s_lo)) return br_.s_lo + u * (br_.s_hi - br_.s_lo);
        return std::atanh(2 * u - 1);
    }

    double normalized_from_s(double s) const
    {
        if (br_.compact || std::isfinite(br_.s_lo)) return (s - br_.s_lo) / (br_.s_hi - br_.s_lo);
        return (std::tanh(s) + 1) / 2;
    }

private:
    Tuple4 line_at(cplx t) const
    {
        using detail::real_point;
        const Kind k = br_.cls.kind;
        const cplx I(0, 1);
        if (k == Kind::Elliptic) {
            const auto& m = ell_.data.modulus;
            const bool cn = ell_.data.form == EllipticData::CnForm;
            auto F = [&](cplx arg, const SignedValue& p) {
                const auto h = jacobi_homogeneous(arg, m);
                const HomPair& f = cn ? h.cn : h.sn;
                return real_point(p.value() * f.first, f.second);
            };
            return {F(t, ell_.amp.p_x), F(t - ell_.ph.theta1, ell_.amp.p_y), F(t + m.K, ell_.amp.p_z),
                    F(t - ell_.ph.theta2, ell_.amp.p_w)};
        }
        if (k == Kind::DeltoidII) {
            const ProjReal x = real_point(amp_.p_x.value() * std::cos(t), 1.0);
            const ProjReal z = real_point(amp_.p_z.value() * std::cos(t + pi / 2), 1.0);
            const double b = L_.beta, g = L_.gamma;
            cplx y;
            if (b > g) y = std::sqrt((b + g) / (b - g)) * std::exp(I * t);
            else y = -I * std::sqrt((g + b) / (g - b)) * std::exp(-I * t);
            const ProjReal yy = real_point(y, 1.0);
            return {x, yy, z, yy};
        }
        const auto& A = trig_.amp;
        const cplx xp = A.p_x.value() * std::cos(t);
        const cplx yp = frame_.ysign * A.p_y.value() * std::cos(t - trig_.ph.theta1);
        const cplx zp = A.p_z.value() * std::cos(t + pi / 2);
        const cplx wp = frame_.ysign * A.p_w.value() * std::cos(t - trig_.ph.theta2);
        if (k == Kind::ConicI) return {real_point(xp, 1), real_point(yp, 1), real_point(zp, 1), real_point(wp, 1)};
        if (k == Kind::ConicII)
            return {real_point(xp, 1), real_point(-1.0, yp), real_point(-zp, 1), real_point(-1.0, wp)};
        return {real_point(-1.0, xp), real_point(yp, 1), real_point(-1.0, zp), real_point(-wp, 1)};
    }

    Tuple4 rational_at(double s) const
    {
        const ProjReal p = ProjReal::from_angle(s);
        const double x1 = p.num, x2 = p.den;
        const double a = L_.alpha, b = L_.beta;
        const ProjReal inf = ProjReal::infinity();
        switch (br_.form) {
        case Form::Reciprocal: return {p, p.inverse(), p, p.inverse()};
        case Form::IsogramCrossed: {
            const ProjReal y((a + b) * x2, (a - b) * x1);
            return {p, y, -p, -y};
        }
        case Form::Deltoid: {
            const ProjReal y((b - a) * x1 * x1 + (b + a) * x2 * x2, 2 * a * x1 * x2);
            const ProjReal w((a - b) * x1 * x1 + (a + b) * x2 * x2, 2 * b * x1 * x2);
            return {p, y, p, w};
        }
        case Form::XCircle: return {p, inf, -p, inf};
        case Form::YCircle: return {inf, p, inf, -p};
        default: break;
        }
        throw std::logic_error("rational_at on a line branch");
    }

    BarLengths L_;
    BranchDescriptor br_;
    EllipticSetup ell_{};
    TrigSetup trig_{};
    ConicFrame frame_{};
    Amplitudes amp_{};
};

namespace detail {

inline void annotate(const BarLengths& L, BranchDescriptor& br, double rel_tol, bool trig, bool is_cn, double K,
                     double Kp, double zshift, bool x_inverted)
{
    BranchSampler smp(L, br, rel_tol);
    if (br.form == Form::Line) {
        const auto xs = line_specials(trig, is_cn, br.t_offset, K, Kp, br.s_lo, br.s_hi);
        const double eps = 1e-6 * (trig ? 1.0 : Kp);
        for (const auto& [s, pole] : xs) {
            if (br.compact && s >= br.s_hi) continue;
            br.snaps.push_back({s, pole != x_inverted, smp.at(s - eps), smp.at(s + eps)});
        }
    }
    // xz sign per sub-interval between zeros and poles of x and z
    if (br.form == Form::XCircle || br.form == Form::YCircle) return;
    std::vector<double> cuts{br.s_lo, br.s_hi};
    if (br.form == Form::Line) {
        for (const auto& [s, p] : line_specials(trig, is_cn, br.t_offset, K, Kp, br.s_lo, br.s_hi)) cuts.push_back(s);
        for (const auto& [s, p] : line_specials(trig, is_cn, br.t_offset + zshift, K, Kp, br.s_lo, br.s_hi))
            cuts.push_back(s);
    } else {
        cuts.push_back(0.0);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i], hi = cuts[i + 1];
        double mid;
        if (std::isinf(lo) && std::isinf(hi)) mid = 0.3;
        else if (std::isinf(lo)) mid = hi - 1;
        else if (std::isinf(hi)) mid = lo + 1;
        else mid = (lo + hi) / 2;
        const Tuple4 t = smp.at(mid);
        br.xz_sign.push_back({lo, hi, sign_of(t[0]) * sign_of(t[2])});
    }
}

}

inline std::vector<BranchDescriptor> enumerate_branches(const BarLengths& L, double rel_tol)
{
    const LinkageClass cls = classify(L, rel_tol);
    std::vector<BranchDescriptor> out;
    auto circle = [&](int id, ParamKind kind, Form form, const char* coord) {
        BranchDescriptor b;
        b.cls = cls;
        b.branch_id = id;
        b.kind = kind;
        b.form = form;
        b.coordinate = coord;
        detail::annotate(L, b, rel_tol, true, false, 0, 0, 0, false);
        out.push_back(b);
    };
    auto lines = [&](ParamKind kind, std::array<double, 2> offsets, double lo, double hi, bool compact, bool trig,
                     bool is_cn, double K, double Kp, double zshift, bool x_inverted) {
        for (int i = 0; i < 2; ++i) {
            BranchDescriptor b;
            b.cls = cls;
            b.branch_id = i + 1;
            b.kind = kind;
            b.form = Form::Line;
            b.t_offset = offsets[i];
            b.s_lo = lo;
            b.s_hi = hi;
            b.compact = compact;
            b.coordinate = "s";
            detail::annotate(L, b, rel_tol, trig, is_cn, K, Kp, zshift, x_inverted);
            out.push_back(b);
        }
    };
    const double inf = std::numeric_limits<double>::infinity();
    switch (cls.kind) {
    case Kind::Rhombus:
        circle(1, ParamKind::RationalCircle, Form::Reciprocal, "rho_x");
        circle(2, ParamKind::InfinityCircle, Form::XCircle, "rho_x");
        circle(3, ParamKind::InfinityCircle, Form::YCircle, "rho_y");
        break;
    case Kind::Isogram:
        circle(1, ParamKind::RationalCircle, Form::Reciprocal, "rho_x");
        circle(2, ParamKind::RationalCircle, Form::IsogramCrossed, "rho_x");
        break;
    case Kind::DeltoidI:
        circle(1, ParamKind::RationalCircle, Form::Deltoid, "rho_x");
        circle(2, ParamKind::InfinityCircle, Form::XCircle, "rho_x");
        break;
    case Kind::DeltoidII: {
        const auto off = L.beta > L.gamma ? std::array<double, 2>{0, pi} : std::array<double, 2>{pi / 2, 3 * pi / 2};
        lines(ParamKind::TrigLine, off, -inf, inf, false, true, false, 0, 0, pi / 2, false);
        break;
    }
    case Kind::ConicI:
    case Kind::ConicII:
    case Kind::ConicIII: {
        const TrigSetup t = conic_setup(conic_frame(L, cls.kind).q);
        lines(ParamKind::TrigLine, t.lines, -inf, inf, false, true, false, 0, 0, pi / 2, cls.kind == Kind::ConicIII);
        break;
    }
    case Kind::Elliptic: {
        const EllipticSetup e = elliptic_setup(L, rel_tol);
        const auto& m = e.data.modulus;
        if (e.data.form == EllipticData::CnForm)
            lines(ParamKind::EllipticCn, e.lines, 0, 2 * m.K_prime, false, false, true, m.K, m.K_prime, m.K, false);
        else
            lines(ParamKind::EllipticSn, e.lines, -m.K_prime, m.K_prime, true, false, false, m.K, m.K_prime, m.K,
                  false);
        break;
    }
    }
    return out;
}

inline Configuration sample_branch(const BarLengths& L, const BranchDescriptor& br, double s)
{
    return BranchSampler(L, br).sample(s);
}

} // namespace fourbar
