#include <catch_amalgamated.hpp>

#include <cstdint>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace fourbar;
using Catch::Approx;

namespace {


std::vector<Configuration> sample_all(const BarLengths& L, int n)
{
    std::vector<Configuration> out;
    for (const auto& b : enumerate_branches(L)) {
        if (b.kind == ParamKind::InfinityCircle) continue;
        BranchSampler sm(L, b);
        for (int i = 0; i < n; ++i) out.push_back(sm.sample(sm.s_from_normalized((i + 0.381966) / n)));
    }
    return out;
}

bool has_tuple(const std::vector<Configuration>& cs, const Tuple4& t, double tol)
{
    for (const auto& c : cs)
        if (tuple_distance(c.t, t) <= tol) return true;
    return false;
}

}

TEST_CASE("signed_sqrt")
{
    auto a = signed_sqrt(4);
    CHECK(a.axis == SignedValue::Real);
    CHECK(a.magnitude == 2);
    auto b = signed_sqrt(-9);
    CHECK(b.axis == SignedValue::Imaginary);
    CHECK(b.value() == cplx(0, 3));
    CHECK(b.square() == -9);
}

TEST_CASE("elliptic data on worked tuples")
{
    auto e = elliptic_data(validate_lengths(2, 3, 4, 6));
    CHECK(e.form == EllipticData::CnForm);
    CHECK(e.M == Approx(144.0 / 129.9375).epsilon(1e-15));
    CHECK(std::abs(e.modulus.k - 0.3125) <= 1e-15);

    auto s = elliptic_data(validate_lengths(1, 2, 3, 3.5));
    CHECK(s.form == EllipticData::SnForm);
    CHECK(s.M == Approx(21.0 / 22.55859375).epsilon(1e-15));
    CHECK(s.modulus.k == Approx(std::sqrt(1 - 21.0 / 22.55859375)).epsilon(1e-14));

    CHECK_THROWS_AS(elliptic_data(validate_lengths(1, 1, 1, 1)), Error);
}

TEST_CASE("orthodiagonal modulus")
{
    std::mt19937_64 rng(31);
    int sn = 0;
    for (int i = 0; i < 300; ++i) {
        auto L = testsupport::random_orthodiagonal(rng);
        auto e = elliptic_data(L);
        if (e.form != EllipticData::SnForm) continue;
        ++sn;
        const double ac = L.alpha * L.gamma, bd = L.beta * L.delta;
        CHECK(e.modulus.k == Approx(std::abs(ac - bd) / (ac + bd)).epsilon(1e-12));
        // phase at half the complementary quarter period
        auto ph = phase_shifts(L);
        CHECK(std::abs(ph.theta1.imag()) == Approx(e.modulus.K_prime / 2).epsilon(1e-10));
    }
    CHECK(sn > 0);
}

TEST_CASE("amplitudes")
{
    auto A = amplitudes(validate_lengths(2, 3, 2, 1));
    CHECK(A.p_x.axis == SignedValue::Real);
    CHECK(A.p_x.magnitude == Approx(std::sqrt(2.0)));
    CHECK(A.p_y.axis == SignedValue::Real);
    CHECK(A.p_z.axis == SignedValue::Imaginary);
    CHECK(A.p_z.square() == Approx(-2.0 / 3));
    CHECK(A.p_w.axis == SignedValue::Imaginary);

    auto D = amplitudes(validate_lengths(3, 3, 2, 2));
    CHECK(D.p_x.axis == SignedValue::Real);
    CHECK(D.p_x.magnitude == Approx(std::sqrt(9.0 / 4 - 1)));

    CHECK_THROWS_AS(amplitudes(validate_lengths(1, 1, 1, 1)), Error);
    CHECK_THROWS_AS(amplitudes(validate_lengths(2, 1, 2, 1)), Error);
    CHECK_THROWS_AS(amplitudes(validate_lengths(2, 3, 3, 2)), Error);

    // conic I normal form: p_x^2 = ab/(cd) - 1
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> u(0.5, 4);
    for (int i = 0; i < 100; ++i) {
        const double a = u(rng), b = u(rng), c = u(rng), d = a - b + c;
        if (d <= 0.1) continue;
        BarLengths L;
        try {
            L = validate_lengths(a, b, c, d);
        } catch (const Error&) {
            continue;
        }
        if (classify(L).kind != Kind::ConicI) continue;
        CHECK(amplitudes(L).p_x.square() == Approx(a * b / (c * d) - 1).epsilon(1e-12).margin(1e-12));
    }
}

TEST_CASE("phase shifts")
{
    auto L = validate_lengths(2, 3, 2, 1);
    auto ph = phase_shifts(L);
    CHECK(std::abs(ph.theta2 - (ph.theta1 + pi / 2)) <= 1e-15);
    const double th = 0.5 * std::log((2 + std::sqrt(3.0)) / (2 - std::sqrt(3.0)));
    CHECK(std::abs(ph.theta1.imag()) == Approx(th).epsilon(1e-14));

    auto E = validate_lengths(2, 3, 4, 6);
    auto pe = phase_shifts(E);
    auto e = elliptic_data(E);
    const double s = E.sigma;
    // alpha + gamma < sigma on the cn side
    const double target = std::sqrt((s - 2) * (s - 4) / 8.0);
    const auto j = jacobi_complex(cplx(0, std::abs(pe.theta1.imag())), e.modulus);
    CHECK(std::abs(j.dn.real() - target) <= 1e-10);
    CHECK(std::abs(j.dn.imag()) <= 1e-12);
    CHECK(std::abs(std::abs(pe.theta2.real() - pe.theta1.real()) - e.modulus.K) <= 1e-12);

    CHECK_THROWS_AS(phase_shifts(validate_lengths(3, 3, 2, 2)), Error);
}

TEST_CASE("enumerate_branches examples")
{
    auto r = enumerate_branches(validate_lengths(1, 1, 1, 1));
    REQUIRE(r.size() == 3);
    CHECK(r[0].kind == ParamKind::RationalCircle);
    CHECK(r[1].kind == ParamKind::InfinityCircle);
    CHECK(r[2].kind == ParamKind::InfinityCircle);

    auto L = validate_lengths(2, 1, 2, 1);
    auto iso = enumerate_branches(L);
    REQUIRE(iso.size() == 2);
    BranchSampler b2(L, iso[1]);
    for (int i = 0; i < 50; ++i) {
        auto c = b2.sample(b2.s_from_normalized((i + 0.3) / 50));
        CHECK(proj_distance(c.w(), -c.y()) <= 1e-12);
    }

    auto E = validate_lengths(2, 3, 4, 6);
    auto el = enumerate_branches(E);
    const double K = elliptic_data(E).modulus.K;
    REQUIRE(el.size() == 2);
    for (const auto& b : el) CHECK(b.kind == ParamKind::EllipticCn);
    CHECK(el[0].t_offset == Approx(K));
    CHECK(el[1].t_offset == Approx(3 * K));

    for (const auto& b : enumerate_branches(validate_lengths(1, 2, 3, 3.5))) {
        CHECK(b.kind == ParamKind::EllipticSn);
        CHECK(b.compact);
    }
    for (const auto& q : {Quad{3, 3, 2, 2}, Quad{2, 3, 2, 1}, Quad{1, 2, 3, 4}, Quad{1, 3, 2, 2}}) {
        auto br = enumerate_branches(validate_lengths(q));
        REQUIRE(br.size() == 2);
        for (const auto& b : br) {
            CHECK(b.kind == ParamKind::TrigLine);
            CHECK_FALSE(b.compact);
        }
    }
}

TEST_CASE("sample_branch examples")
{
    auto R = validate_lengths(1, 1, 1, 1);
    auto c = sample_branch(R, enumerate_branches(R)[0], pi / 2);
    for (int i = 0; i < 4; ++i) CHECK(c.t[i].value() == Approx(1).epsilon(1e-15));
    CHECK(c.residual <= 1e-15);
    CHECK(c.u == Approx(std::sqrt(2.0)));
    CHECK(c.v == Approx(std::sqrt(2.0)));

    auto I = validate_lengths(2, 1, 2, 1);
    auto ci = sample_branch(I, enumerate_branches(I)[0], pi / 2);
    CHECK(ci.x().value() == Approx(1));
    CHECK(ci.y().value() == Approx(1));

    // deltoid II (beta, gamma) = (2, 1): x = sqrt(3) gives y = sqrt(3)
    auto D = validate_lengths(2, 2, 1, 1);
    bool found = false;
    for (const auto& b : enumerate_branches(D)) {
        BranchSampler sm(D, b);
        auto t = sm.at(0);
        if (proj_distance(t[0], ProjReal::finite(std::sqrt(3.0))) < 1e-12) {
            found = true;
            CHECK(proj_distance(t[1], ProjReal::finite(std::sqrt(3.0))) <= 1e-12);
        }
    }
    CHECK(found);
}

TEST_CASE("sampler errors")
{
    auto E = validate_lengths(2, 3, 4, 6);
    auto br = enumerate_branches(E);
    BranchSampler sm(E, br[0]);
    CHECK_THROWS_AS(sm.sample(br[0].s_hi + 1.0), Error);
    try {
        sm.sample(br[0].s_hi + 1.0);
    } catch (const Error& e) {
        CHECK(e.code == err::OutOfDomain);
    }
    auto D = validate_lengths(2, 2, 3, 3);
    for (const auto& b : enumerate_branches(D))
        for (const auto& sp : b.snaps) {
            try {
                sample_branch(D, b, sp.s);
                FAIL("snap point accepted");
            } catch (const Error& e) {
                CHECK(e.code == err::SnapPoint);
            }
        }
}

TEST_CASE("snap points carry one-sided limits")
{
    int seen = 0;
    for (const auto& cs : testsupport::representatives())
        for (const auto& q : cs.tuples) {
            auto L = validate_lengths(q);
            for (const auto& b : enumerate_branches(L)) {
                BranchSampler sm(L, b);
                for (const auto& sp : b.snaps) {
                    ++seen;
                    const double h = 1e-6;
                    if (sm.in_domain(sp.s - h)) CHECK(tuple_distance(sm.at(sp.s - h), sp.left) <= 1e-4);
                    if (sm.in_domain(sp.s + h)) CHECK(tuple_distance(sm.at(sp.s + h), sp.right) <= 1e-4);
                    const ProjReal x = sm.at(sp.s)[0];
                    CHECK((sp.at_infinity ? proj_distance(x, ProjReal::infinity()) : std::abs(x.num)) <= 1e-9);
                }
            }
        }
    CHECK(seen > 0);
}

TEST_CASE("every class closes along every branch")
{
    for (const auto& cs : testsupport::representatives())
        for (const auto& q : cs.tuples) {
            INFO(kind_name(cs.kind) << " " << q[0] << "," << q[1] << "," << q[2] << "," << q[3]);
            auto L = validate_lengths(q);
            const auto h = h_coeffs(L);
            for (const auto& c : sample_all(L, 200)) {
                REQUIRE(c.residual <= 1e-9 * L.sigma);
                REQUIRE(relation_residual(L, c.t) <= 1e-9);
                CHECK(std::abs(eval_h(h, c.u, c.v)) <= 1e-9 * std::pow(L.sigma, 6));
                // independent vertex check
                const auto& v = c.vertices;
                CHECK(std::abs(norm(v.B - v.C) - L.delta) <= 1e-9 * L.sigma);
                CHECK(std::abs(norm(v.C - v.A) - L.alpha) <= 1e-12 * L.sigma);
                CHECK(std::abs(norm(v.B - v.D) - L.gamma) <= 1e-12 * L.sigma);
            }
        }
}

TEST_CASE("random elliptic and conic tuples close")
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 60; ++i) {
        auto L = testsupport::random_elliptic(rng);
        for (const auto& c : sample_all(L, 40)) {
            REQUIRE(c.residual <= 1e-9 * L.sigma);
            REQUIRE(relation_residual(L, c.t) <= 1e-9);
        }
    }
    std::uniform_real_distribution<double> u(0.5, 4);
    int n = 0;
    while (n < 60) {
        const double a = u(rng), b = u(rng), c = u(rng);
        // rotate through the three conic patterns
        Quad q;
        if (n % 3 == 0) q = {a, b, c, a - b + c};
        else if (n % 3 == 1) q = {a, b, c, b + c - a};
        else q = {a, b, c, a + b - c};
        if (q[3] <= 0.1) continue;
        BarLengths L;
        try {
            L = validate_lengths(q);
        } catch (const Error&) {
            continue;
        }
        const Kind k = classify(L).kind;
        if (k != Kind::ConicI && k != Kind::ConicII && k != Kind::ConicIII) continue;
        if (std::abs(q[0] * q[2] - q[1] * q[3]) < 1e-3) continue;
        ++n;
        for (const auto& cfg : sample_all(L, 40)) {
            REQUIRE(cfg.residual <= 1e-9 * L.sigma);
            REQUIRE(relation_residual(L, cfg.t) <= 1e-9);
        }
    }
}

TEST_CASE("xz sign annotation matches samples")
{
    std::mt19937_64 rng(34);
    for (int i = 0; i < 40; ++i) {
        auto L = testsupport::random_elliptic(rng);
        for (const auto& b : enumerate_branches(L)) {
            REQUIRE_FALSE(b.xz_sign.empty());
            BranchSampler sm(L, b);
            for (int j = 0; j < 100; ++j) {
                const double s = sm.s_from_normalized((j + 0.37) / 100);
                const auto t = sm.at(s);
                const double xz = t[0].num * t[2].num * t[0].den * t[2].den;
                if (std::abs(t[0].num * t[0].den) < 1e-6 || std::abs(t[2].num * t[2].den) < 1e-6) continue;
                for (const auto& iv : b.xz_sign)
                    if (s > iv.lo && s < iv.hi) CHECK((xz > 0 ? 1 : -1) == iv.sign);
            }
        }
    }
}

TEST_CASE("orthodiagonal samples")
{
    std::mt19937_64 rng(35);
    for (int i = 0; i < 20; ++i) {
        auto L = testsupport::random_orthodiagonal(rng);
        const double a = L.alpha, b = L.beta, c = L.gamma;
        for (const auto& cf : sample_all(L, 50)) {
            const auto& v = cf.vertices;
            CHECK(std::abs(dot(v.B - v.A, v.C - v.D)) <= 1e-9 * L.sigma * L.sigma);
            const double x = cf.x().value(), y = cf.y().value();
            if (!std::isfinite(x) || !std::isfinite(y) || std::abs(x) < 1e-3 || std::abs(y) < 1e-3) continue;
            const double lhs = ((b - a) * x + (b + a) / x) * ((b - c) * y + (b + c) / y);
            const double scale = std::max(1.0, std::abs((b - a) * x) + std::abs((b + a) / x)) *
                                 std::max(1.0, std::abs((b - c) * y) + std::abs((b + c) / y));
            CHECK(std::abs(lhs - 4 * a * c) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("closure oracle")
{
    auto R = validate_lengths(1, 1, 1, 1);
    auto sq = closure_oracle(R, pi / 2, pi / 2);
    CHECK(sq.residual <= 1e-15);
    CHECK(sq.rho_z == Approx(pi / 2));
    CHECK(sq.rho_w == Approx(pi / 2));
    auto off = closure_oracle(R, pi / 2, 0);
    CHECK(off.residual == Approx(std::sqrt(5.0) - 1));
}

TEST_CASE("solve_at_x examples")
{
    auto R = validate_lengths(1, 1, 1, 1);
    auto r = solve_at_x(R, ProjReal::finite(2));
    REQUIRE(r.configs.size() == 1);
    CHECK(r.configs[0].y().value() == Approx(0.5));
    CHECK(r.configs[0].z().value() == Approx(2));
    CHECK(r.configs[0].w().value() == Approx(0.5));
    REQUIRE(r.on_infinity_circle.size() == 1);
    CHECK(r.on_infinity_circle[0].y().is_inf());

    auto I = validate_lengths(2, 1, 2, 1);
    auto ri = solve_at_x(I, ProjReal::finite(1));
    REQUIRE(ri.configs.size() == 2);
    const auto one = ProjReal::finite(1);
    CHECK(has_tuple(ri.configs, {one, one, one, one}, 1e-12));
    CHECK(has_tuple(ri.configs, {one, ProjReal::finite(3), ProjReal::finite(-1), ProjReal::finite(-3)}, 1e-12));

    auto D = validate_lengths(2, 2, 1, 1);
    CHECK(solve_at_x(D, ProjReal::finite(0)).configs.empty());
    // beta^2/gamma^2 - 1 = 3
    CHECK(solve_at_x(D, ProjReal::finite(1.7)).configs.empty());
    CHECK_FALSE(solve_at_x(D, ProjReal::finite(1.8)).configs.empty());
}

TEST_CASE("solve_at_x where the finite branch meets an infinity circle")
{
    const auto inf = ProjReal::infinity(), zero = ProjReal::finite(0);
    auto R = validate_lengths(1, 1, 1, 1);
    auto r0 = solve_at_x(R, zero);
    CHECK(has_tuple(r0.configs, {zero, inf, zero, inf}, 0));
    CHECK(has_tuple(r0.on_infinity_circle, {zero, inf, zero, inf}, 0));
    auto ri = solve_at_x(R, inf);
    CHECK(ri.continuum);
    REQUIRE(ri.configs.size() == 1);
    CHECK(has_tuple(ri.configs, {inf, zero, inf, zero}, 0));

    auto D = validate_lengths(2, 3, 3, 2);
    auto d = solve_at_x(D, inf);
    CHECK(has_tuple(d.configs, {inf, inf, inf, inf}, 1e-12));
}

TEST_CASE("solve_at_x recovers sampled configurations")
{
    for (const auto& cs : testsupport::representatives())
        for (const auto& q : cs.tuples) {
            auto L = validate_lengths(q);
            for (const auto& c : sample_all(L, 60)) {
                auto r = solve_at_x(L, c.x());
                REQUIRE(r.configs.size() <= 2);
                CHECK(has_tuple(r.configs, c.t, 1e-8));
            }
        }
}

TEST_CASE("solutions at infinity by class")
{
    auto iso = solutions_at_infinity(validate_lengths(2, 1, 2, 1));
    REQUIRE(iso.size() == 2);
    const auto inf = ProjReal::infinity(), zero = ProjReal::finite(0);
    CHECK(tuple_distance(*iso[0].tuple, {inf, zero, inf, zero}) == 0);
    CHECK(tuple_distance(*iso[1].tuple, {zero, inf, zero, inf}) == 0);

    auto c1 = solutions_at_infinity(validate_lengths(2, 3, 2, 1));
    REQUIRE(c1.size() == 1);
    CHECK(tuple_distance(*c1[0].tuple, {inf, inf, inf, inf}) == 0);

    auto E = validate_lengths(2, 3, 4, 6);
    auto el = solutions_at_infinity(E);
    REQUIRE(el.size() == 8);
    const double M = modulus_M(E), s = E.sigma;
    CHECK((M - 1) * (s - 2 - 3) > 0);
    CHECK_FALSE(el[0].reachable);
    CHECK_FALSE(el[1].reachable);

    auto circles = [](const BarLengths& L) {
        int n = 0;
        for (const auto& x : solutions_at_infinity(L)) n += x.circle;
        return n;
    };
    CHECK(circles(validate_lengths(1, 1, 1, 1)) == 2);
    CHECK(circles(validate_lengths(2, 3, 3, 2)) == 1);
    CHECK(circles(validate_lengths(3, 3, 2, 2)) == 1);
}

TEST_CASE("infinity points match folded geometry")
{
    auto check_all = [](const BarLengths& L) {
        const auto sols = solutions_at_infinity(L);
        for (const auto& s : sols) {
            if (s.circle || !s.reachable) continue;
            REQUIRE(s.tuple);
            const Tuple4& t = *s.tuple;
            int k = -1;
            for (int i = 0; i < 4; ++i)
                if (t[i].is_inf()) k = i;
            REQUIRE(k >= 0);
            // all-infinite or two-infinite patterns are limits, not folded configurations
            int ninf = 0;
            for (const auto& p : t) ninf += p.is_inf();
            if (ninf != 1) continue;
            double best = 1;
            for (const auto& g : testsupport::folded_configurations(L, k)) best = std::min(best, tuple_distance(g, t));
            INFO(kind_name(classify(L).kind) << " " << L.alpha << "," << L.beta << "," << L.gamma << "," << L.delta
                                              << " joint " << k);
            CHECK(best <= 1e-9);
        }
    };
    for (const auto& cs : testsupport::representatives())
        for (const auto& q : cs.tuples) check_all(validate_lengths(q));

    std::mt19937_64 rng(36);
    for (int i = 0; i < 1000; ++i) {
        auto L = testsupport::random_elliptic(rng, 1e-2);
        check_all(L);
        // gates agree with whether the folded position exists
        const auto sols = solutions_at_infinity(L);
        for (int k = 0; k < 4; ++k) {
            const bool geo = !testsupport::folded_configurations(L, k).empty();
            CHECK(sols[2 * k].reachable == geo);
        }
    }
}

TEST_CASE("conic branches run into their infinity points")
{
    for (const auto& cs : testsupport::representatives()) {
        if (cs.kind != Kind::ConicI && cs.kind != Kind::ConicII && cs.kind != Kind::ConicIII) continue;
        for (const auto& q : cs.tuples) {
            auto L = validate_lengths(q);
            const auto sols = solutions_at_infinity(L);
            for (const auto& b : enumerate_branches(L)) {
                BranchSampler sm(L, b);
                for (double s : {-20.0, 20.0}) {
                    const auto t = sm.at(s);
                    double best = 1;
                    for (const auto& x : sols)
                        if (x.reachable && x.tuple) best = std::min(best, tuple_distance(t, *x.tuple));
                    CHECK(best <= 1e-6);
                }
            }
        }
    }
}

TEST_CASE("rational oracle for the worked modulus")
{
    // (2,3,4,6) doubled to integers: 1 - 1/M = (num - den) / num
    const std::int64_t a = 4, b = 6, c = 8, d = 12, s = (a + b + c + d) / 2;
    const std::int64_t num = a * b * c * d, den = (s - a) * (s - b) * (s - c) * (s - d);
    std::int64_t p = num - den, q = num;
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    CHECK(p == 25);
    CHECK(q == 256);
    CHECK(elliptic_data(validate_lengths(2, 3, 4, 6)).modulus.k == 5.0 / 16.0);
}
