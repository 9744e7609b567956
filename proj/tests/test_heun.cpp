#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "dwell/heun.hpp"

using dwell::HeunCoefficients;
using dwell::Real;

namespace {

HeunCoefficients coeffs(long a1, long a2, long b0, long b1, long b2, const Real& tau0) {
    return HeunCoefficients{Real(a1), Real(a2), Real(b0), Real(b1), Real(b2), tau0,
                            Real(0L)};
}

// printed closed forms of the first constraint polynomials
Real printed_constraint(int N, const HeunCoefficients& c, const Real& t) {
    const Real &a1 = c.a1, &a2 = c.a2, &b0 = c.b0, &b1 = c.b1, &b2 = c.b2;
    switch (N) {
        case 1:
            return t * t - b1 * t + b0 * b2;
        case 2:
            return t * t * t - (2 * a2 + 3 * b1) * t * t +
                   2 * (b1 * (a2 + b1) + (a1 + 2 * b0) * b2) * t - 4 * b0 * (a2 + b1) * b2;
        case 3:
            return pow(t, 4L) - 2 * (4 * a2 + 3 * b1) * pow(t, 3L) +
                   (12 * a2 * a2 + 26 * a2 * b1 + 11 * b1 * b1 + 10 * (a1 + b0) * b2) * t * t -
                   6 * (b1 * (a2 + b1) * (2 * a2 + b1) +
                        (4 * a1 * a2 + 8 * a2 * b0 + 3 * a1 * b1 + 5 * b0 * b1) * b2) * t +
                   9 * b0 * b2 * (2 * (a2 + b1) * (2 * a2 + b1) + (2 * a1 + b0) * b2);
        case 4:
            return pow(t, 5L) - 10 * (2 * a2 + b1) * pow(t, 4L) +
                   (108 * a2 * a2 + 130 * a2 * b1 + 35 * b1 * b1 + 30 * a1 * b2 + 20 * b0 * b2) *
                       pow(t, 3L) -
                   2 * (72 * pow(a2, 3L) + 186 * a2 * a2 * b1 + 127 * a2 * b1 * b1 + 25 * pow(b1, 3L) +
                        138 * a1 * a2 * b2 + 134 * a2 * b0 * b2 + 69 * a1 * b1 * b2 +
                        60 * b0 * b1 * b2) * t * t +
                   8 * (18 * pow(a2, 3L) * b1 + 33 * a2 * a2 * b1 * b1 + 18 * a2 * pow(b1, 3L) +
                        3 * pow(b1, 4L) + 54 * a1 * a2 * a2 * b2 + 108 * a2 * a2 * b0 * b2 +
                        66 * a1 * a2 * b1 * b2 + 110 * a2 * b0 * b1 * b2 + 18 * a1 * b1 * b1 * b2 +
                        26 * b0 * b1 * b1 * b2 + 9 * a1 * a1 * b2 * b2 + 24 * a1 * b0 * b2 * b2 +
                        8 * b0 * b0 * b2 * b2) * t -
                   32 * b0 * b2 * (18 * pow(a2, 3L) + 33 * a2 * a2 * b1 + 18 * a2 * b1 * b1 +
                                   3 * pow(b1, 3L) + 21 * a1 * a2 * b2 + 10 * a2 * b0 * b2 +
                                   9 * a1 * b1 * b2 + 4 * b0 * b1 * b2);
        default:
            throw std::logic_error("no printed constraint for this degree");
    }
}

}  // namespace

TEST_CASE("necessary condition") {
    CHECK(dwell::necessary_tau1(0, Real(7L)).is_zero());
    CHECK(abs(dwell::necessary_tau1(2, Real(-4L)) + Real(8L)) < dwell::pow10(-90));
    CHECK(dwell::necessary_tau1(1, Real(0L)).is_zero());
    CHECK_THROWS_AS(dwell::necessary_tau1(-1, Real(1L)), std::invalid_argument);
}

TEST_CASE("recurrence seeds and low-degree values") {
    // P_1 = tau0 for any coefficient set
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> u(-6, 6);
    for (int rep = 0; rep < 8; ++rep) {
        Real t(u(rng));
        HeunCoefficients c = coeffs(u(rng) * 2 + 1, u(rng), u(rng), u(rng), u(rng), t);
        c.tau1 = dwell::necessary_tau1(2, c.b2);
        auto p = dwell::recurrence_P(c, 2);
        CHECK(p.size() == 4);
        CHECK(p[0] == Real(1L));
        CHECK(abs(p[1] - t) < dwell::pow10(-90));
    }
    // N=1: P_2 = tau0^2 - b1 tau0 + b0 b2
    HeunCoefficients c = coeffs(1, 2, 3, 4, 5, Real(7L));
    auto p = dwell::recurrence_P(c, 1);
    CHECK(abs(p[2] - (Real(49L) - Real(28L) + Real(15L))) < dwell::pow10(-90));
}

TEST_CASE("recurrence equals the printed constraint polynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(-24, 24);
    for (int N = 1; N <= 4; ++N) {
        for (int rep = 0; rep < 20; ++rep) {
            Real a1(num(rng) == 0 ? 3 : num(rng));
            HeunCoefficients base{a1 / 4, Real(num(rng)) / 4, Real(num(rng)) / 4,
                                  Real(num(rng)) / 4, Real(num(rng)) / 4, Real(0L), Real(0L)};
            base.tau1 = dwell::necessary_tau1(N, base.b2);
            for (int tv = 0; tv < 20; ++tv) {
                Real t = Real(num(rng)) / 2;
                base.tau0 = t;
                Real from_rec = dwell::recurrence_P(base, N).back();
                Real from_print = printed_constraint(N, base, t);
                Real scale = max(abs(from_print), dwell::pow10(-30));
                CHECK(abs(from_rec - from_print) / scale < dwell::pow10(-60));
            }
        }
    }
}

TEST_CASE("tau0 roots") {
    // N=0: P_1 = tau0, root at 0
    HeunCoefficients c = coeffs(1, 1, 1, 1, 1, Real(0L));
    auto roots0 = dwell::find_tau0_roots(c, 0, Real(-5L), Real(5L));
    REQUIRE(roots0.size() == 1);
    CHECK(abs(roots0[0]) < dwell::pow10(-80));

    // N=1 quadratic with positive discriminant
    HeunCoefficients q = coeffs(1, 1, 2, 5, 1, Real(0L));  // t^2 - 5t + 2
    auto roots1 = dwell::find_tau0_roots(q, 1, Real(-10L), Real(10L));
    REQUIRE(roots1.size() == 2);
    Real disc = sqrt(Real(25L) - Real(8L));
    CHECK(abs(roots1[0] - (Real(5L) - disc) / 2) < dwell::pow10(-80));
    CHECK(abs(roots1[1] - (Real(5L) + disc) / 2) < dwell::pow10(-80));

    // no sign change -> empty, not an error
    auto none = dwell::find_tau0_roots(q, 1, Real(100L), Real(200L));
    CHECK(none.empty());
}

TEST_CASE("root count stays within the polynomial degree") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> u(-5, 5);
    for (int rep = 0; rep < 10; ++rep) {
        long a1 = u(rng);
        HeunCoefficients c = coeffs(a1 == 0 ? 1 : a1, u(rng), u(rng), u(rng), u(rng), Real(0L));
        for (int N = 0; N <= 3; ++N) {
            auto roots = dwell::find_tau0_roots(c, N, Real(-40L), Real(40L));
            CHECK(static_cast<int>(roots.size()) <= N + 1);
        }
    }
}

TEST_CASE("solution assembly") {
    // N=0: f = 1 under tau0 = 0
    HeunCoefficients c0 = coeffs(1, 1, 1, 1, 1, Real(0L));
    auto s0 = dwell::build_solution(c0, 0);
    CHECK(s0.coeffs.size() == 1);
    CHECK(s0.coeffs[0] == Real(1L));

    // N=1: f = 1 + (tau0/b0) z at a root of the quadratic
    HeunCoefficients c1 = coeffs(1, 1, 2, 5, 1, Real(0L));
    auto roots = dwell::find_tau0_roots(c1, 1, Real(-10L), Real(10L));
    REQUIRE(roots.size() == 2);
    c1.tau0 = roots[0];
    c1.tau1 = dwell::necessary_tau1(1, c1.b2);
    auto s1 = dwell::build_solution(c1, 1);
    CHECK(abs(s1.coeffs[1] - roots[0] / Real(2L)) < dwell::pow10(-75));

    // rejection when the sufficiency residual is large
    c1.tau0 = roots[0] + Real(1L);
    CHECK_THROWS_AS(dwell::build_solution(c1, 1), std::domain_error);
}

TEST_CASE("ode residual vanishes on constructed solutions") {
    // trivial case: f = 1, tau0 = 1 at z = 0 leaves -tau0
    dwell::PolynomialSolution unit{0, {Real(1L)}, Real(1L), {Real(1L), Real(0L)}};
    HeunCoefficients c = coeffs(1, 1, 1, 1, 1, Real(1L));
    CHECK(abs(dwell::ode_residual(c, unit, Real(0L)) + Real(1L)) < dwell::pow10(-90));

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> u(-4, 4);
    int built = 0;
    for (int rep = 0; rep < 40 && built < 6; ++rep) {
        long a1 = u(rng);
        HeunCoefficients base = coeffs(a1 == 0 ? 2 : a1, u(rng), u(rng) == 0 ? 3 : u(rng), u(rng), u(rng), Real(0L));
        for (int N : {2, 3}) {
            auto roots = dwell::find_tau0_roots(base, N, Real(-60L), Real(60L));
            for (const Real& r : roots) {
                HeunCoefficients c2 = base;
                c2.tau0 = r;
                c2.tau1 = dwell::necessary_tau1(N, base.b2);
                dwell::PolynomialSolution sol{0, {}, Real(0L), {}};
                try {
                    sol = dwell::build_solution(c2, N);
                } catch (const std::domain_error&) {
                    continue;  // Pochhammer degeneracies etc.
                }
                ++built;
                for (long zi = -5; zi <= 5; zi += 2) {
                    Real z = Real(zi) / 3;
                    CHECK(abs(dwell::ode_residual(c2, sol, z)) < dwell::pow10(-70));
                }
            }
        }
    }
    CHECK(built >= 3);
}
