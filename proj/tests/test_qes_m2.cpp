#include "doctest.h"

#include <random>

#include "dwell/aim.hpp"
#include "dwell/heun.hpp"
#include "dwell/potential.hpp"
#include "dwell/qes_m2.hpp"
#include "dwell/schrodinger_check.hpp"

using dwell::Parity;
using dwell::QesPair;
using dwell::Real;

TEST_CASE("normal-form mapping") {
    // beta=0, eps=-4, v=4 (alpha=1, gamma=1)
    auto c = dwell::build_heun_coeffs_m2(Parity::even, Real(4L), Real(-4L));
    CHECK(abs(c.b0 + Real(6L)) < dwell::pow10(-90));
    CHECK(abs(c.a1 + Real(2L)) < dwell::pow10(-90));
    CHECK(abs(c.a2 - Real(2L)) < dwell::pow10(-90));

    // the degree condition tau1 = N b2 is the same statement as
    // 3 + 4 beta + 2 sqrt(-eps) + 4N - sqrt(v) = 0
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> Nd(0, 4);
    std::uniform_real_distribution<double> vd(30.0, 4000.0);
    for (int rep = 0; rep < 24; ++rep) {
        Parity p = rep % 2 == 0 ? Parity::even : Parity::odd;
        int N = Nd(rng);
        Real beta = dwell::beta_value(p);
        Real v(vd(rng));
        Real thr = 3 + 4 * beta + 4L * N;
        if (!(v > thr * thr)) continue;
        Real eps = dwell::qes_epsilon(N, p, v);
        auto cc = dwell::build_heun_coeffs_m2(p, v, eps);
        Real gap = cc.tau1 - dwell::necessary_tau1(N, cc.b2);
        CHECK(abs(gap) < dwell::pow10(-85) * (1 + abs(cc.tau1)));
        // a detuned energy breaks it
        auto cc2 = dwell::build_heun_coeffs_m2(p, v, eps * Real::from_string("1.01"));
        CHECK(abs(cc2.tau1 - dwell::necessary_tau1(N, cc2.b2)) > dwell::pow10(-8));
    }

    // N=0 even pair: tau1 and tau0 both vanish
    Real v0 = 29 + 8 * sqrt(Real(13L));
    Real e0 = -(7 + sqrt(Real(13L))) / 2;
    auto c0 = dwell::build_heun_coeffs_m2(Parity::even, v0, e0);
    CHECK(abs(c0.tau1) < dwell::pow10(-88));
    CHECK(abs(c0.tau0) < dwell::pow10(-88));
}

TEST_CASE("degree-condition energies") {
    Real v0 = 29 + 8 * sqrt(Real(13L));
    CHECK(abs(dwell::qes_epsilon(0, Parity::even, v0) + (7 + sqrt(Real(13L))) / 2) < dwell::pow10(-88));
    CHECK(abs(dwell::qes_epsilon(0, Parity::even, v0) - Real::from_string("-5.302775637731995")) <
          dwell::pow10(-15));

    Real v1 = 125 + 16 * sqrt(Real(61L));
    CHECK(abs(dwell::qes_epsilon(0, Parity::odd, v1) + (35 + 3 * sqrt(Real(61L))) / 2) < dwell::pow10(-88));
    CHECK(abs(dwell::qes_epsilon(0, Parity::odd, v1) - Real::from_string("-29.21537451386")) <
          dwell::pow10(-11));

    // published first-degree value carries ~12 reliable digits
    Real eps1 = dwell::qes_epsilon(1, Parity::even, Real::from_string("149.57425693331263"));
    CHECK(abs(eps1 - Real::from_string("-6.838370069149139")) < dwell::pow10(-12) * 2);

    CHECK_THROWS_AS(dwell::qes_epsilon(0, Parity::even, Real(9L)), dwell::NoSuchStateError);
}

TEST_CASE("reduced recurrence") {
    // seed: P_1 = eps/2 - (s/2)(1+4b+2 sqrt v) + v/2 - 2b - sqrt v
    Real v(50L), eps(-9L);
    Real s = sqrt(-eps), t = sqrt(v);
    for (Parity p : {Parity::even, Parity::odd}) {
        Real beta = dwell::beta_value(p);
        auto ps = dwell::qes_recurrence_P(0, p, v, eps);
        Real want = eps / 2 - (s / 2) * (1 + 4 * beta + 2 * t) + v / 2 - 2 * beta - t;
        CHECK(abs(ps[1] - want) < dwell::pow10(-85));
    }

    // sufficiency at the zero-degree pair
    Real v0 = 29 + 8 * sqrt(Real(13L));
    Real e0 = -(7 + sqrt(Real(13L))) / 2;
    auto p0 = dwell::qes_recurrence_P(0, Parity::even, v0, e0);
    CHECK(abs(p0[1]) < dwell::pow10(-85) * (1 + abs(p0[0])));

    // the reduced recurrence is the generic one in the mapped variables
    auto pairs = dwell::qes_enumerate(3, Parity::even);
    REQUIRE(pairs.size() == 4);
    const QesPair& q = pairs[0];
    auto hc = dwell::build_heun_coeffs_m2(Parity::even, q.v, q.epsilon);
    auto generic = dwell::recurrence_P(hc, 3);
    REQUIRE(generic.size() == q.p_values.size());
    for (size_t k = 0; k < generic.size(); ++k) {
        Real scale = 1 + abs(generic[k]);
        CHECK(abs(generic[k] - q.p_values[k]) / scale < dwell::pow10(-80));
    }
    CHECK(abs(q.p_values.back()) < dwell::pow10(-70) * (1 + abs(q.p_values[0])));
}

TEST_CASE("enumeration: zero and first degree") {
    auto p0e = dwell::qes_enumerate(0, Parity::even);
    REQUIRE(p0e.size() == 1);
    CHECK(abs(p0e[0].v - (29 + 8 * sqrt(Real(13L)))) < dwell::pow10(-80));
    CHECK(abs(p0e[0].epsilon + (7 + sqrt(Real(13L))) / 2) < dwell::pow10(-80));

    auto p0o = dwell::qes_enumerate(0, Parity::odd);
    REQUIRE(p0o.size() == 1);
    CHECK(abs(p0o[0].v - (125 + 16 * sqrt(Real(61L)))) < dwell::pow10(-80));

    // first degree, both sectors; the 20-digit anchors below were
    // cross-checked against the printed closed-form constraint system
    auto p1e = dwell::qes_enumerate(1, Parity::even);
    REQUIRE(p1e.size() == 2);
    CHECK(abs(p1e[0].v - Real::from_string("149.5742569333126769392081")) < dwell::pow10(-21));
    CHECK(abs(p1e[0].epsilon - Real::from_string("-6.838370069148977971815429")) < dwell::pow10(-21));
    CHECK(abs(p1e[1].v - Real::from_string("595.8386548720377955733789")) < dwell::pow10(-21));
    CHECK(abs(p1e[1].epsilon - Real::from_string("-75.77534086014123604654516")) < dwell::pow10(-21));

    auto p1o = dwell::qes_enumerate(1, Parity::odd);
    REQUIRE(p1o.size() == 2);
    CHECK(abs(p1o[0].v - Real::from_string("426.2320480269781440576439")) < dwell::pow10(-21));
    CHECK(abs(p1o[0].epsilon - Real::from_string("-33.9037657499328540638624")) < dwell::pow10(-21));
    CHECK(abs(p1o[1].v - Real::from_string("1092.798974117904655787745")) < dwell::pow10(-20));
    CHECK(abs(p1o[1].epsilon - Real::from_string("-144.6909480722408654537018")) < dwell::pow10(-20));

    // pair count N+1 holds through N=3 (deeper degrees live in the
    // acceptance suite)
    for (int N = 2; N <= 3; ++N)
        for (Parity p : {Parity::even, Parity::odd})
            CHECK(static_cast<int>(dwell::qes_enumerate(N, p).size()) == N + 1);

    // scan ceiling short of the root: empty result
    dwell::QesScanOptions narrow;
    narrow.t_max_extra = Real(2L);  // N=0 even root sits at t = 4 + sqrt(13) > 5
    CHECK(dwell::qes_enumerate(0, Parity::even, narrow).empty());
}

TEST_CASE("explicit first-degree coefficient") {
    // c_1 = ((4 beta + 2 sqrt v + s)(1+s) - v) / (4 (1+s))
    for (Parity p : {Parity::even, Parity::odd}) {
        auto pairs = dwell::qes_enumerate(1, p);
        REQUIRE(pairs.size() == 2);
        for (const auto& q : pairs) {
            Real beta = dwell::beta_value(p);
            Real s = sqrt(-q.epsilon), t = sqrt(q.v);
            Real closed = ((4 * beta + 2 * t + s) * (1 + s) - q.v) / (4 * (1 + s));
            CHECK(abs(q.f_coeffs[1] - closed) < dwell::pow10(-75) * (1 + abs(closed)));
        }
    }
    // published polynomial factor of the first even pair: 1 - 3.575137130402 eta
    auto p1e = dwell::qes_enumerate(1, Parity::even);
    CHECK(abs(p1e[0].f_coeffs[1] - Real::from_string("-3.575137130402")) < dwell::pow10(-12) * 2);
}

TEST_CASE("wavefunctions") {
    auto p0e = dwell::qes_enumerate(0, Parity::even);
    const QesPair& q = p0e[0];
    // psi = sech^{(1+sqrt 13)/2}(z) exp(-(4+sqrt 13) sech^2 z / 2)
    Real expo = (1 + sqrt(Real(13L))) / 2;
    Real gfac = (4 + sqrt(Real(13L))) / 2;
    for (const char* zs : {"0", "0.5", "1", "2"}) {
        Real z = Real::from_string(zs);
        Real sz = dwell::sech(z);
        Real closed = pow(sz, expo) * exp(-gfac * sz * sz);
        CHECK(abs(dwell::qes_wavefunction(q, z) - closed) < dwell::pow10(-80));
    }

    auto p0o = dwell::qes_enumerate(0, Parity::odd);
    CHECK(abs(dwell::qes_wavefunction(p0o[0], Real(0L))) < dwell::pow10(-85));

    // parity of psi under z -> -z
    for (long i = 1; i <= 5; ++i) {
        Real z = Real(i) / 2;
        CHECK(abs(dwell::qes_wavefunction(p0e[0], z) - dwell::qes_wavefunction(p0e[0], -z)) <
              dwell::pow10(-80));
        CHECK(abs(dwell::qes_wavefunction(p0o[0], z) + dwell::qes_wavefunction(p0o[0], -z)) <
              dwell::pow10(-80));
    }
}

TEST_CASE("quasi-exact states satisfy the differential equation") {
    std::vector<QesPair> states;
    states.push_back(dwell::qes_enumerate(0, Parity::even)[0]);
    states.push_back(dwell::qes_enumerate(0, Parity::odd)[0]);
    states.push_back(dwell::qes_enumerate(1, Parity::even)[0]);
    states.push_back(dwell::qes_enumerate(2, Parity::odd)[1]);
    for (const auto& q : states) {
        dwell::PotentialSpec spec(2, q.v);
        auto psi = [&q](const Real& z) { return dwell::qes_wavefunction(q, z); };
        Real rel = dwell::schrodinger_residual(spec, q.epsilon, psi, Real(-3L), Real(3L), 21,
                                               Real::from_string("0.001"));
        CHECK(rel < dwell::pow10(-8));
    }
}

TEST_CASE("iteration engine re-finds the quasi-exact energy") {
    auto p0e = dwell::qes_enumerate(0, Parity::even);
    const QesPair& q = p0e[0];
    dwell::AimProblem problem(2, Parity::even, q.v, Real(1L) / 2, 2);
    dwell::AimOptions opt;
    opt.tol = dwell::pow10(-14);
    opt.n_max = 60;
    auto spectrum = dwell::aim_find_eigenvalues(problem, opt);
    REQUIRE(!spectrum.empty());
    CHECK(abs(spectrum[0].epsilon - q.epsilon) < dwell::pow10(-12));
}
