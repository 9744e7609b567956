#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "dwell/fd_oracle.hpp"

using dwell::FdGridSpec;

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(dwell::fd_spectrum(0, 1.0, FdGridSpec{5.0, 8001}, 1), std::invalid_argument);
    CHECK_THROWS_AS(dwell::fd_spectrum(0, 1.0, FdGridSpec{15.0, 2000}, 1), std::invalid_argument);
    CHECK_THROWS_AS(dwell::fd_spectrum(0, 1.0, FdGridSpec{15.0, 1001}, 1), std::invalid_argument);
    CHECK_THROWS_AS(dwell::fd_spectrum(0, 1.0, FdGridSpec{15.0, 8001}, 0), std::invalid_argument);
    CHECK_THROWS_AS(dwell::fd_spectrum(0, 1.0, FdGridSpec{15.0, 2001}, 5000), std::invalid_argument);
}

TEST_CASE("m=0 ground state against the closed form") {
    // eps_0 = -(sqrt(5)-1)^2/4 = -0.3819660112...
    double expect = -std::pow(std::sqrt(5.0) - 1.0, 2) / 4.0;
    auto w = dwell::fd_spectrum(0, 1.0, FdGridSpec{20.0, 8001}, 1);
    CHECK(std::abs(w[0] - expect) < 1e-6);
}

TEST_CASE("second-order convergence (Richardson factor of about 4)") {
    double expect = -std::pow(std::sqrt(5.0) - 1.0, 2) / 4.0;
    double e1 = std::abs(dwell::fd_spectrum(0, 1.0, FdGridSpec{20.0, 4001}, 1)[0] - expect);
    double e2 = std::abs(dwell::fd_spectrum(0, 1.0, FdGridSpec{20.0, 8001}, 1)[0] - expect);
    double factor = e1 / e2;
    CHECK(factor > 3.4);
    CHECK(factor < 4.6);
}

TEST_CASE("spectrum is sorted and negative states sit above the well floor") {
    double v = 25.0;
    auto w = dwell::fd_spectrum(0, v, FdGridSpec{15.0, 4001}, 4);
    for (size_t i = 1; i < w.size(); ++i) CHECK(w[i - 1] <= w[i]);
    for (double x : w)
        if (x < 0) CHECK(x > -v);
}

TEST_CASE("eigenvectors alternate parity") {
    FdGridSpec grid{15.0, 4001};
    auto w = dwell::fd_spectrum(0, 25.0, grid, 3);
    for (int k = 0; k < 3; ++k) {
        auto psi = dwell::fd_eigenvector(0, 25.0, grid, w[static_cast<size_t>(k)]);
        size_t n = psi.size();
        double overlap = 0.0, norm = 0.0;
        for (size_t i = 0; i < n; ++i) {
            overlap += psi[i] * psi[n - 1 - i];
            norm += psi[i] * psi[i];
        }
        double parity = overlap / norm;
        CHECK(std::abs(std::abs(parity) - 1.0) < 1e-8);
        // even/odd alternation for a symmetric well
        CHECK(parity * (k % 2 == 0 ? 1.0 : -1.0) > 0.0);
    }
}

TEST_CASE("double-well doublet (m=1, v=100)") {
    auto w = dwell::fd_spectrum(1, 100.0, FdGridSpec{15.0, 8001}, 2);
    // nearly degenerate even/odd pair near -18.76 / -18.62
    CHECK(std::abs(w[0] - (-18.764147649169)) < 1e-4);
    CHECK(std::abs(w[1] - (-18.616900710859)) < 1e-4);
}
