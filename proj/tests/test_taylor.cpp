#include "doctest.h"

#include <random>
#include <stdexcept>
#include <vector>

#include "dwell/real.hpp"
#include "dwell/taylor.hpp"

using dwell::Real;
using dwell::TaylorSeries;

namespace {

TaylorSeries make(const Real& center, std::initializer_list<long> cs) {
    std::vector<Real> v;
    for (long c : cs) v.emplace_back(c);
    return TaylorSeries(center, std::move(v));
}

bool coeffs_close(const TaylorSeries& s, std::initializer_list<long> expect, const Real& tol) {
    if (s.order() + 1 != static_cast<int>(expect.size())) return false;
    int k = 0;
    for (long e : expect) {
        if (!(abs(s.coeff(k) - Real(e)) < tol)) return false;
        ++k;
    }
    return true;
}

}  // namespace

TEST_CASE("series arithmetic examples") {
    Real tol = dwell::pow10(-90);
    Real c0(0L);
    // (1 + x)*(1 + x) truncated at order 2 -> 1 + 2x + x^2
    TaylorSeries onep = make(c0, {1, 1, 0});
    CHECK(coeffs_close(mul(onep, onep), {1, 2, 1}, tol));
    // a + 0 = a
    TaylorSeries a = make(c0, {4, -2, 7});
    CHECK(coeffs_close(add(a, TaylorSeries::zero(2, c0)), {4, -2, 7}, tol));
    // (1 - x)(1 + x + x^2 + x^3) telescopes
    TaylorSeries g = make(c0, {1, -1, 0, 0});
    TaylorSeries h = make(c0, {1, 1, 1, 1});
    CHECK(coeffs_close(mul(g, h), {1, 0, 0, 0}, tol));
}

TEST_CASE("operands of different length are padded") {
    Real c0(0L);
    TaylorSeries a = make(c0, {1, 2, 3});
    TaylorSeries b = make(c0, {5});
    CHECK(coeffs_close(add(a, b), {6, 2, 3}, dwell::pow10(-90)));
    CHECK(sub(b, a).order() == 2);
}

TEST_CASE("center mismatch is a usage error") {
    TaylorSeries a = make(Real(0L), {1, 1});
    TaylorSeries b = make(Real(1L), {1, 1});
    CHECK_THROWS_AS(add(a, b), std::invalid_argument);
    CHECK_THROWS_AS(mul(a, b), std::invalid_argument);
}

TEST_CASE("simple pole expansions") {
    Real tol = dwell::pow10(-90);
    Real half = Real(1L) / Real(2L);
    // 1/(x - 0) around 1/2: 2 - 4 dx + ...
    TaylorSeries p1 = TaylorSeries::simple_pole(Real(1L), Real(0L), half, 1);
    CHECK(coeffs_close(p1, {2, -4}, tol));
    // 1/(x - 1) around 1/2 at order 0: -2
    TaylorSeries p2 = TaylorSeries::simple_pole(Real(1L), Real(1L), half, 0);
    CHECK(coeffs_close(p2, {-2}, tol));
    // 3/(x - 1) around 1/2 to order 2: -6 - 12 dx - 24 dx^2
    TaylorSeries p3 = TaylorSeries::simple_pole(Real(3L), Real(1L), half, 2);
    CHECK(coeffs_close(p3, {-6, -12, -24}, tol));
    CHECK_THROWS_AS(TaylorSeries::simple_pole(Real(1L), half, half, 3), std::domain_error);
}

TEST_CASE("pole series against direct high-precision evaluation") {
    // sum the series at small offsets and compare with c/(x-p) itself
    Real half = Real(1L) / Real(2L);
    TaylorSeries p = TaylorSeries::simple_pole(Real(3L), Real(1L), half, 40);
    for (long k = 8; k <= 12; k += 2) {
        Real offset = dwell::pow10(-k);
        Real direct = Real(3L) / (half + offset - Real(1L));
        CHECK(abs(p.evaluate(offset) - direct) < dwell::pow10(-85));
    }
}

TEST_CASE("differentiate") {
    Real tol = dwell::pow10(-90);
    Real c0(0L);
    CHECK(coeffs_close(differentiate(make(c0, {1, 2, 1})), {2, 2}, tol));
    TaylorSeries constant = make(c0, {9});
    TaylorSeries d = differentiate(constant);
    CHECK(d.order() == 0);
    CHECK(d.coeff(0).is_zero());
    // d/dx of 1/x equals -1/x^2: compare with mul-based -1/x * 1/x
    Real half = Real(1L) / Real(2L);
    TaylorSeries invx = TaylorSeries::simple_pole(Real(1L), Real(0L), half, 5);
    TaylorSeries lhs = differentiate(invx);
    TaylorSeries rhs = mul(TaylorSeries::simple_pole(Real(-1L), Real(0L), half, 4), invx.truncated(4));
    for (int k = 0; k <= 4; ++k) CHECK(abs(lhs.coeff(k) - rhs.coeff(k)) < tol);
}

TEST_CASE("series arithmetic matches exact polynomial arithmetic") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> coeff(-9, 9);
    Real c0(0L);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<Real> pa, pb;
        for (int k = 0; k <= 5; ++k) pa.emplace_back(coeff(rng));
        for (int k = 0; k <= 5; ++k) pb.emplace_back(coeff(rng));
        TaylorSeries a(c0, pa), b(c0, pb);
        TaylorSeries prod = mul(a, b);  // truncated at order 5
        for (int k = 0; k <= 5; ++k) {
            Real want(0L);
            for (int i = 0; i <= k; ++i) want += pa[static_cast<size_t>(i)] * pb[static_cast<size_t>(k - i)];
            CHECK(abs(prod.coeff(k) - want) < dwell::pow10(-90));
        }
    }
}

TEST_CASE("product rule holds to working precision") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long> coeff(-9, 9);
    Real c0(0L);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<Real> pa, pb;
        for (int k = 0; k <= 6; ++k) pa.emplace_back(coeff(rng));
        for (int k = 0; k <= 6; ++k) pb.emplace_back(coeff(rng));
        TaylorSeries a(c0, pa), b(c0, pb);
        TaylorSeries lhs = differentiate(mul(a, b));
        TaylorSeries rhs = add(mul(differentiate(a), b.truncated(5)), mul(a.truncated(5), differentiate(b)));
        for (int k = 0; k <= 5; ++k) CHECK(abs(lhs.coeff(k) - rhs.coeff(k)) < dwell::pow10(-88));
    }
}

TEST_CASE("evaluation at zero offset returns the constant term") {
    TaylorSeries a = make(Real(3L), {7, -1, 2});
    CHECK(a.evaluate(Real(0L)) == Real(7L));
    CHECK(a.value_at_center() == Real(7L));
}
