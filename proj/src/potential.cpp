#include "dwell/potential.hpp"

#include <stdexcept>

namespace dwell {

PotentialSpec::PotentialSpec(int m_, Real v_) : m(m_), v(std::move(v_)) {
    if (m < 0) throw std::invalid_argument("PotentialSpec: family index m must be >= 0");
    if (!(v > 0)) throw std::invalid_argument("PotentialSpec: strength v must be positive");
}

DimensionlessForm to_dimensionless(const PhysicalSpec& p, int m) {
    if (!(p.depth > 0) || !(p.width > 0) || !(p.mass > 0) || !(p.hbar > 0))
        throw std::invalid_argument("PhysicalSpec: all parameters must be positive");
    Real h2 = p.hbar * p.hbar;
    Real d2 = p.width * p.width;
    Real v = 2 * p.mass * p.depth * d2 / h2;
    Real scale = h2 / (2 * p.mass * d2);
    return DimensionlessForm{PotentialSpec(m, v), scale};
}

Real potential_value(const PotentialSpec& spec, const Real& z) {
    Real ch = cosh(z);
    Real sh = sinh(z);
    return -spec.v * pow(sh, 2L * spec.m) / pow(ch, 2L * spec.m + 2);
}

std::pair<Real, Real> potential_minimum(const PotentialSpec& spec) {
    int d = spec.v.digits();
    Real one(1L, d);
    Real z_min = spec.m == 0 ? Real(0L, d) : acosh(Real(1L + 2L * spec.m, d)) / 2;
    Real mm = spec.m == 0 ? one : pow(Real(static_cast<long>(spec.m), d), static_cast<long>(spec.m));
    Real v_min = -spec.v * mm / pow(Real(1L + spec.m, d), 1L + spec.m);
    return {z_min, v_min};
}

Real harmonic_half_integer(int k, int digits) {
    if (k < 1) throw std::invalid_argument("harmonic_half_integer: index must be >= 1");
    Real h = Real(2L, digits) - 2 * log(Real(2L, digits));  // H_{1/2}
    Real x = Real(1L, digits) / 2;
    for (int i = 1; i < k; ++i) {
        h += 1 / (x + 1);
        x += Real(1L, digits);
    }
    return h;
}

std::pair<Real, Real> moment_integrals(const PotentialSpec& spec) {
    int d = spec.v.digits();
    Real i0 = -2 * spec.v / (1 + 2L * spec.m);
    Real s(0L, d);
    Real log4 = 2 * log(Real(2L, d));
    for (int j = 0; j < spec.m; ++j) {
        int k = spec.m - j;
        s += (log4 + harmonic_half_integer(k, d)) / (4L * k);
    }
    Real p = pi(d);
    Real i2 = -(4 * spec.v / (2L * spec.m + 1)) * (p * p / 24 + s);
    return {i0, i2};
}

Real bound_state_upper_bound(const PotentialSpec& spec) {
    int d = spec.v.digits();
    Real s(0L, d);
    Real log4 = 2 * log(Real(2L, d));
    for (int j = 0; j < spec.m; ++j) {
        int k = spec.m - j;
        s += (log4 + harmonic_half_integer(k, d)) / Real(static_cast<long>(k), d);
    }
    Real p = pi(d);
    Real inner = 4 * p * p / 3 + 8 * s;
    Real quarter = Real(1L, d) / 4;
    return 1 + sqrt(spec.v / (2L * spec.m + 1)) * pow(inner, quarter);
}

int exact_bound_state_count_pt(const Real& v, Parity parity) {
    if (!(v > 0)) throw std::invalid_argument("exact_bound_state_count_pt: v must be positive");
    int d = v.digits();
    Real beta = beta_value(parity, d);
    Real x = (-1 - 4 * beta + sqrt(1 + 4 * v)) / 4;
    if (x < 0) return 0;
    return 1 + static_cast<int>(floor(x).to_long());
}

}  // namespace dwell
