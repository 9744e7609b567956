#ifndef DWELL_QES_M2_HPP
#define DWELL_QES_M2_HPP

#include <vector>

#include "dwell/heun.hpp"
#include "dwell/parity.hpp"
#include "dwell/real.hpp"

namespace dwell {

/// One quasi-exact solution of the m = 2 well: a strength v and energy eps
/// satisfying both the degree condition eps = -(sqrt(v) - 3 - 4 beta - 4N)^2/4
/// and the vanishing of P_{N+1}, together with the polynomial factor of the
/// wavefunction.
struct QesPair {
    int degree;  // N
    Parity parity;
    Real v;
    Real epsilon;
    std::vector<Real> p_values;  // P_0..P_{N+1}
    std::vector<Real> f_coeffs;  // c_0..c_N of the polynomial in eta = sech^2 z
};

/// Map the m = 2 problem at (beta, v, eps) onto the polynomial-solution
/// normal form (alpha = sqrt(-eps)/2, gamma = sqrt(v)/2).
HeunCoefficients build_heun_coeffs_m2(Parity parity, const Real& v, const Real& epsilon);

/// Degree-condition energy, requires v > (3 + 4 beta + 4N)^2.
Real qes_epsilon(int degree, Parity parity, const Real& v);

/// P_0..P_{N+1} of the m = 2 reduced recurrence at the given (eps, v).
std::vector<Real> qes_recurrence_P(int degree, Parity parity, const Real& v, const Real& epsilon);

struct QesScanOptions {
    // scan runs over t = sqrt(v) in (t_min, t_max], t_min = 3 + 4 beta + 4N;
    // t_max defaults to t_min + 100
    Real t_max_extra = Real(100L);
    int scan_points = 4096;
};

/// All (eps, v) pairs of degree N in the given parity sector, sorted by
/// ascending v. Scanning happens in t = sqrt(v); simple roots come from
/// sign changes, and near-tangent minima of |P_{N+1}| get a derivative-free
/// refinement pass so double roots are not silently lost.
std::vector<QesPair> qes_enumerate(int degree, Parity parity, const QesScanOptions& options = {});

/// psi(z) = sech^{2 alpha}(z) [tanh z] e^{-gamma sech^2 z} f_N(sech^2 z).
Real qes_wavefunction(const QesPair& pair, const Real& z);

}  // namespace dwell

#endif
