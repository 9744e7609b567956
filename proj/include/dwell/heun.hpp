#ifndef DWELL_HEUN_HPP
#define DWELL_HEUN_HPP

#include <vector>

#include "dwell/real.hpp"

namespace dwell {

/// Coefficients of the confluent-Heun-type equation
///   (a2 z^2 + a1 z) f'' + (b2 z^2 + b1 z + b0) f' - (tau1 z + tau0) f = 0.
/// Degree-N polynomial solutions exist only when tau1 = N b2 and the
/// recurrence value P_{N+1}(tau0) vanishes.
struct HeunCoefficients {
    Real a1, a2, b0, b1, b2, tau0, tau1;
};

struct PolynomialSolution {
    int degree;                  // N
    std::vector<Real> coeffs;    // c_0..c_N, c_0 = 1
    Real tau0;
    std::vector<Real> p_values;  // P_0..P_{N+1} at tau0
};

/// tau1 required by a degree-N polynomial solution: N*b2.
Real necessary_tau1(int degree, const Real& b2);

/// P_0..P_{N+1} from the three-term recurrence
///   P_{k+1} = (tau0 - k(k-1)a2 - k b1) P_k + k b2 (N-k+1)((k-1)a1 + b0) P_{k-1},
/// P_{-1} = 0, P_0 = 1, evaluated at coeffs.tau0.
std::vector<Real> recurrence_P(const HeunCoefficients& coeffs, int degree);

struct RootScanOptions {
    int scan_points = 512;
    // bisection runs until the bracket is below 10^-(digits - bisect_guard)
    int bisect_guard = 10;
    int secant_steps = 3;
};

/// All sign-change roots of tau0 -> P_{N+1}(tau0) inside [lo, hi], sorted
/// ascending. tau1 is fixed to N*b2 internally; coeffs.tau0 is ignored.
/// No sign change in range gives an empty list.
std::vector<Real> find_tau0_roots(const HeunCoefficients& coeffs, int degree,
                                  const Real& lo, const Real& hi,
                                  const RootScanOptions& options = {});

/// Assemble the solution c_k = P_k / (k! a1^k (b0/a1)_k). Throws if the
/// sufficiency residual |P_{N+1}| exceeds 10^-(digits/2) relative to
/// max_k |P_k|, if tau1 != N b2, or if a Pochhammer factor vanishes.
PolynomialSolution build_solution(const HeunCoefficients& coeffs, int degree);

/// Left-hand side of the defining equation at z for the candidate solution,
/// using exact polynomial differentiation.
Real ode_residual(const HeunCoefficients& coeffs, const PolynomialSolution& sol, const Real& z);

}  // namespace dwell

#endif
