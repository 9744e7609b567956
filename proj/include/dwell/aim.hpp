#ifndef DWELL_AIM_HPP
#define DWELL_AIM_HPP

#include <vector>

#include "dwell/parity.hpp"
#include "dwell/poschl_teller.hpp"
#include "dwell/real.hpp"
#include "dwell/taylor.hpp"

namespace dwell {

/// One eigenproblem for the iteration engine: family index m in {0,1,2},
/// parity sector, strength v, evaluation point r0 in (0,1) of the
/// transformed variable, and the series order carried by lambda_0/s_0.
///
/// `gamma` is an experimental knob for m = 1 only: the exponential weight
/// of the solution ansatz, normally fixed to 0 there. Nonzero values change
/// the iteration seed but must converge to the same spectrum.
struct AimProblem {
    int m;
    Parity parity;
    Real v;
    Real r0;
    int taylor_order;
    Real gamma = Real(0L);

    AimProblem(int m_, Parity parity_, Real v_, Real r0_, int taylor_order_);
};

/// Iteration state: lambda_n and s_n (plus their predecessors and the
/// seeds) as truncated series at r0. Each step consumes one derivative
/// order, so order(lambda_n) = taylor_order - n.
struct AimState {
    int n = 0;
    TaylorSeries lambda0, s0;
    TaylorSeries lambda, s;
    TaylorSeries lambda_prev, s_prev;
};

/// Build lambda_0, s_0 for the given energy. Requires V_min < eps < 0.
AimState aim_init(const AimProblem& problem, const Real& epsilon);

/// Build a state from explicit seed series (testing/generic use).
AimState aim_state_from_seeds(TaylorSeries lambda0, TaylorSeries s0);

/// One step: lambda_n = lambda'_{n-1} + s_{n-1} + lambda_0 lambda_{n-1},
/// s_n = s'_{n-1} + s_0 lambda_{n-1}. Throws when the series order is
/// exhausted.
AimState aim_iterate(AimState state);

/// Termination value delta_n = lambda_n s_{n-1} - lambda_{n-1} s_n at r0.
/// Requires n >= 1.
Real aim_delta(const AimState& state);

/// delta_n at the given energy, sizing the series internally (order n+2).
Real aim_delta_at(const AimProblem& problem, const Real& epsilon, int n);

struct AimOptions {
    int n_start = 16;
    int n_step = 4;
    int n_max = 80;
    int grid_points = 256;
    Real eps_floor = Real::from_string("1e-14");
    // roots accepted when two successive refinement rounds agree this closely
    Real tol = pow10(-(static_cast<long>(Real::default_digits()) - 20));
};

/// Scan (V_min, -eps_floor) for roots of eps -> delta_n, refine each across
/// rounds n, n+step, ... until successive roots agree within tol, then
/// rescan at the final order to pick up states that only materialize at
/// higher n. Candidates whose sign change evaporates are dropped as
/// spurious. Results sorted by ascending eps and labeled level 0, 1, ...
std::vector<EigenResult> aim_find_eigenvalues(const AimProblem& problem, const AimOptions& options = {});

/// Series coefficients c_0..c_K of the m = 1 bound-state factor f(eta),
/// eta = sech^2 z (three-term recurrence; c_0 = 1).
std::vector<Real> m1_series_coefficients(Parity parity, const Real& epsilon, const Real& v, int count);

/// m = 1 wavefunction psi(z) = sech^{2 alpha}(z) [tanh z] sum c_n sech^{2n} z.
/// The series is summed adaptively until the last term falls below
/// 10^{-digits/2} of the partial sum; throws if `max_terms` cannot reach
/// that (the energy is then not converged enough for the requested point).
Real m1_wavefunction(Parity parity, const Real& epsilon, const Real& v, const Real& z,
                     int max_terms = 400);

}  // namespace dwell

#endif
