#ifndef DWELL_SCHRODINGER_CHECK_HPP
#define DWELL_SCHRODINGER_CHECK_HPP

#include <functional>

#include "dwell/potential.hpp"
#include "dwell/real.hpp"

namespace dwell {

using WavefunctionFn = std::function<Real(const Real&)>;

/// max_z |(-psi'' + V psi - eps psi)| / max_z |psi| over a uniform sample
/// grid; psi'' comes from an 8th-order central stencil with step h evaluated
/// in full precision (no hardware roundoff floor).
Real schrodinger_residual(const PotentialSpec& spec, const Real& epsilon, const WavefunctionFn& psi,
                          const Real& z_lo, const Real& z_hi, int samples, const Real& h);

/// L2 norm of psi over [-L, L] by the trapezoid rule (for optional
/// normalization of plotted wavefunctions).
Real wavefunction_l2_norm(const WavefunctionFn& psi, const Real& half_width, int points);

}  // namespace dwell

#endif
