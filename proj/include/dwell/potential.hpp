#ifndef DWELL_POTENTIAL_HPP
#define DWELL_POTENTIAL_HPP

#include <utility>

#include "dwell/parity.hpp"
#include "dwell/real.hpp"

namespace dwell {

/// The dimensionless hyperbolic well family
///   V_m(z; v) = -v sinh^{2m}(z) / cosh^{2m+2}(z),  v > 0, m = 0, 1, 2, ...
/// m = 0 is the modified Poschl-Teller well; every m >= 1 gives a symmetric
/// double well with minima at +-acosh(1+2m)/2.
struct PotentialSpec {
    int m;
    Real v;

    PotentialSpec(int m_, Real v_);
};

/// A physical well of depth U0 and width d for a particle of mass mu.
struct PhysicalSpec {
    Real depth;   // U0, energy units
    Real width;   // d, length units
    Real mass;    // mu
    Real hbar;
};

/// Reduce a physical well to the dimensionless family: v = 2 mu U0 d^2 / hbar^2.
/// The returned scale converts a dimensionless eigenvalue back to energy,
/// E = eps * scale with scale = hbar^2 / (2 mu d^2).
struct DimensionlessForm {
    PotentialSpec spec;
    Real energy_scale;
};
DimensionlessForm to_dimensionless(const PhysicalSpec& p, int m = 0);

Real potential_value(const PotentialSpec& spec, const Real& z);

/// Location (non-negative branch) and value of the potential minimum;
/// z_min = acosh(1+2m)/2, V_min = -v m^m/(1+m)^{1+m} (0^0 = 1).
std::pair<Real, Real> potential_minimum(const PotentialSpec& spec);

/// Zeroth and second moments of the potential, int V dz and int z^2 V dz,
/// in closed form (half-integer harmonic numbers from H_{1/2} = 2 - 2 ln 2).
std::pair<Real, Real> moment_integrals(const PotentialSpec& spec);

/// Real-valued upper bound on the number of bound states; the integer count
/// is strictly below the returned value. Never rounded here.
Real bound_state_upper_bound(const PotentialSpec& spec);

/// Exact bound-state count of the m = 0 well in the given parity sector.
int exact_bound_state_count_pt(const Real& v, Parity parity);

/// H_{(2k-1)/2} for k >= 1 by upward recurrence from H_{1/2}.
Real harmonic_half_integer(int k, int digits = Real::default_digits());

}  // namespace dwell

#endif
