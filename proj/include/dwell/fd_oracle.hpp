#ifndef DWELL_FD_ORACLE_HPP
#define DWELL_FD_ORACLE_HPP

#include <vector>

namespace dwell {

/// Grid for the hardware-precision finite-difference oracle: the domain is
/// [-L, L] with an odd point count so z = 0 is a node.
struct FdGridSpec {
    double half_width = 15.0;  // L
    int points = 8001;
};

/// k lowest eigenvalues of the central second-difference discretization of
/// -psi'' + V_m(z; v) psi with Dirichlet ends, via Sturm-sequence bisection.
/// Deliberately double-precision and independent of the multiprecision
/// stack; accuracy is O(h^2), h = 2L/(points-1), and only negative values
/// are meaningful bound-state estimates.
std::vector<double> fd_spectrum(int m, double v, const FdGridSpec& grid, int k);

/// Interior-node eigenvector for a previously computed eigenvalue
/// (inverse iteration), normalized to unit Euclidean norm.
std::vector<double> fd_eigenvector(int m, double v, const FdGridSpec& grid, double eigenvalue);

}  // namespace dwell

#endif
