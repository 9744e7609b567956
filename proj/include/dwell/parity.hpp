#ifndef DWELL_PARITY_HPP
#define DWELL_PARITY_HPP

#include <string>

#include "dwell/real.hpp"

namespace dwell {

/// Wavefunction symmetry sector: even states carry beta = 0, odd states
/// beta = 1/2 (the tanh factor).
enum class Parity { even, odd };

inline Real beta_value(Parity p, int digits = Real::default_digits()) {
    return p == Parity::even ? Real(0L, digits) : Real(1L, digits) / Real(2L, digits);
}

inline std::string parity_label(Parity p) { return p == Parity::even ? "0" : "1/2"; }

}  // namespace dwell

#endif
