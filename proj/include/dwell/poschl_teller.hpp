#ifndef DWELL_POSCHL_TELLER_HPP
#define DWELL_POSCHL_TELLER_HPP

#include <optional>
#include <stdexcept>

#include "dwell/parity.hpp"
#include "dwell/real.hpp"

namespace dwell {

enum class Method { exact, quasi_exact, aim };

inline const char* method_label(Method m) {
    switch (m) {
        case Method::exact: return "exact";
        case Method::quasi_exact: return "quasi-exact";
        default: return "aim";
    }
}

/// One bound state: level index within its parity sector, energy, and how
/// it was obtained. eps always sits in (V_min, 0).
struct EigenResult {
    int level = 0;
    Parity parity = Parity::even;
    Real epsilon;
    Method method = Method::aim;
    std::optional<int> iterations;
    std::optional<Real> residual;
    bool converged = true;
};

/// Requested level does not exist for the given strength; carries the
/// largest admissible level (-1 when the sector is empty).
class NoSuchStateError : public std::domain_error {
public:
    NoSuchStateError(const std::string& what, int max_level)
        : std::domain_error(what), max_level_(max_level) {}
    int max_level() const { return max_level_; }

private:
    int max_level_;
};

/// Closed-form eigenvalue of the m = 0 well,
///   eps_n = -(-1 - 4 beta - 4n + sqrt(1+4v))^2 / 4,
/// valid while n < (-1 - 4 beta + sqrt(1+4v))/4 (strict: eps = 0 is not a
/// bound state). Throws NoSuchStateError past the last level.
Real pt_eigenvalue(const Real& v, Parity parity, int n);

/// Largest admissible level in the sector, -1 if none.
int pt_max_level(const Real& v, Parity parity);

/// Terminating Gauss series 2F1(-n, b; c; x) = sum_{k<=n} (-n)_k (b)_k / ((c)_k k!) x^k.
Real gauss_2f1_terminating(int n, const Real& b, const Real& c, const Real& x);

/// Unnormalized bound-state wavefunction of the m = 0 well:
///   sech^s(z) [tanh z] 2F1(-n, beta-shifted; 1+s; sech^2 z), s = sqrt(-eps_n).
Real pt_wavefunction(const Real& v, Parity parity, int n, const Real& z);

}  // namespace dwell

#endif
