#include "dwell/poschl_teller.hpp"

#include "dwell/potential.hpp"

namespace dwell {

int pt_max_level(const Real& v, Parity parity) {
    return exact_bound_state_count_pt(v, parity) - 1;
}

Real pt_eigenvalue(const Real& v, Parity parity, int n) {
    if (n < 0) throw std::invalid_argument("pt_eigenvalue: level must be >= 0");
    int d = v.digits();
    int max_n = pt_max_level(v, parity);
    Real beta = beta_value(parity, d);
    Real root = sqrt(1 + 4 * v);
    // strict existence: eps = 0 (the boundary case) is not bound
    Real arg = -1 - 4 * beta - 4L * n + root;
    if (n > max_n || !(arg > 0))
        throw NoSuchStateError("pt_eigenvalue: no bound state at level " + std::to_string(n) +
                                   " (highest level is " + std::to_string(max_n) + ")",
                               max_n);
    return -arg * arg / 4;
}

Real gauss_2f1_terminating(int n, const Real& b, const Real& c, const Real& x) {
    if (n < 0) throw std::invalid_argument("gauss_2f1_terminating: n must be >= 0");
    int d = x.digits() > b.digits() ? x.digits() : b.digits();
    Real sum(1L, d);
    Real term(1L, d);
    for (long k = 0; k < n; ++k) {
        Real c_k = c + k;
        if (c_k.is_zero())
            throw std::domain_error("gauss_2f1_terminating: lower Pochhammer factor vanishes");
        // (-n)_k steps by (-n + k)
        term = term * (Real(-static_cast<long>(n), d) + k) * (b + k) / (c_k * (k + 1)) * x;
        sum += term;
    }
    return sum;
}

Real pt_wavefunction(const Real& v, Parity parity, int n, const Real& z) {
    int d = v.digits();
    Real eps = pt_eigenvalue(v, parity, n);
    Real s = sqrt(-eps);
    Real sz = sech(z);
    Real eta = sz * sz;
    Real half(Real(1L, d) / 2);
    Real b = parity == Parity::even ? half + s + static_cast<long>(n)
                                    : 3 * half + s + static_cast<long>(n);
    Real f = gauss_2f1_terminating(n, b, 1 + s, eta);
    Real psi = pow(sz, s) * f;
    if (parity == Parity::odd) psi = psi * tanh(z);
    return psi;
}

}  // namespace dwell
