#include "dwell/schrodinger_check.hpp"

#include <stdexcept>

namespace dwell {

Real schrodinger_residual(const PotentialSpec& spec, const Real& epsilon, const WavefunctionFn& psi,
                          const Real& z_lo, const Real& z_hi, int samples, const Real& h) {
    if (samples < 2) throw std::invalid_argument("schrodinger_residual: need at least 2 samples");
    int d = epsilon.digits();
    // 8th-order central second derivative:
    // [-1/560, 8/315, -1/5, 8/5, -205/72, 8/5, -1/5, 8/315, -1/560] / h^2
    const long num[9] = {-1, 8, -1, 8, -205, 8, -1, 8, -1};
    const long den[9] = {560, 315, 5, 5, 72, 5, 5, 315, 560};

    Real h2 = h * h;
    Real worst(0L, d);
    Real peak(0L, d);
    Real step = (z_hi - z_lo) / static_cast<long>(samples - 1);
    for (int i = 0; i < samples; ++i) {
        Real z = z_lo + step * static_cast<long>(i);
        Real acc(0L, d);
        for (int j = 0; j < 9; ++j) {
            Real zj = z + h * static_cast<long>(j - 4);
            acc += psi(zj) * num[j] / den[j];
        }
        Real psi_z = psi(z);
        Real second = acc / h2;
        Real res = abs(-second + potential_value(spec, z) * psi_z - epsilon * psi_z);
        worst = max(worst, res);
        peak = max(peak, abs(psi_z));
    }
    if (peak.is_zero()) throw std::domain_error("schrodinger_residual: wavefunction vanishes on the grid");
    return worst / peak;
}

Real wavefunction_l2_norm(const WavefunctionFn& psi, const Real& half_width, int points) {
    if (points < 3) throw std::invalid_argument("wavefunction_l2_norm: need at least 3 points");
    int d = half_width.digits();
    Real h = 2 * half_width / static_cast<long>(points - 1);
    Real acc(0L, d);
    for (int i = 0; i < points; ++i) {
        Real z = -half_width + h * static_cast<long>(i);
        Real p = psi(z);
        Real w = (i == 0 || i == points - 1) ? Real(1L, d) / 2 : Real(1L, d);
        acc += w * p * p;
    }
    return sqrt(acc * h);
}

}  // namespace dwell
