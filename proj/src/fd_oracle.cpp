#include "dwell/fd_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dwell {

namespace {

struct Tridiag {
    std::vector<double> diag;
    std::vector<double> off;  // off[i] couples i and i+1
};

Tridiag discretize(int m, double v, const FdGridSpec& grid) {
    if (m < 0) throw std::invalid_argument("fd_oracle: m must be >= 0");
    if (v <= 0) throw std::invalid_argument("fd_oracle: v must be positive");
    if (grid.half_width < 10.0) throw std::invalid_argument("fd_oracle: half-width must be >= 10");
    if (grid.points < 2001 || grid.points % 2 == 0)
        throw std::invalid_argument("fd_oracle: points must be odd and >= 2001");
    int n = grid.points - 2;  // interior nodes
    double h = 2.0 * grid.half_width / (grid.points - 1);
    Tridiag t;
    t.diag.resize(n);
    t.off.assign(n - 1, -1.0 / (h * h));
    for (int i = 0; i < n; ++i) {
        double z = -grid.half_width + h * (i + 1);
        double sh = std::sinh(z), ch = std::cosh(z);
        double V = -v * std::pow(sh, 2 * m) / std::pow(ch, 2 * m + 2);
        t.diag[i] = 2.0 / (h * h) + V;
    }
    return t;
}

// number of eigenvalues strictly below x (Sturm sign count of the LDL^T pivots)
int count_below(const Tridiag& t, double x) {
    const double tiny = std::numeric_limits<double>::min();
    int count = 0;
    double q = t.diag[0] - x;
    if (q < 0) ++count;
    for (size_t i = 1; i < t.diag.size(); ++i) {
        if (q == 0.0) q = tiny;
        q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / q;
        if (q < 0) ++count;
    }
    return count;
}

}  // namespace

std::vector<double> fd_spectrum(int m, double v, const FdGridSpec& grid, int k) {
    Tridiag t = discretize(m, v, grid);
    int n = static_cast<int>(t.diag.size());
    if (k < 1 || k > n) throw std::invalid_argument("fd_spectrum: k out of range");

    // Gerschgorin bounds
    double lo = t.diag[0], hi = t.diag[0];
    for (int i = 0; i < n; ++i) {
        double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(t.off[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }

    std::vector<double> out;
    out.reserve(k);
    for (int j = 0; j < k; ++j) {
        double a = lo, b = hi;
        for (int it = 0; it < 200; ++it) {
            double mid = 0.5 * (a + b);
            if (mid == a || mid == b) break;
            if (count_below(t, mid) > j) b = mid;
            else a = mid;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

namespace {

// solve (T - shift) y = b by tridiagonal LU with partial pivoting; b is
// overwritten with the solution
void solve_shifted(const Tridiag& t, double shift, std::vector<double>& b) {
    int n = static_cast<int>(t.diag.size());
    std::vector<double> d(n), du(n, 0.0), du2(n, 0.0);
    std::vector<double> dl(t.off);  // subdiagonal, consumed during elimination
    for (int i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
    for (int i = 0; i + 1 < n; ++i) du[i] = t.off[i];

    for (int i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            double mult = d[i] != 0.0 ? dl[i] / d[i] : 0.0;
            d[i + 1] -= mult * du[i];
            b[i + 1] -= mult * b[i];
        } else {
            // swap rows i and i+1
            double mult = dl[i] != 0.0 ? d[i] / dl[i] : 0.0;
            double old_d1 = d[i + 1];
            double old_u1 = (i + 2 < n) ? du[i + 1] : 0.0;
            d[i] = dl[i];
            d[i + 1] = du[i] - mult * old_d1;
            du[i] = old_d1;
            du2[i] = old_u1;
            if (i + 2 < n) du[i + 1] = -mult * old_u1;
            std::swap(b[i], b[i + 1]);
            b[i + 1] -= mult * b[i];
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        if (i + 1 < n) s -= du[i] * b[i + 1];
        if (i + 2 < n) s -= du2[i] * b[i + 2];
        double piv = d[i];
        if (piv == 0.0) piv = std::numeric_limits<double>::min();
        b[i] = s / piv;
    }
}

}  // namespace

std::vector<double> fd_eigenvector(int m, double v, const FdGridSpec& grid, double eigenvalue) {
    Tridiag t = discretize(m, v, grid);
    int n = static_cast<int>(t.diag.size());
    // small shift off the exact eigenvalue keeps the solve well-posed
    double shift = eigenvalue + (std::abs(eigenvalue) + 1.0) * 1e-11;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int iter = 0; iter < 3; ++iter) {
        solve_shifted(t, shift, x);
        double norm = 0.0;
        for (double xi : x) norm += xi * xi;
        norm = std::sqrt(norm);
        for (double& xi : x) xi /= norm;
    }
    return x;
}

}  // namespace dwell
