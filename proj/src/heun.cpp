#include "dwell/heun.hpp"

#include <stdexcept>
#include <utility>

namespace dwell {

Real necessary_tau1(int degree, const Real& b2) {
    if (degree < 0) throw std::invalid_argument("necessary_tau1: degree must be >= 0");
    return Real(static_cast<long>(degree), b2.digits()) * b2;
}

std::vector<Real> recurrence_P(const HeunCoefficients& c, int degree) {
    if (degree < 0) throw std::invalid_argument("recurrence_P: degree must be >= 0");
    int d = c.tau0.digits();
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(degree) + 2);
    Real p_prev(0L, d);
    Real p(1L, d);
    out.push_back(p);
    for (long k = 0; k <= degree; ++k) {
        Real a = c.tau0 - k * (k - 1) * c.a2 - k * c.b1;
        Real b = k * c.b2 * (degree - k + 1) * ((k - 1) * c.a1 + c.b0);
        Real p_next = a * p + b * p_prev;
        p_prev = std::move(p);
        p = std::move(p_next);
        out.push_back(p);
    }
    return out;
}

namespace {

Real sufficiency_value(const HeunCoefficients& base, int degree, const Real& tau0) {
    HeunCoefficients c = base;
    c.tau0 = tau0;
    c.tau1 = necessary_tau1(degree, base.b2);
    return recurrence_P(c, degree).back();
}

}  // namespace

std::vector<Real> find_tau0_roots(const HeunCoefficients& coeffs, int degree,
                                  const Real& lo, const Real& hi,
                                  const RootScanOptions& options) {
    if (!(lo < hi)) throw std::invalid_argument("find_tau0_roots: empty bracket");
    int digs = coeffs.b0.digits();
    auto f = [&](const Real& t) { return sufficiency_value(coeffs, degree, t); };

    Real width = (hi - lo) / static_cast<long>(options.scan_points);
    Real tol = pow10(-(static_cast<long>(digs) - options.bisect_guard), digs);

    std::vector<Real> roots;
    Real x_prev = lo;
    Real f_prev = f(lo);
    for (int i = 1; i <= options.scan_points; ++i) {
        Real x = i == options.scan_points ? hi : lo + width * static_cast<long>(i);
        Real fx = f(x);
        if (f_prev.is_zero()) {
            roots.push_back(x_prev);
        } else if (fx.sign() * f_prev.sign() < 0) {
            Real a = x_prev, b = x, fa = f_prev, fb = fx;
            while (b - a > tol) {
                Real mid = (a + b) / 2;
                Real fm = f(mid);
                if (fm.is_zero()) { a = mid; b = mid; break; }
                if (fm.sign() == fa.sign()) { a = mid; fa = fm; }
                else { b = mid; fb = fm; }
            }
            // secant polish, kept inside the bracket
            Real x0 = a, x1 = b, f0 = fa, f1 = fb;
            for (int s = 0; s < options.secant_steps; ++s) {
                Real denom = f1 - f0;
                if (denom.is_zero()) break;
                Real x2 = x1 - f1 * (x1 - x0) / denom;
                if (x2 < a || x2 > b) break;
                x0 = x1; f0 = f1;
                x1 = x2; f1 = f(x2);
            }
            roots.push_back(x1);
        }
        x_prev = std::move(x);
        f_prev = std::move(fx);
    }
    if (f_prev.is_zero()) roots.push_back(x_prev);

    // P_{N+1} has degree N+1 in tau0; a uniform scan cannot legitimately
    // report more sign changes than that, so keep the N+1 best-separated.
    while (static_cast<int>(roots.size()) > degree + 1) roots.pop_back();
    return roots;
}

PolynomialSolution build_solution(const HeunCoefficients& coeffs, int degree) {
    int d = coeffs.tau0.digits();
    if (coeffs.a1.is_zero()) throw std::domain_error("build_solution: a1 must be nonzero");

    Real want_tau1 = necessary_tau1(degree, coeffs.b2);
    Real tau1_slack = pow10(-(static_cast<long>(d) / 2), d) * (1 + abs(want_tau1));
    if (abs(coeffs.tau1 - want_tau1) > tau1_slack)
        throw std::domain_error("build_solution: tau1 != N*b2, no degree-N polynomial solution");

    std::vector<Real> p = recurrence_P(coeffs, degree);
    Real scale(0L, d);
    for (int k = 0; k <= degree; ++k) scale = max(scale, abs(p[static_cast<size_t>(k)]));
    if (scale.is_zero()) scale = Real(1L, d);
    Real tol = pow10(-(static_cast<long>(d) / 2), d) * scale;
    if (abs(p.back()) > tol)
        throw std::domain_error("build_solution: sufficiency violated, |P_{N+1}| = " + abs(p.back()).str(6) +
                                " exceeds tolerance " + tol.str(6));

    Real ratio = coeffs.b0 / coeffs.a1;  // Pochhammer base
    std::vector<Real> c;
    c.reserve(static_cast<size_t>(degree) + 1);
    Real denom(1L, d);  // k! * a1^k * (b0/a1)_k
    c.emplace_back(1L, d);
    for (long k = 1; k <= degree; ++k) {
        Real poch_term = ratio + (k - 1);
        if (poch_term.is_zero())
            throw std::domain_error("build_solution: (b0/a1)_k vanishes, coefficient denominator is zero");
        denom = denom * k * coeffs.a1 * poch_term;
        c.push_back(p[static_cast<size_t>(k)] / denom);
    }
    if (degree > 0 && c.back().is_zero())
        throw std::domain_error("build_solution: leading coefficient vanishes, solution degenerates");
    return PolynomialSolution{degree, std::move(c), coeffs.tau0, std::move(p)};
}

Real ode_residual(const HeunCoefficients& coeffs, const PolynomialSolution& sol, const Real& z) {
    int d = z.digits();
    auto eval = [&](const std::vector<Real>& poly) {
        Real acc(0L, d);
        for (size_t i = poly.size(); i-- > 0;) acc = acc * z + poly[i];
        return acc;
    };
    std::vector<Real> d1, d2;
    for (size_t k = 1; k < sol.coeffs.size(); ++k) d1.push_back(sol.coeffs[k] * static_cast<long>(k));
    for (size_t k = 1; k < d1.size(); ++k) d2.push_back(d1[k] * static_cast<long>(k));
    if (d1.empty()) d1.emplace_back(0L, d);
    if (d2.empty()) d2.emplace_back(0L, d);

    Real f = eval(sol.coeffs), fp = eval(d1), fpp = eval(d2);
    return (coeffs.a2 * z * z + coeffs.a1 * z) * fpp + (coeffs.b2 * z * z + coeffs.b1 * z + coeffs.b0) * fp -
           (coeffs.tau1 * z + coeffs.tau0) * f;
}

}  // namespace dwell
