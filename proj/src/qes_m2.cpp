#include "dwell/qes_m2.hpp"

#include <stdexcept>
#include <utility>

#include "dwell/poschl_teller.hpp"

namespace dwell {

HeunCoefficients build_heun_coeffs_m2(Parity parity, const Real& v, const Real& epsilon) {
    if (!(v > 0)) throw std::invalid_argument("build_heun_coeffs_m2: v must be positive");
    if (!(epsilon < 0)) throw std::invalid_argument("build_heun_coeffs_m2: eps must be negative");
    int d = v.digits() > epsilon.digits() ? v.digits() : epsilon.digits();
    Real beta = beta_value(parity, d);
    Real alpha = sqrt(-epsilon) / 2;
    Real gamma = sqrt(v) / 2;
    HeunCoefficients c{
        /*a1=*/Real(-2L, d),
        /*a2=*/Real(2L, d),
        /*b0=*/-2 * (1 + 2 * alpha),
        /*b1=*/3 + 4 * alpha + 4 * beta + 4 * gamma,
        /*b2=*/-4 * gamma,
        /*tau0=*/-(alpha + 2 * alpha * alpha + 2 * beta + 4 * alpha * beta + 2 * gamma +
                   4 * alpha * gamma - 2 * gamma * gamma),
        /*tau1=*/-gamma * (2 * gamma - 3 - 4 * alpha - 4 * beta),
    };
    return c;
}

Real qes_epsilon(int degree, Parity parity, const Real& v) {
    if (degree < 0) throw std::invalid_argument("qes_epsilon: degree must be >= 0");
    int d = v.digits();
    Real beta = beta_value(parity, d);
    Real threshold = 3 + 4 * beta + 4L * degree;
    if (!(v > threshold * threshold))
        throw NoSuchStateError("qes_epsilon: requires v > (3+4b+4N)^2 = " + (threshold * threshold).str(8),
                               -1);
    Real arg = sqrt(v) - threshold;
    return -arg * arg / 4;
}

std::vector<Real> qes_recurrence_P(int degree, Parity parity, const Real& v, const Real& epsilon) {
    if (!(v > 0)) throw std::invalid_argument("qes_recurrence_P: v must be positive");
    if (!(epsilon < 0)) throw std::invalid_argument("qes_recurrence_P: eps must be negative");
    int d = v.digits() > epsilon.digits() ? v.digits() : epsilon.digits();
    Real beta = beta_value(parity, d);
    Real s = sqrt(-epsilon);
    Real t = sqrt(v);
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(degree) + 2);
    Real p_prev(0L, d);
    Real p(1L, d);
    out.push_back(p);
    for (long k = 0; k <= degree; ++k) {
        Real a = epsilon / 2 - (s / 2) * (1 + 4 * beta + 4 * k + 2 * t) + v / 2 -
                 (2 * beta + k) * (1 + 2 * k) - (1 + 2 * k) * t;
        Real b = 4 * k * (degree - k + 1) * t * (s + k);
        Real p_next = a * p + b * p_prev;
        p_prev = std::move(p);
        p = std::move(p_next);
        out.push_back(p);
    }
    return out;
}

namespace {

std::vector<Real> qes_f_coeffs(int degree, const Real& epsilon, const std::vector<Real>& p) {
    // c_k = P_k (-1/2)^k / (k! (1 + sqrt(-eps))_k)
    int d = epsilon.digits();
    Real s = sqrt(-epsilon);
    std::vector<Real> c;
    c.reserve(static_cast<size_t>(degree) + 1);
    c.emplace_back(1L, d);
    Real denom(1L, d);
    Real half(Real(-1L, d) / 2);
    Real pw(1L, d);
    for (long k = 1; k <= degree; ++k) {
        denom = denom * k * (s + k);  // k! (1+s)_k accumulates as k(s+k)
        pw = pw * half;
        c.push_back(p[static_cast<size_t>(k)] * pw / denom);
    }
    return c;
}

// P_{N+1} along the degree-condition line, as a function of t = sqrt(v)
Real sufficiency_along_line(int degree, Parity parity, const Real& t, const Real& t_min) {
    Real s = (t - t_min) / 2;  // sqrt(-eps)
    Real eps = -s * s;
    return qes_recurrence_P(degree, parity, t * t, eps).back();
}

}  // namespace

std::vector<QesPair> qes_enumerate(int degree, Parity parity, const QesScanOptions& options) {
    if (degree < 0) throw std::invalid_argument("qes_enumerate: degree must be >= 0");
    int d = Real::default_digits();
    Real beta = beta_value(parity, d);
    Real t_min = 3 + 4 * beta + 4L * degree;
    Real t_max = t_min + options.t_max_extra;
    auto f = [&](const Real& t) { return sufficiency_along_line(degree, parity, t, t_min); };

    Real tol = pow10(-(static_cast<long>(d) - 10), d);
    Real step = (t_max - t_min) / static_cast<long>(options.scan_points);

    std::vector<Real> t_roots;
    auto bisect_refine = [&](Real a, Real b, Real fa, Real fb) {
        while (b - a > tol * (1 + abs(a))) {
            Real mid = (a + b) / 2;
            Real fm = f(mid);
            if (fm.is_zero()) return mid;
            if (fm.sign() == fa.sign()) { a = mid; fa = fm; }
            else { b = mid; fb = fm; }
        }
        // secant polish inside the bracket
        Real x0 = a, x1 = b, f0 = fa, f1 = fb;
        for (int s = 0; s < 3; ++s) {
            Real denom = f1 - f0;
            if (denom.is_zero()) break;
            Real x2 = x1 - f1 * (x1 - x0) / denom;
            if (x2 < a || x2 > b) break;
            x0 = x1; f0 = f1;
            x1 = x2; f1 = f(x2);
        }
        return x1;
    };

    std::vector<Real> ts, fs;
    ts.reserve(static_cast<size_t>(options.scan_points) + 1);
    for (int i = 1; i <= options.scan_points; ++i) {
        ts.push_back(i == options.scan_points ? t_max : t_min + step * static_cast<long>(i));
        fs.push_back(f(ts.back()));
    }
    for (size_t i = 1; i < ts.size(); ++i) {
        if (fs[i - 1].is_zero()) {
            t_roots.push_back(ts[i - 1]);
        } else if (fs[i].sign() * fs[i - 1].sign() < 0) {
            t_roots.push_back(bisect_refine(ts[i - 1], ts[i], fs[i - 1], fs[i]));
        }
    }
    // tangential double roots: interior dips of |P_{N+1}| without a sign
    // change get a golden-section squeeze on |f|; accept only if it reaches
    // the sufficiency tolerance
    for (size_t i = 1; i + 1 < ts.size(); ++i) {
        if (abs(fs[i]) < abs(fs[i - 1]) && abs(fs[i]) < abs(fs[i + 1]) &&
            fs[i].sign() == fs[i - 1].sign() && fs[i].sign() == fs[i + 1].sign()) {
            Real a = ts[i - 1], b = ts[i + 1];
            for (int it = 0; it < 200 && (b - a) > tol; ++it) {
                Real m1 = a + (b - a) * 382L / 1000;
                Real m2 = a + (b - a) * 618L / 1000;
                if (abs(f(m1)) < abs(f(m2))) b = m2;
                else a = m1;
            }
            Real t_c = (a + b) / 2;
            Real scale = 1 + abs(fs[i - 1]);
            if (abs(f(t_c)) < pow10(-(static_cast<long>(d) / 2), d) * scale) t_roots.push_back(t_c);
        }
    }

    std::vector<QesPair> pairs;
    for (const Real& t : t_roots) {
        Real s = (t - t_min) / 2;
        Real eps = -s * s;
        Real v = t * t;
        std::vector<Real> p = qes_recurrence_P(degree, parity, v, eps);
        std::vector<Real> c = qes_f_coeffs(degree, eps, p);
        pairs.push_back(QesPair{degree, parity, std::move(v), std::move(eps), std::move(p), std::move(c)});
    }
    // ascending v; scan already walks t upward, dedupe near-identical roots
    std::vector<QesPair> unique;
    for (auto& q : pairs) {
        if (!unique.empty() && abs(unique.back().v - q.v) < tol * (1 + abs(q.v)) * 100) continue;
        unique.push_back(std::move(q));
    }
    return unique;
}

Real qes_wavefunction(const QesPair& pair, const Real& z) {
    int d = pair.v.digits();
    Real alpha = sqrt(-pair.epsilon) / 2;
    Real gamma = sqrt(pair.v) / 2;
    Real sz = sech(z);
    Real eta = sz * sz;
    Real fval(0L, d);
    for (size_t k = pair.f_coeffs.size(); k-- > 0;) fval = fval * eta + pair.f_coeffs[k];
    Real psi = pow(sz, 2 * alpha) * exp(-gamma * eta) * fval;
    if (pair.parity == Parity::odd) psi = psi * tanh(z);
    return psi;
}

}  // namespace dwell
