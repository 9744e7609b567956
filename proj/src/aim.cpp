#include "dwell/aim.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "dwell/potential.hpp"

namespace dwell {

AimProblem::AimProblem(int m_, Parity parity_, Real v_, Real r0_, int taylor_order_)
    : m(m_), parity(parity_), v(std::move(v_)), r0(std::move(r0_)), taylor_order(taylor_order_) {
    if (m < 0 || m > 2) throw std::invalid_argument("AimProblem: family index must be 0, 1 or 2");
    if (!(v > 0)) throw std::invalid_argument("AimProblem: v must be positive");
    if (!(r0 > 0) || !(r0 < 1)) throw std::invalid_argument("AimProblem: r0 must lie in (0,1)");
    if (taylor_order < 1) throw std::invalid_argument("AimProblem: series order must be >= 1");
}

namespace {

struct Seeds {
    TaylorSeries lambda0, s0;
};

// lambda_0 and s_0 as a constant plus simple poles at eta = 0 and eta = 1.
Seeds build_seeds(const AimProblem& pr, const Real& eps) {
    int d = pr.v.digits() > eps.digits() ? pr.v.digits() : eps.digits();
    Real beta = beta_value(pr.parity, d);
    Real s = sqrt(-eps);
    Real zero(0L, d);
    Real one(1L, d);
    int D = pr.taylor_order;
    const Real& r0 = pr.r0;

    auto pole0 = [&](const Real& c) { return TaylorSeries::simple_pole(c, zero, r0, D); };
    auto pole1 = [&](const Real& c) { return TaylorSeries::simple_pole(c, one, r0, D); };
    auto cst = [&](const Real& c) { return TaylorSeries::constant(c, D, r0); };

    if (pr.m == 0) {
        TaylorSeries lam = add(pole0(-(1 + s)), pole1(-(1 + 4 * beta) / 2));
        Real k = 4 * beta + s * (1 + 4 * beta) - eps - pr.v;
        TaylorSeries s0 = add(pole0(k / 4), pole1(-k / 4));
        return {std::move(lam), std::move(s0)};
    }
    if (pr.m == 1) {
        const Real& g = pr.gamma;
        TaylorSeries lam = add(add(pole0(-(1 + s)), pole1(-(1 + 4 * beta) / 2)), cst(2 * g));
        Real a = (s + 4 * beta + 4 * beta * s - eps - 2 * g - 8 * beta * g) / 4;
        Real b = (eps + pr.v - s - 4 * beta - 4 * beta * s - 4 * g - 8 * beta * g) / 4;
        TaylorSeries s0 = add(add(pole1(-a), pole0(-b)), cst(-g * g));
        return {std::move(lam), std::move(s0)};
    }
    // m = 2: the constant +sqrt(v) in lambda_0 comes from the quadratic
    // coefficient of f'
    Real t = sqrt(pr.v);
    TaylorSeries lam = add(add(pole0(-(1 + s)), pole1(-(1 + 4 * beta) / 2)), cst(t));
    Real c1 = (-4 * beta * t + 4 * beta * s - t - eps + s + 4 * beta) / 4;
    Real c0 = (-2 * s * t - 4 * beta * s + eps - s - 2 * t - 4 * beta + pr.v) / 4;
    TaylorSeries s0 = add(pole1(-c1), pole0(-c0));
    return {std::move(lam), std::move(s0)};
}

}  // namespace

AimState aim_init(const AimProblem& problem, const Real& epsilon) {
    Real v_min = potential_minimum(PotentialSpec(problem.m, problem.v)).second;
    if (!(epsilon > v_min) || !(epsilon < 0))
        throw std::domain_error("aim_init: eps must lie in (V_min, 0), V_min = " + v_min.str(8));
    Seeds seeds = build_seeds(problem, epsilon);
    return aim_state_from_seeds(std::move(seeds.lambda0), std::move(seeds.s0));
}

AimState aim_state_from_seeds(TaylorSeries lambda0, TaylorSeries s0) {
    TaylorSeries lam = lambda0;
    TaylorSeries s = s0;
    return AimState{0, std::move(lambda0), std::move(s0), std::move(lam), std::move(s),
                    TaylorSeries::zero(0, lam.center()), TaylorSeries::zero(0, lam.center())};
}

AimState aim_iterate(AimState st) {
    int ord = st.lambda.order();
    if (ord < 1)
        throw std::runtime_error("aim_iterate: series order exhausted at n = " + std::to_string(st.n) +
                                 "; rebuild with a larger taylor_order");
    int out = ord - 1;
    TaylorSeries lam_next =
        add(add(differentiate(st.lambda), st.s.truncated(out)), mul_to(st.lambda0, st.lambda, out));
    TaylorSeries s_next = add(differentiate(st.s), mul_to(st.s0, st.lambda, out));
    st.lambda_prev = std::move(st.lambda);
    st.s_prev = std::move(st.s);
    st.lambda = std::move(lam_next);
    st.s = std::move(s_next);
    ++st.n;
    return st;
}

Real aim_delta(const AimState& st) {
    if (st.n < 1) throw std::logic_error("aim_delta: needs at least one iteration");
    return st.lambda.value_at_center() * st.s_prev.value_at_center() -
           st.lambda_prev.value_at_center() * st.s.value_at_center();
}

Real aim_delta_at(const AimProblem& problem, const Real& epsilon, int n) {
    if (n < 1) throw std::invalid_argument("aim_delta_at: n must be >= 1");
    AimProblem pr = problem;
    pr.taylor_order = n + 2;
    AimState st = aim_init(pr, epsilon);
    for (int k = 0; k < n; ++k) st = aim_iterate(std::move(st));
    return aim_delta(st);
}

// ---------------------------------------------------------------------------
// spectrum scan

namespace {

struct Candidate {
    Real x;           // current root estimate
    Real last_move;   // |change| across the last two rounds
    int misses = 0;   // consecutive rounds where the sign change vanished
    int n_solved = 0; // round that produced x
    bool converged = false;
    Real residual;
};

// refine a sign change of g inside [a,b] (g(a), g(b) of opposite sign):
// bisection down to a modest relative width, then safeguarded secant
template <typename F>
Real polish_root(const F& g, Real a, Real b, Real fa, Real fb, const Real& tol) {
    Real scale = abs(a) + abs(b) + 1;
    Real coarse = scale * Real::from_string("1e-6");
    while (b - a > coarse) {
        Real mid = (a + b) / 2;
        Real fm = g(mid);
        if (fm.is_zero()) return mid;
        if (fm.sign() == fa.sign()) { a = mid; fa = fm; }
        else { b = mid; fb = fm; }
    }
    Real x0 = a, x1 = b, f0 = fa, f1 = fb;
    for (int it = 0; it < 48; ++it) {
        Real denom = f1 - f0;
        Real x2;
        if (denom.is_zero()) { x2 = (a + b) / 2; }
        else {
            x2 = x1 - f1 * (x1 - x0) / denom;
            if (x2 < a || x2 > b) x2 = (a + b) / 2;
        }
        Real f2 = g(x2);
        if (f2.is_zero()) return x2;
        if (f2.sign() == fa.sign()) { a = x2; fa = f2; }
        else { b = x2; fb = f2; }
        x0 = x1; f0 = f1;
        x1 = x2; f1 = f2;
        if (abs(x1 - x0) < tol || b - a < tol) break;
    }
    return x1;
}

// locate a sign change of g around `guess`, expanding the window while
// none is visible; window stays inside [lo, hi]
template <typename F>
std::optional<Real> root_near(const F& g, const Real& guess, Real width, const Real& width_cap,
                              const Real& lo, const Real& hi, const Real& tol) {
    for (int tries = 0; tries < 24; ++tries) {
        Real a = max(guess - width, lo);
        Real b = min(guess + width, hi);
        if (a < b) {
            Real fa = g(a), fb = g(b);
            if (fa.is_zero()) return a;
            if (fb.is_zero()) return b;
            if (fa.sign() != fb.sign()) return polish_root(g, a, b, fa, fb, tol);
            // probe interior points before widening: the sign change may sit
            // inside a window whose endpoints happen to agree
            for (int parts : {4, 16}) {
                Real prev_x = a, prev_f = fa;
                for (int i = 1; i <= parts; ++i) {
                    Real x = a + (b - a) * static_cast<long>(i) / static_cast<long>(parts);
                    Real fx = g(x);
                    if (fx.is_zero()) return x;
                    if (fx.sign() != prev_f.sign())
                        return polish_root(g, prev_x, x, prev_f, fx, tol);
                    prev_x = x; prev_f = fx;
                }
            }
        }
        if (width >= width_cap) break;
        width = min(width * 3, width_cap);
    }
    return std::nullopt;
}

}  // namespace

std::vector<EigenResult> aim_find_eigenvalues(const AimProblem& problem, const AimOptions& options) {
    int d = problem.v.digits();
    Real v_min = potential_minimum(PotentialSpec(problem.m, problem.v)).second;
    Real lo = v_min * (1 - pow10(-6, d));
    Real hi = -options.eps_floor;
    if (!(lo < hi)) return {};

    auto delta = [&](const Real& eps, int n) { return aim_delta_at(problem, eps, n); };

    // hybrid grid: uniform points plus log-spaced points toward 0 so very
    // shallow states are not stepped over
    std::vector<Real> grid;
    Real step = (hi - lo) / static_cast<long>(options.grid_points);
    for (int i = 0; i <= options.grid_points; ++i)
        grid.push_back(i == options.grid_points ? hi : lo + step * static_cast<long>(i));
    Real log_pt = -options.eps_floor;
    Real sqrt10 = sqrt(Real(10L, d));
    while (log_pt > lo) {
        if (log_pt < hi) grid.push_back(log_pt);
        log_pt = log_pt * sqrt10;
        if (abs(log_pt) > abs(lo)) break;
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    auto scan_for_brackets = [&](int n) {
        std::vector<std::pair<Real, Real>> brackets;
        Real f_prev = delta(grid[0], n);
        for (size_t i = 1; i < grid.size(); ++i) {
            Real f = delta(grid[i], n);
            int s_prev = f_prev.sign() == 0 ? -1 : f_prev.sign();
            int s_here = f.sign() == 0 ? -1 : f.sign();
            if (s_here * s_prev < 0) brackets.emplace_back(grid[i - 1], grid[i]);
            f_prev = std::move(f);
        }
        return brackets;
    };

    const Real& tol = options.tol;
    std::vector<Candidate> cands;
    auto seed_candidates = [&](int n, const std::vector<std::pair<Real, Real>>& brackets) {
        for (const auto& [a, b] : brackets) {
            auto g = [&](const Real& e) { return delta(e, n); };
            Real fa = g(a), fb = g(b);
            Real x(0L, d);
            if (fa.is_zero()) x = a;
            else if (fb.is_zero()) x = b;
            else if (fa.sign() == fb.sign()) continue;
            else x = polish_root(g, a, b, fa, fb, tol);
            bool dup = false;
            for (const auto& c : cands)
                if (abs(c.x - x) < max(tol * 100, abs(x) * pow10(-(static_cast<long>(d) - 25), d))) {
                    dup = true;
                    break;
                }
            if (!dup) cands.push_back(Candidate{x, b - a, 0, n, false, Real(0L, d)});
        }
    };
    seed_candidates(options.n_start, scan_for_brackets(options.n_start));

    // late-materializing states: two verification rescans of the full grid
    // beyond the initial one
    std::vector<int> rescans{options.n_start + 2 * options.n_step, options.n_start + 4 * options.n_step};

    int n = options.n_start;
    while (n + options.n_step <= options.n_max) {
        bool any_live = false;
        for (const auto& c : cands)
            if (!c.converged && c.misses < 2) any_live = true;
        if (!any_live) {
            if (rescans.empty()) break;
            // jump straight to the next scheduled rescan
            if (rescans.front() > n + options.n_step && rescans.front() + options.n_step <= options.n_max + options.n_step)
                n = rescans.front() - options.n_step;
            else if (rescans.front() <= n)
                rescans.erase(rescans.begin());
        }
        n += options.n_step;
        // sort live candidates so neighbor distances cap the search windows
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.x < b.x; });
        for (size_t i = 0; i < cands.size(); ++i) {
            Candidate& c = cands[i];
            if (c.converged || c.misses >= 2) continue;
            Real width_cap = hi - lo;
            if (i > 0) width_cap = min(width_cap, (c.x - cands[i - 1].x) / 2);
            if (i + 1 < cands.size()) width_cap = min(width_cap, (cands[i + 1].x - c.x) / 2);
            Real width = min(max(c.last_move * 4, abs(c.x) * pow10(-(static_cast<long>(d)), d) + tol), width_cap);
            auto g = [&](const Real& e) { return delta(e, n); };
            auto found = root_near(g, c.x, width, width_cap, lo, hi, tol);
            if (!found) {
                ++c.misses;
                continue;
            }
            c.misses = 0;
            Real move = abs(*found - c.x);
            if (move < tol) {
                c.converged = true;
                c.residual = abs(g(*found));
            }
            c.last_move = move;
            c.x = *found;
            c.n_solved = n;
        }
        while (!rescans.empty() && n >= rescans.front()) {
            seed_candidates(n, scan_for_brackets(n));
            rescans.erase(rescans.begin());
        }
    }

    std::vector<Candidate> kept;
    for (auto& c : cands) {
        if (c.misses >= 2) continue;  // spurious: its sign change evaporated
        bool dup = false;
        for (const auto& k : kept)
            if (abs(k.x - c.x) < max(tol * 100, abs(c.x) * pow10(-(static_cast<long>(d) - 25), d))) {
                dup = true;
                break;
            }
        if (!dup) kept.push_back(std::move(c));
    }
    std::sort(kept.begin(), kept.end(), [](const Candidate& a, const Candidate& b) { return a.x < b.x; });

    std::vector<EigenResult> out;
    for (size_t i = 0; i < kept.size(); ++i) {
        EigenResult r;
        r.level = static_cast<int>(i);
        r.parity = problem.parity;
        r.epsilon = kept[i].x;
        r.method = Method::aim;
        r.iterations = kept[i].n_solved;
        if (!kept[i].converged) kept[i].residual = abs(aim_delta_at(problem, kept[i].x, kept[i].n_solved));
        r.residual = kept[i].residual;
        r.converged = kept[i].converged;
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// m = 1 series wavefunctions

std::vector<Real> m1_series_coefficients(Parity parity, const Real& epsilon, const Real& v, int count) {
    if (!(epsilon < 0)) throw std::invalid_argument("m1_series_coefficients: eps must be negative");
    if (count < 0) throw std::invalid_argument("m1_series_coefficients: count must be >= 0");
    int d = v.digits() > epsilon.digits() ? v.digits() : epsilon.digits();
    Real beta = beta_value(parity, d);
    Real alpha = sqrt(-epsilon) / 2;
    std::vector<Real> c;
    c.reserve(static_cast<size_t>(count) + 1);
    c.emplace_back(1L, d);
    if (count == 0) return c;
    c.push_back((4 * beta + 2 * alpha * (1 + 4 * beta) - epsilon - v) / (4 + 8 * alpha));
    // c_{n+1} = ([4n^2+2n+8bn+8an+2a+4b+8ab+4a^2-v] c_n + v c_{n-1}) / (4(n+1)(n+1+2a));
    // the n-2 term of the printed relation carries the same 1/(4n(2a+n))
    // normalization as the n-1 term (cross-checked against the P_n form)
    for (long n = 1; n < count; ++n) {
        Real num = (4 * n * n + 2 * n + 8 * beta * n + 8 * alpha * n + 2 * alpha + 4 * beta +
                    8 * alpha * beta + 4 * alpha * alpha - v) *
                       c[static_cast<size_t>(n)] +
                   v * c[static_cast<size_t>(n - 1)];
        c.push_back(num / (4 * (n + 1) * (n + 1 + 2 * alpha)));
    }
    return c;
}

Real m1_wavefunction(Parity parity, const Real& epsilon, const Real& v, const Real& z, int max_terms) {
    int d = v.digits() > epsilon.digits() ? v.digits() : epsilon.digits();
    Real alpha = sqrt(-epsilon) / 2;
    Real sz = sech(z);
    Real eta = sz * sz;
    Real cutoff = pow10(-(static_cast<long>(d) / 2), d);

    std::vector<Real> c = m1_series_coefficients(parity, epsilon, v, max_terms);
    Real sum = c[0];
    Real eta_pow(1L, d);
    bool settled = false;
    for (size_t k = 1; k < c.size(); ++k) {
        eta_pow = eta_pow * eta;
        Real term = c[k] * eta_pow;
        sum += term;
        if (abs(term) < cutoff * (1 + abs(sum))) {
            settled = true;
            break;
        }
    }
    if (!settled)
        throw std::runtime_error("m1_wavefunction: series tail still above 10^-" +
                                 std::to_string(d / 2) + " after " + std::to_string(max_terms) +
                                 " terms; energy not converged enough");
    Real psi = pow(sz, 2 * alpha) * sum;
    if (parity == Parity::odd) psi = psi * tanh(z);
    return psi;
}

}  // namespace dwell
