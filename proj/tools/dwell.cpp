// Command-line front end: spectra, closed forms, quasi-exact pairs,
// polynomial solutions, wavefunction samples, and published-table
// reproduction, all printed as decimal strings.
//
// Exit codes: 0 ok, 1 usage error, 2 non-convergence or digit mismatch,
// 3 empty result.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwell/aim.hpp"
#include "dwell/heun.hpp"
#include "dwell/potential.hpp"
#include "dwell/qes_m2.hpp"
#include "dwell/schrodinger_check.hpp"
#include "dwell/tables.hpp"

using dwell::Parity;
using dwell::Real;
using json = nlohmann::ordered_json;

namespace {

struct GlobalConfig {
    int digits = 100;
    std::string format = "text";
    std::string r0 = "0.5";
    int tol_exp = 0;  // 0: default 10^-(digits-20)
};

using Row = std::vector<std::pair<std::string, std::string>>;

void emit(const GlobalConfig& cfg, const std::vector<Row>& rows) {
    if (rows.empty()) return;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
            json obj;
            for (const auto& [k, v] : row) {
                if (v == "null") obj[k] = nullptr;
                else obj[k] = v;
            }
            arr.push_back(obj);
        }
        std::cout << arr.dump(2) << "\n";
        return;
    }
    if (cfg.format == "csv") {
        for (size_t i = 0; i < rows[0].size(); ++i) {
            std::cout << rows[0][i].first << (i + 1 < rows[0].size() ? "," : "\n");
        }
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i)
                std::cout << row[i].second << (i + 1 < row.size() ? "," : "\n");
        }
        return;
    }
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            std::cout << row[i].first << "=" << row[i].second << (i + 1 < row.size() ? "  " : "\n");
    }
}

Parity parse_beta(const std::string& b) {
    if (b == "0") return Parity::even;
    if (b == "0.5" || b == "1/2") return Parity::odd;
    throw CLI::ValidationError("--beta must be 0 or 0.5");
}

std::string opt_int(const std::optional<int>& v) { return v ? std::to_string(*v) : "null"; }

Real tolerance_for(const GlobalConfig& cfg) {
    long e = cfg.tol_exp != 0 ? cfg.tol_exp : static_cast<long>(cfg.digits) - 20;
    return dwell::pow10(-e, cfg.digits);
}

std::string default_data_path() {
    if (const char* env = std::getenv("DWELL_TABLES")) return env;
    return "data/paper_tables.csv";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision bound states of the hyperbolic double-well family"};
    app.require_subcommand(1);

    GlobalConfig cfg;
    if (const char* env = std::getenv("DWELL_DIGITS")) cfg.digits = std::atoi(env);
    app.add_option("--digits", cfg.digits, "working precision in decimal digits (>= 30)");
    app.add_option("--format", cfg.format, "output format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--r0", cfg.r0, "iteration evaluation point in (0,1)");
    app.add_option("--tol-exp", cfg.tol_exp, "root tolerance exponent (10^-E)");

    // --- solve ---------------------------------------------------------
    auto* solve = app.add_subcommand("solve", "iterative spectrum for m in {0,1,2}");
    int s_m = 0;
    std::string s_v, s_beta = "0", s_gamma = "0";
    int s_levels = -1, s_nstart = 16, s_nmax = 80;
    std::string s_floor = "1e-14";
    solve->add_option("--m", s_m, "family index")->required()->check(CLI::Range(0, 2));
    solve->add_option("--v", s_v, "potential strength")->required();
    solve->add_option("--beta", s_beta, "parity sector: 0 or 0.5");
    solve->add_option("--levels", s_levels, "keep only the lowest K states");
    solve->add_option("--n-start", s_nstart, "first iteration order of the scan");
    solve->add_option("--n-max", s_nmax, "iteration budget");
    solve->add_option("--eps-floor", s_floor, "scan stops this close to 0");
    solve->add_option("--gamma", s_gamma, "experimental m=1 exponential weight (default 0)");

    // --- exact ---------------------------------------------------------
    auto* exact = app.add_subcommand("exact", "closed-form m=0 spectrum");
    std::string e_v, e_beta = "0";
    exact->add_option("--v", e_v, "potential strength")->required();
    exact->add_option("--beta", e_beta, "parity sector: 0 or 0.5");

    // --- qes -----------------------------------------------------------
    auto* qes = app.add_subcommand("qes", "quasi-exact (eps, v) pairs of the m=2 family");
    int q_N = 0, q_points = 4096;
    std::string q_beta = "0", q_tmax;
    qes->add_option("--N", q_N, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
    qes->add_option("--beta", q_beta, "parity sector: 0 or 0.5");
    qes->add_option("--tmax", q_tmax, "scan ceiling in t = sqrt(v)");
    qes->add_option("--points", q_points, "scan resolution");

    // --- heun ----------------------------------------------------------
    auto* heun = app.add_subcommand("heun", "degree-N polynomial solutions of the normal form");
    std::string h_a1, h_a2, h_b0, h_b1, h_b2, h_lo = "-100", h_hi = "100";
    int h_N = 0;
    heun->add_option("--a1", h_a1)->required();
    heun->add_option("--a2", h_a2)->required();
    heun->add_option("--b0", h_b0)->required();
    heun->add_option("--b1", h_b1)->required();
    heun->add_option("--b2", h_b2)->required();
    heun->add_option("--N", h_N, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
    heun->add_option("--lo", h_lo, "tau0 bracket, lower end");
    heun->add_option("--hi", h_hi, "tau0 bracket, upper end");

    // --- wavefunction ----------------------------------------------------
    auto* wf = app.add_subcommand("wavefunction", "sampled psi(z) as CSV");
    std::string w_source, w_v, w_beta = "0", w_zmin = "-6", w_zmax = "6";
    int w_n = 0, w_points = 241, w_pair = 0;
    bool w_normalize = false;
    wf->add_option("--source", w_source, "pt (m=0 closed form), m1 (series) or qes (m=2 polynomial)")
        ->required()
        ->check(CLI::IsMember({"pt", "m1", "qes"}));
    wf->add_option("--v", w_v, "strength (pt, m1)");
    wf->add_option("--beta", w_beta, "parity sector: 0 or 0.5");
    wf->add_option("--n", w_n, "level (pt, m1) or degree N (qes)");
    wf->add_option("--pair", w_pair, "which enumerated pair (qes)");
    wf->add_option("--zmin", w_zmin);
    wf->add_option("--zmax", w_zmax);
    wf->add_option("--points", w_points);
    wf->add_flag("--normalize", w_normalize, "L2-normalize on [-25, 25]");

    // --- table -----------------------------------------------------------
    auto* table = app.add_subcommand("table", "recompute a published table and compare digits");
    std::string t_id, t_data = default_data_path();
    table->add_option("--id", t_id, "1..6 or A2")->required()
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "A2"}));
    table->add_option("--data", t_data, "reference CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 1;
    }

    try {
        if (cfg.digits < 30) {
            std::cerr << "--digits must be at least 30\n";
            return 1;
        }
        Real::set_default_digits(cfg.digits);
        Real r0 = Real::from_string(cfg.r0, cfg.digits);

        if (solve->parsed()) {
            Parity p = parse_beta(s_beta);
            Real v = Real::from_string(s_v, cfg.digits);
            dwell::AimProblem problem(s_m, p, v, r0, s_nmax + 2);
            if (s_m == 1) problem.gamma = Real::from_string(s_gamma, cfg.digits);
            dwell::AimOptions opt;
            opt.n_start = s_nstart;
            opt.n_max = s_nmax;
            opt.eps_floor = Real::from_string(s_floor, cfg.digits);
            opt.tol = tolerance_for(cfg);
            auto spectrum = dwell::aim_find_eigenvalues(problem, opt);
            if (s_levels >= 0 && static_cast<int>(spectrum.size()) > s_levels)
                spectrum.resize(static_cast<size_t>(s_levels));
            if (spectrum.empty()) {
                std::cerr << "no bound state found in this sector\n";
                return 3;
            }
            std::vector<Row> rows;
            bool all_converged = true;
            for (const auto& e : spectrum) {
                all_converged = all_converged && e.converged;
                rows.push_back(Row{{"m", std::to_string(s_m)},
                                   {"v", v.str()},
                                   {"beta", dwell::parity_label(p)},
                                   {"n", std::to_string(e.level)},
                                   {"epsilon", e.epsilon.str()},
                                   {"method", dwell::method_label(e.method)},
                                   {"iterations", opt_int(e.iterations)},
                                   {"residual", e.residual ? e.residual->str(3) : "null"},
                                   {"converged", e.converged ? "true" : "false"}});
            }
            emit(cfg, rows);
            return all_converged ? 0 : 2;
        }

        if (exact->parsed()) {
            Parity p = parse_beta(e_beta);
            Real v = Real::from_string(e_v, cfg.digits);
            int count = dwell::exact_bound_state_count_pt(v, p);
            if (count == 0) {
                std::cerr << "no bound state in this sector (count = 0)\n";
                return 3;
            }
            std::vector<Row> rows;
            for (int n = 0; n < count; ++n) {
                Real eps = dwell::pt_eigenvalue(v, p, n);
                rows.push_back(Row{{"m", "0"},
                                   {"v", v.str()},
                                   {"beta", dwell::parity_label(p)},
                                   {"n", std::to_string(n)},
                                   {"epsilon", eps.str()},
                                   {"method", "exact"},
                                   {"count", std::to_string(count)}});
            }
            emit(cfg, rows);
            return 0;
        }

        if (qes->parsed()) {
            Parity p = parse_beta(q_beta);
            dwell::QesScanOptions opt;
            opt.scan_points = q_points;
            Real t_min = 3 + 4 * dwell::beta_value(p, cfg.digits) + 4L * q_N;
            if (!q_tmax.empty()) opt.t_max_extra = Real::from_string(q_tmax, cfg.digits) - t_min;
            auto pairs = dwell::qes_enumerate(q_N, p, opt);
            if (pairs.empty()) {
                std::cerr << "no quasi-exact pair for N=" << q_N << " in scan range t in ("
                          << t_min.str(8) << ", " << (t_min + opt.t_max_extra).str(8) << "]\n";
                return 3;
            }
            std::vector<Row> rows;
            for (size_t i = 0; i < pairs.size(); ++i) {
                Row row{{"N", std::to_string(q_N)},
                        {"beta", dwell::parity_label(p)},
                        {"pair", std::to_string(i)},
                        {"v", pairs[i].v.str()},
                        {"epsilon", pairs[i].epsilon.str()},
                        {"method", "quasi-exact"}};
                for (size_t k = 0; k < pairs[i].f_coeffs.size(); ++k)
                    row.emplace_back("c" + std::to_string(k), pairs[i].f_coeffs[k].str());
                rows.push_back(std::move(row));
            }
            emit(cfg, rows);
            return 0;
        }

        if (heun->parsed()) {
            dwell::HeunCoefficients c{Real::from_string(h_a1, cfg.digits), Real::from_string(h_a2, cfg.digits),
                                      Real::from_string(h_b0, cfg.digits), Real::from_string(h_b1, cfg.digits),
                                      Real::from_string(h_b2, cfg.digits), Real(0L, cfg.digits),
                                      Real(0L, cfg.digits)};
            auto roots = dwell::find_tau0_roots(c, h_N, Real::from_string(h_lo, cfg.digits),
                                                Real::from_string(h_hi, cfg.digits));
            if (roots.empty()) {
                std::cerr << "no tau0 root in [" << h_lo << ", " << h_hi << "]\n";
                return 3;
            }
            std::vector<Row> rows;
            for (size_t i = 0; i < roots.size(); ++i) {
                dwell::HeunCoefficients ci = c;
                ci.tau0 = roots[i];
                ci.tau1 = dwell::necessary_tau1(h_N, c.b2);
                auto sol = dwell::build_solution(ci, h_N);
                Row row{{"N", std::to_string(h_N)},
                        {"root", std::to_string(i)},
                        {"tau0", roots[i].str()},
                        {"tau1", ci.tau1.str()},
                        {"sufficiency", dwell::abs(sol.p_values.back()).str(3)}};
                for (size_t k = 0; k < sol.coeffs.size(); ++k)
                    row.emplace_back("c" + std::to_string(k), sol.coeffs[k].str());
                rows.push_back(std::move(row));
            }
            emit(cfg, rows);
            return 0;
        }

        if (wf->parsed()) {
            Parity p = parse_beta(w_beta);
            dwell::WavefunctionFn psi;
            if (w_source == "pt") {
                if (w_v.empty()) throw CLI::ValidationError("--v is required for --source pt");
                Real v = Real::from_string(w_v, cfg.digits);
                psi = [v, p, n = w_n](const Real& z) { return dwell::pt_wavefunction(v, p, n, z); };
            } else if (w_source == "m1") {
                if (w_v.empty()) throw CLI::ValidationError("--v is required for --source m1");
                Real v = Real::from_string(w_v, cfg.digits);
                dwell::AimProblem problem(1, p, v, r0, 2);
                dwell::AimOptions opt;
                opt.tol = tolerance_for(cfg);
                auto spectrum = dwell::aim_find_eigenvalues(problem, opt);
                if (w_n >= static_cast<int>(spectrum.size())) {
                    std::cerr << "sector has only " << spectrum.size() << " state(s)\n";
                    return 3;
                }
                Real eps = spectrum[static_cast<size_t>(w_n)].epsilon;
                psi = [p, eps, v](const Real& z) { return dwell::m1_wavefunction(p, eps, v, z); };
            } else {
                auto pairs = dwell::qes_enumerate(w_n, p);
                if (w_pair >= static_cast<int>(pairs.size())) {
                    std::cerr << "only " << pairs.size() << " pair(s) for N=" << w_n << "\n";
                    return 3;
                }
                dwell::QesPair pair = pairs[static_cast<size_t>(w_pair)];
                psi = [pair](const Real& z) { return dwell::qes_wavefunction(pair, z); };
            }
            Real norm(1L, cfg.digits);
            if (w_normalize)
                norm = dwell::wavefunction_l2_norm(psi, Real(25L, cfg.digits), 2001);
            Real zmin = Real::from_string(w_zmin, cfg.digits);
            Real zmax = Real::from_string(w_zmax, cfg.digits);
            if (!(zmin < zmax) || w_points < 2) throw CLI::ValidationError("bad z grid");
            Real h = (zmax - zmin) / static_cast<long>(w_points - 1);
            std::cout << "z,psi\n";
            for (int i = 0; i < w_points; ++i) {
                Real z = zmin + h * static_cast<long>(i);
                std::cout << z.str(20) << "," << (psi(z) / norm).str(30) << "\n";
            }
            return 0;
        }

        if (table->parsed()) {
            dwell::TableRunConfig tcfg;
            tcfg.data_path = t_data;
            tcfg.digits = cfg.digits;
            tcfg.r0 = r0;
            auto outcome = dwell::run_table(t_id, tcfg);
            std::vector<Row> rows;
            for (const auto& o : outcome.rows) {
                Row row{{"table", o.row.table},
                        {"beta", dwell::parity_label(o.row.parity)},
                        {"n", std::to_string(o.row.level)},
                        {"v", o.row.v_text},
                        {"eps_printed", o.row.eps_text},
                        {"eps_computed", o.found ? o.computed.str(std::max(o.row.decimals + 6, 24)) : "null"},
                        {"method", o.row.method},
                        {"iterations", opt_int(o.iterations)}};
                if (o.row.decimals > 0)
                    row.emplace_back("ulp_diff", std::to_string(o.diff_ulp));
                else
                    row.emplace_back("sig_digits", std::to_string(o.sig_digits));
                row.emplace_back("ok", o.digits_ok && o.iters_ok ? "true" : "false");
                if (o.over_iteration_note) row.emplace_back("note", "over 45 iterations");
                rows.push_back(std::move(row));
            }
            emit(cfg, rows);
            std::cerr << "table " << t_id << ": " << (outcome.pass ? "all rows reproduced" : "MISMATCH")
                      << " (" << outcome.seconds << " s)\n";
            return outcome.pass ? 0 : 2;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 1;
}
