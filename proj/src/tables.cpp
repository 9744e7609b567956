#include "dwell/tables.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dwell/aim.hpp"
#include "dwell/qes_m2.hpp"

namespace dwell {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

}  // namespace

std::vector<PaperRow> load_paper_rows(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::runtime_error("cannot open reference table file: " + csv_path);
    std::vector<PaperRow> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (header) {  // column names
            header = false;
            continue;
        }
        auto f = split_csv_line(line);
        if (f.size() != 9) throw std::runtime_error("bad reference row: " + line);
        PaperRow r;
        r.table = f[0];
        r.deg = std::stoi(f[1]);
        r.parity = f[2] == "0" ? Parity::even : Parity::odd;
        r.level = std::stoi(f[3]);
        r.method = f[4];
        r.paper_iters = std::stoi(f[5]);
        r.decimals = std::stoi(f[6]);
        r.v_text = f[7];
        r.eps_text = f[8];
        rows.push_back(std::move(r));
    }
    return rows;
}

Real parse_v_expr(const std::string& text, int digits) {
    auto pos = text.find("sqrt(");
    if (pos == std::string::npos) return Real::from_string(text, digits);
    auto plus = text.find('+');
    auto star = text.find('*');
    auto close = text.find(')', pos);
    if (plus == std::string::npos || star == std::string::npos || close == std::string::npos)
        throw std::invalid_argument("parse_v_expr: expected A+B*sqrt(C), got " + text);
    long a = std::stol(text.substr(0, plus));
    long b = std::stol(text.substr(plus + 1, star - plus - 1));
    long c = std::stol(text.substr(pos + 5, close - pos - 5));
    return Real(a, digits) + Real(b, digits) * sqrt(Real(c, digits));
}

double ulp_distance(const Real& computed, const Real& printed, int decimals) {
    Real ulp = pow10(-static_cast<long>(decimals), computed.digits());
    return abs(computed - printed).to_double() / ulp.to_double();
}

int matched_sig_digits(const Real& computed, const Real& printed) {
    if (printed.is_zero()) return computed.is_zero() ? 30 : 0;
    Real rel = abs(computed - printed) / abs(printed);
    for (int k = 30; k >= 1; --k) {
        if (rel <= pow10(-k, computed.digits())) return k;
    }
    return 0;
}

namespace {

struct SectorKey {
    std::string v_text;
    Parity parity;
    bool operator<(const SectorKey& o) const {
        if (v_text != o.v_text) return v_text < o.v_text;
        return parity < o.parity;
    }
};

struct TablePolicy {
    int m = 2;
    int n_start = 16;
    int n_max = 80;
    Real tol;
    double tol_ulp = 2.0;
};

TablePolicy policy_for(const std::string& id, int digits) {
    TablePolicy p;
    if (id == "1") {
        p = {0, 4, 32, pow10(-22, digits), 1.0};
    } else if (id == "2") {
        p = {1, 4, 40, pow10(-25, digits), 2.0};
    } else if (id == "3") {
        p = {1, 6, 64, pow10(-25, digits), 2.0};
    } else if (id == "4") {
        p = {2, 16, 80, pow10(-14, digits), 2.0};
    } else {  // 5, 6
        p = {2, 16, 96, pow10(-14, digits), 2.0};
    }
    return p;
}

}  // namespace

TableOutcome run_table(const std::string& id, const TableRunConfig& config) {
    auto t_begin = std::chrono::steady_clock::now();
    int d = config.digits;
    std::vector<PaperRow> all = load_paper_rows(config.data_path);
    std::vector<PaperRow> rows;
    for (auto& r : all)
        if (r.table == id) rows.push_back(r);
    if (rows.empty()) throw std::invalid_argument("run_table: unknown table id '" + id + "'");

    TableOutcome out;
    out.id = id;

    if (id == "A2") {
        // enumerate each (degree, parity) once; printed pairs are ordered
        // deepest-first while the enumeration ascends in v
        std::map<std::pair<int, Parity>, std::vector<QesPair>> cache;
        for (const auto& r : rows) {
            auto key = std::make_pair(r.deg, r.parity);
            if (!cache.count(key)) cache[key] = qes_enumerate(r.deg, r.parity);
            const auto& pairs = cache[key];
            TableRowOutcome o;
            o.row = r;
            o.v_used = Real(0L, d);
            o.computed = Real(0L, d);
            int idx = static_cast<int>(pairs.size()) - 1 - r.level;
            if (idx < 0 || r.level >= static_cast<int>(pairs.size()) ||
                static_cast<int>(pairs.size()) != r.deg + 1) {
                o.found = false;
                o.digits_ok = false;
            } else {
                const QesPair& q = pairs[static_cast<size_t>(idx)];
                o.computed = q.epsilon;
                o.computed_v = q.v;
                o.v_used = q.v;
                Real eps_printed = Real::from_string(r.eps_text, d);
                Real v_printed = Real::from_string(r.v_text, d);
                int sig_eps = matched_sig_digits(q.epsilon, eps_printed);
                int sig_v = matched_sig_digits(q.v, v_printed);
                o.sig_digits = sig_eps < sig_v ? sig_eps : sig_v;
                o.digits_ok = o.sig_digits >= 15;
            }
            out.rows.push_back(std::move(o));
        }
    } else {
        TablePolicy pol = policy_for(id, d);
        // one spectrum per (v, parity) sector
        std::map<SectorKey, std::vector<EigenResult>> census;
        for (const auto& r : rows) {
            SectorKey key{r.v_text, r.parity};
            if (census.count(key)) continue;
            Real v = parse_v_expr(r.v_text, d);
            int n_max = pol.n_max;
            for (const auto& rr : rows)
                if (rr.v_text == r.v_text && rr.parity == r.parity && rr.paper_iters > 0)
                    n_max = std::max(n_max, 2 * rr.paper_iters + 8);
            AimProblem problem(pol.m, r.parity, v, config.r0, n_max + 2);
            AimOptions opt;
            opt.n_start = pol.n_start;
            opt.n_max = n_max;
            opt.tol = pol.tol;
            census[key] = aim_find_eigenvalues(problem, opt);
        }
        for (const auto& r : rows) {
            TableRowOutcome o;
            o.row = r;
            o.v_used = parse_v_expr(r.v_text, d);
            o.computed = Real(0L, d);
            Real eps_printed = Real::from_string(r.eps_text, d);
            const auto& spectrum = census[SectorKey{r.v_text, r.parity}];

            if (r.method == "exact") {
                o.computed = qes_epsilon(r.deg, r.parity, o.v_used);
                o.computed_exact = o.computed;
                o.diff_ulp = ulp_distance(o.computed, eps_printed, r.decimals);
                o.digits_ok = o.diff_ulp <= pol.tol_ulp;
            } else {
                if (r.level >= static_cast<int>(spectrum.size())) {
                    o.found = false;
                    o.digits_ok = false;
                } else {
                    const EigenResult& e = spectrum[static_cast<size_t>(r.level)];
                    o.computed = e.epsilon;
                    o.iterations = e.iterations;
                    o.converged = e.converged;
                    o.diff_ulp = ulp_distance(o.computed, eps_printed, r.decimals);
                    o.digits_ok = e.converged && o.diff_ulp <= pol.tol_ulp;
                    if (r.paper_iters > 0 && e.iterations)
                        o.iters_ok = *e.iterations <= 2 * r.paper_iters;
                    if ((id == "5" || id == "6") && e.iterations && *e.iterations > 45)
                        o.over_iteration_note = true;
                }
                if (id == "1") {
                    // the closed form is the primary comparison here; AIM
                    // must sit within 1e-20 of it in at most 30 iterations
                    o.computed_exact = pt_eigenvalue(o.v_used, r.parity, r.level);
                    o.diff_ulp = ulp_distance(*o.computed_exact, eps_printed, r.decimals);
                    o.digits_ok = o.diff_ulp <= 1.0;
                    if (o.found) {
                        o.aim_vs_exact = abs(o.computed - *o.computed_exact);
                        if (!(*o.aim_vs_exact <= pow10(-20, d))) o.digits_ok = false;
                        if (o.iterations && *o.iterations > 30) o.iters_ok = false;
                    } else {
                        o.digits_ok = false;
                    }
                }
            }
            out.rows.push_back(std::move(o));
        }
    }

    out.pass = true;
    for (const auto& o : out.rows)
        if (!o.digits_ok || !o.iters_ok) out.pass = false;
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_begin).count();
    return out;
}

}  // namespace dwell
