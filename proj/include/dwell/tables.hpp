#ifndef DWELL_TABLES_HPP
#define DWELL_TABLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "dwell/parity.hpp"
#include "dwell/poschl_teller.hpp"
#include "dwell/real.hpp"

namespace dwell {

/// One published reference value: table id ("1".."6" or "A2"), the QES
/// degree where the row is an exact solution (-1 otherwise), parity, level
/// within the sector, provenance ("exact", "aim" or "qes"), the published
/// iteration count (-1 when absent), the count of printed decimal places
/// (-1 for significant-digit matching), and the printed strength/energy
/// strings exactly as published.
struct PaperRow {
    std::string table;
    int deg = -1;
    Parity parity = Parity::even;
    int level = 0;
    std::string method;
    int paper_iters = -1;
    int decimals = -1;
    std::string v_text;
    std::string eps_text;
};

std::vector<PaperRow> load_paper_rows(const std::string& csv_path);

/// Parse a strength column: a decimal literal or the exact form
/// "A+B*sqrt(C)" with integer A, B, C.
Real parse_v_expr(const std::string& text, int digits = Real::default_digits());

/// |computed - printed| in units of the last printed decimal place.
double ulp_distance(const Real& computed, const Real& printed, int decimals);

/// Number of agreeing significant digits, capped at 30.
int matched_sig_digits(const Real& computed, const Real& printed);

struct TableRunConfig {
    std::string data_path = "data/paper_tables.csv";
    int digits = 100;
    Real r0 = Real(1L) / Real(2L);
};

struct TableRowOutcome {
    PaperRow row;
    bool found = true;            // the level exists in the computed census
    bool converged = true;
    Real v_used;                  // strength the computation ran at
    Real computed;                // our value for the row's eps
    std::optional<Real> computed_exact;  // closed form, when one exists
    std::optional<Real> aim_vs_exact;    // |aim - closed form| (table 1)
    std::optional<Real> computed_v;      // enumerated v (A2 rows)
    std::optional<int> iterations;
    double diff_ulp = 0.0;        // decimal-place tables
    int sig_digits = 0;           // significant-digit tables (A2)
    bool digits_ok = false;
    bool iters_ok = true;
    bool over_iteration_note = false;  // > 45 iterations (deep-well tables)
};

struct TableOutcome {
    std::string id;
    std::vector<TableRowOutcome> rows;
    double seconds = 0.0;
    bool pass = false;
};

/// Recompute one published table and compare digit-by-digit. Tolerances:
/// table 1 exact values at 1 ulp of the 20th decimal, AIM vs closed form at
/// 10^-20; tables 2-6 at 2 ulp of the last printed decimal with iteration
/// counts within twice the published ones; A2 pairs at >= 15 significant
/// digits on both members.
TableOutcome run_table(const std::string& id, const TableRunConfig& config);

}  // namespace dwell

#endif
