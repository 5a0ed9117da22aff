// SPDX-License-Identifier: MIT
#ifndef HYPCONE_REPORT_HPP
#define HYPCONE_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

#include "hypcone/fine.hpp"
#include "hypcone/generators.hpp"
#include "hypcone/hilbert.hpp"
#include "hypcone/partition.hpp"
#include "hypcone/triangles.hpp"

namespace hypcone {

/** Parsed command line. Exactly one of graph_file / gen_spec must be set. */
struct RunConfig {
    std::string command;        // delta | audit | verify | report
    std::string graph_file;     // --graph
    std::string gen_spec;       // --gen
    int radius = 4;             // --radius (generator ball radius)
    int base = 0;               // --base (basepoint vertex id)
    std::string word;           // --word (group word for verify)
    int delta_override = -1;    // --delta (skip the delta computation)
    std::string out_path;       // --out (empty = stdout)
    std::string format = "json";
    unsigned seed = 1;          // --seed
    int budget_vertices = 800;  // --budget-vertices
    long long budget_loops = 200000000;  // --budget-loops (sweep step budget)
    bool tree_oracle = false;   // --tree-oracle
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;  // concrete counterexample (vertex ids) when failing
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;     // echoed settings
    std::vector<std::pair<std::string, long long>> measured;     // delta, L, phi_L, K, ...
    std::vector<std::pair<std::string, double>> measured_real;   // norms, ratios
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;  // informational (fallbacks, clamps, skips)

    bool all_pass() const;
};

Report cmd_delta(const RunConfig& cfg);
Report cmd_audit(const RunConfig& cfg);
Report cmd_verify(const RunConfig& cfg);
Report cmd_report(const RunConfig& cfg);

/** Canonical rendering: JSON (default) or the CSV projection, both newline-
 *  terminated, deterministic byte-for-byte for equal configs. */
std::string render_report(const Report& r, const std::string& format);

/** 0 when every check passed, 1 otherwise (budget/usage errors are thrown). */
int exit_code(const Report& r);

// Canonical JSON dumps of the core value types.
std::string to_json_string(const Cone& c);
std::string to_json_string(const FinenessReport& r);
std::string to_json_string(const NormalTriangle& t);
std::string to_json_string(const SphereClass& c);
std::string to_json_string(const SignedDecomposition& d);

/** Coordinate form "row,col,value" sorted by (row, col). */
std::string matrix_to_csv(const BasepointMatrix& m);

} // namespace hypcone

#endif // HYPCONE_REPORT_HPP
