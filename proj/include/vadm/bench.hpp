#pragma once

#include <json.hpp>

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "vadm/solvers.hpp"

namespace vadm {

/// A benchmark invocation: everything the output files depend on. With
/// deterministic set, outputs are a pure function of the other fields
/// (bitwise, per build).
struct BenchRun {
    std::string problem;
    std::vector<int> sizes = {8, 16, 32, 64, 128};
    double tol = 1e-10;
    int max_iter = 200;
    bool deterministic = false;
    std::string out_csv;   // empty: stdout
    std::string out_json;  // empty: no JSON report

    SolverConfig solver_config() const {
        SolverConfig cfg;
        cfg.tol = tol;
        cfg.max_iter = max_iter;
        return cfg;
    }
};

/// One (mesh size, method) cell of an iteration table.
struct TableCell {
    std::string problem;
    int n = 0;
    Method method = Method::ADM;
    int iterations = 0;
    bool converged = false;
    double final_residual = 0.0;
    double l2_error = std::numeric_limits<double>::quiet_NaN();
    double wall_ms = 0.0;
    int linear_solves = 0;
    double plateau_level = 0.0;  // meaningful when not converged
};

/// Run both methods over the mesh sizes and flatten into table cells in
/// canonical order (size-major, ADM before Picard).
std::vector<TableCell> run_table(const Problem& problem, std::span<const int> sizes,
                                 const SolverConfig& cfg);

/// Columns: n_elements_per_side, method, iterations, converged,
/// final_residual_inf, l2_error, wall_ms, linear_solves. With
/// deterministic set, wall_ms is written as 0 so identical inputs give
/// identical bytes.
void write_table_csv(std::ostream& os, const std::vector<TableCell>& cells, bool deterministic);

struct ConvergenceCell {
    std::string problem;
    int n = 0;
    double element_area = 0.0;
    Method method = Method::ADM;
    bool converged = false;
    double l2_error = std::numeric_limits<double>::quiet_NaN();
};

/// (element area, L2 error) per method for converged runs; non-converged
/// cells are kept as warning rows with an empty error column.
std::vector<ConvergenceCell> run_convergence(const Problem& problem, std::span<const int> sizes,
                                             const SolverConfig& cfg);

/// The same projection applied to an already-computed table.
std::vector<ConvergenceCell> convergence_from_table(const std::vector<TableCell>& cells);

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceCell>& cells);

/// Machine-readable aggregate of a batch of runs plus environment
/// metadata (build id, tolerance).
nlohmann::json emit_report(const std::vector<TableCell>& cells, double tol, bool deterministic);

/// Least-squares slope of log(error) against log(h).
double fit_loglog_slope(const std::vector<double>& h, const std::vector<double>& error);

/// Nodal "x,y,value" rows for a solved field.
void write_field_csv(std::ostream& os, const TriMesh& mesh, const NodalField& field);

/// Single solve of a named problem for the CLI; returns the report and
/// optionally the mesh/field for dumping.
SolveReport run_single(const Problem& problem, int n, Method method, const SolverConfig& cfg,
                       std::shared_ptr<const TriMesh>* mesh_out = nullptr);

}  // namespace vadm
