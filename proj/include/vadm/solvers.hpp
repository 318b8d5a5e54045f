#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vadm/adomian.hpp"
#include "vadm/fem.hpp"
#include "vadm/linear_solver.hpp"
#include "vadm/problems.hpp"

namespace vadm {

enum class Method { ADM, Picard };

const char* method_name(Method m);

/// How the Picard sweep is seeded. The default reproduces the
/// decomposition's zeroth mode (the linear solve with the reaction
/// dropped) so that the two methods are directly comparable and coincide
/// for linear reactions.
struct PicardStart {
    enum class Rule { MatchAdmZeroMode, ZeroField, Custom };
    Rule rule = Rule::MatchAdmZeroMode;
    Eigen::VectorXd custom;  // free-node coefficients, used with Rule::Custom
};

struct SolverConfig {
    double tol = 1e-10;  // residual infinity-norm threshold
    int max_iter = 200;
    int min_iter = 0;  // compute at least this many iterations (mode-decay studies)
    PicardStart picard_start;
    double divergence_guard = 1e6;
    bool record_iterates = false;
    /// Optional source-splitting transformation for the decomposition:
    /// solve with source f + g and reaction r + g, which leaves the
    /// problem unchanged but makes the zeroth mode nontrivial.
    ScalarFn source_split;
};

struct SolveReport {
    Method method = Method::ADM;
    int iterations = 0;  // corrective modes (ADM) or sweeps (Picard)
    bool converged = false;
    bool diverged = false;
    std::string diagnosis;
    std::vector<double> residual_history;  // length iterations + 1, starts at iterate 0
    NodalField final_field;
    std::optional<double> l2_err;
    double wall_ms = 0.0;
    int linear_solves = 0;
    // Set when not converged: best residual over the last ten iterations,
    // and its ratio to the best overall (a ratio near 1 means a stall).
    double plateau_level = 0.0;
    double plateau_ratio = 0.0;
    std::vector<Eigen::VectorXd> iterate_history;  // free-node iterates, if recorded
};

struct AdmResult {
    ModeSeries series;
    SolveReport report;
};

/// The decomposition iteration: the zeroth mode absorbs source, Neumann
/// data and the Dirichlet lift; mode zeta >= 1 solves the homogeneous
/// problem driven by the Adomian polynomial P_{zeta-1}. Stops when the
/// nonlinear residual of the partial sum drops below tol. Non-convergence
/// at max_iter is an expected outcome, reported rather than thrown.
AdmResult solve_adm(const DiscreteSystem& sys, const Reaction& r, const SolverConfig& cfg,
                    const Factorization* factorization = nullptr);

/// Fixed-point sweeps: each iterate solves the linear principal part
/// against the reaction evaluated at the previous iterate. A residual
/// beyond the divergence guard stops the iteration with a diagnosis.
SolveReport solve_picard(const DiscreteSystem& sys, const Reaction& r, const SolverConfig& cfg,
                         const Factorization* factorization = nullptr);

struct ComparisonCell {
    int n = 0;
    AdmResult adm;
    SolveReport picard;
};

/// Run both methods on identically assembled systems (shared
/// factorization) across mesh sizes; fills in L2 errors when the problem
/// carries an exact solution.
std::vector<ComparisonCell> compare_methods(const Problem& problem, std::span<const int> sizes,
                                            const SolverConfig& cfg);

}  // namespace vadm
