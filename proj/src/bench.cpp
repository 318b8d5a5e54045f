#include "vadm/bench.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vadm {

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

TableCell cell_from_report(const std::string& problem, int n, const SolveReport& rep) {
    TableCell c;
    c.problem = problem;
    c.n = n;
    c.method = rep.method;
    c.iterations = rep.iterations;
    c.converged = rep.converged;
    c.final_residual = rep.residual_history.back();
    if (rep.l2_err) c.l2_error = *rep.l2_err;
    c.wall_ms = rep.wall_ms;
    c.linear_solves = rep.linear_solves;
    c.plateau_level = rep.plateau_level;
    return c;
}

}  // namespace

std::vector<TableCell> run_table(const Problem& problem, std::span<const int> sizes,
                                 const SolverConfig& cfg) {
    std::vector<TableCell> cells;
    for (const ComparisonCell& cc : compare_methods(problem, sizes, cfg)) {
        cells.push_back(cell_from_report(problem.name, cc.n, cc.adm.report));
        cells.push_back(cell_from_report(problem.name, cc.n, cc.picard));
    }
    return cells;
}

void write_table_csv(std::ostream& os, const std::vector<TableCell>& cells, bool deterministic) {
    os << "n_elements_per_side,method,iterations,converged,final_residual_inf,l2_error,"
          "wall_ms,linear_solves\n";
    for (const TableCell& c : cells) {
        os << c.n << "," << method_name(c.method) << "," << c.iterations << ","
           << (c.converged ? "true" : "false") << "," << format_double(c.final_residual) << ",";
        if (std::isfinite(c.l2_error)) os << format_double(c.l2_error);
        os << "," << (deterministic ? std::string("0") : format_double(c.wall_ms)) << ","
           << c.linear_solves << "\n";
    }
}

std::vector<ConvergenceCell> convergence_from_table(const std::vector<TableCell>& table) {
    std::vector<ConvergenceCell> cells;
    for (const TableCell& tc : table) {
        ConvergenceCell c;
        c.problem = tc.problem;
        c.n = tc.n;
        c.element_area = 1.0 / (2.0 * tc.n * tc.n);
        c.method = tc.method;
        c.converged = tc.converged;
        if (tc.converged) c.l2_error = tc.l2_error;
        cells.push_back(c);
    }
    return cells;
}

std::vector<ConvergenceCell> run_convergence(const Problem& problem, std::span<const int> sizes,
                                             const SolverConfig& cfg) {
    return convergence_from_table(run_table(problem, sizes, cfg));
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceCell>& cells) {
    os << "n_elements_per_side,element_area,method,l2_error,note\n";
    for (const ConvergenceCell& c : cells) {
        os << c.n << "," << format_double(c.element_area) << "," << method_name(c.method) << ",";
        if (!c.converged)
            os << ",warning: not converged; excluded from the fit";
        else if (!std::isfinite(c.l2_error))
            os << ",warning: no exact solution to measure against";
        else
            os << format_double(c.l2_error) << ",";
        os << "\n";
    }
}

nlohmann::json emit_report(const std::vector<TableCell>& cells, double tol, bool deterministic) {
    nlohmann::json runs = nlohmann::json::array();
    for (const TableCell& c : cells) {
        nlohmann::json run = {
            {"problem", c.problem},
            {"n_elements_per_side", c.n},
            {"method", method_name(c.method)},
            {"iterations", c.iterations},
            {"converged", c.converged},
            {"final_residual_inf", c.final_residual},
            {"linear_solves", c.linear_solves},
            {"wall_ms", deterministic ? 0.0 : c.wall_ms},
        };
        if (std::isfinite(c.l2_error)) run["l2_error"] = c.l2_error;
        if (!c.converged) run["plateau_level"] = c.plateau_level;
        runs.push_back(std::move(run));
    }
    return nlohmann::json{
        {"build", std::string("vadm ") + __DATE__},
        {"tolerance", tol},
        {"deterministic", deterministic},
        {"runs", std::move(runs)},
    };
}

double fit_loglog_slope(const std::vector<double>& h, const std::vector<double>& error) {
    if (h.size() != error.size() || h.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need matching samples, at least two");
    const int n = static_cast<int>(h.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double x = std::log(h[i]);
        const double y = std::log(error[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void write_field_csv(std::ostream& os, const TriMesh& mesh, const NodalField& field) {
    os << "x,y,value\n";
    for (int v = 0; v < mesh.n_nodes(); ++v)
        os << format_double(mesh.nodes[v].x) << "," << format_double(mesh.nodes[v].y) << ","
           << format_double(field.values(v)) << "\n";
}

SolveReport run_single(const Problem& problem, int n, Method method, const SolverConfig& cfg,
                       std::shared_ptr<const TriMesh>* mesh_out) {
    auto mesh = std::make_shared<const TriMesh>(build_unit_square_mesh(n));
    const DiscreteSystem sys = assemble_system(mesh, problem.bc, problem.source);
    SolveReport rep = method == Method::ADM ? solve_adm(sys, problem.reaction, cfg).report
                                            : solve_picard(sys, problem.reaction, cfg);
    if (problem.has_exact())
        rep.l2_err = l2_error(*mesh, rep.final_field, problem.exact, sys.quad);
    if (mesh_out) *mesh_out = mesh;
    return rep;
}

}  // namespace vadm
