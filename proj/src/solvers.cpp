#include "vadm/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace vadm {

const char* method_name(Method m) { return m == Method::ADM ? "adm" : "picard"; }

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double inf_norm(const Eigen::VectorXd& v) {
    return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
}

void validate(const SolverConfig& cfg) {
    if (!(cfg.tol > 0.0)) throw std::invalid_argument("solver config: tol must be positive");
    if (cfg.max_iter < 1) throw std::invalid_argument("solver config: max_iter must be >= 1");
    if (cfg.min_iter < 0 || cfg.min_iter > cfg.max_iter)
        throw std::invalid_argument("solver config: min_iter must lie in [0, max_iter]");
}

bool keep_iterating(const SolveReport& rep, const SolverConfig& cfg) {
    const int done = static_cast<int>(rep.residual_history.size()) - 1;
    if (done >= cfg.max_iter) return false;
    return done < cfg.min_iter || rep.residual_history.back() > cfg.tol;
}

void finish_report(SolveReport& rep, const SolverConfig& cfg, Clock::time_point start) {
    rep.iterations = static_cast<int>(rep.residual_history.size()) - 1;
    rep.converged = !rep.diverged && rep.residual_history.back() <= cfg.tol;
    if (!rep.converged) {
        const auto& h = rep.residual_history;
        const auto tail = h.size() > 10 ? h.end() - 10 : h.begin();
        rep.plateau_level = *std::min_element(tail, h.end());
        rep.plateau_ratio = rep.plateau_level / *std::min_element(h.begin(), h.end());
    }
    rep.wall_ms = elapsed_ms(start);
}

std::vector<double> sample_at_quadrature(const TriMesh& mesh, const Quadrature& quad,
                                         const ScalarFn& f) {
    std::vector<double> values(mesh.n_triangles() * quad.size());
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        const Node& p0 = mesh.nodes[tri[0]];
        const Node& p1 = mesh.nodes[tri[1]];
        const Node& p2 = mesh.nodes[tri[2]];
        for (int q = 0; q < quad.size(); ++q) {
            const auto& bc = quad.points[q];
            values[t * quad.size() + q] =
                f(bc[0] * p0.x + bc[1] * p1.x + bc[2] * p2.x,
                  bc[0] * p0.y + bc[1] * p1.y + bc[2] * p2.y);
        }
    }
    return values;
}

}  // namespace

AdmResult solve_adm(const DiscreteSystem& sys, const Reaction& r, const SolverConfig& cfg,
                    const Factorization* factorization) {
    validate(cfg);
    const auto start = Clock::now();

    std::optional<Factorization> local;
    if (factorization == nullptr) {
        local.emplace(sys.A);
        factorization = &*local;
    }

    AdmResult result;
    SolveReport& rep = result.report;
    rep.method = Method::ADM;

    Eigen::VectorXd rhs0 = sys.beta + sys.gamma - sys.lift;
    std::vector<double> split_samples;
    if (cfg.source_split) {
        rhs0 += assemble_load(*sys.mesh, sys.dof, cfg.source_split, sys.quad);
        split_samples = sample_at_quadrature(*sys.mesh, sys.quad, cfg.source_split);
    }

    Eigen::VectorXd alpha = factorization->solve(rhs0);  // partial-sum coefficients
    rep.linear_solves = 1;
    result.series.append(sys.full_field(alpha));
    if (cfg.record_iterates) rep.iterate_history.push_back(alpha);
    rep.residual_history.push_back(inf_norm(residual(sys, r, alpha)));

    const Eigen::VectorXd homogeneous = Eigen::VectorXd::Zero(sys.dof.n_nodes);
    while (keep_iterating(rep, cfg)) {
        const int zeta = result.series.count();  // index of the mode being computed
        // Compute the whole step before committing it, so a thrown
        // overflow leaves the report at the last recorded iterate.
        try {
            std::vector<double> p_values =
                adomian_field(r, result.series, zeta - 1, *sys.mesh, sys.quad);
            if (!split_samples.empty() && zeta == 1)
                for (size_t i = 0; i < p_values.size(); ++i) p_values[i] += split_samples[i];
            const Eigen::VectorXd f_vec =
                assemble_from_point_values(*sys.mesh, sys.dof, p_values, sys.quad);
            const Eigen::VectorXd mode = factorization->solve(-f_vec);
            const Eigen::VectorXd next = alpha + mode;
            const double res = inf_norm(residual(sys, r, next));
            ++rep.linear_solves;
            result.series.append(embed_field(sys.dof, mode, homogeneous));
            alpha = next;
            if (cfg.record_iterates) rep.iterate_history.push_back(alpha);
            rep.residual_history.push_back(res);
        } catch (const std::runtime_error& e) {
            rep.diverged = true;
            rep.diagnosis = e.what();
            break;
        }
        const double res = rep.residual_history.back();
        if (!std::isfinite(res) || res > cfg.divergence_guard) {
            rep.diverged = true;
            rep.diagnosis = "residual exceeded the divergence guard";
            break;
        }
    }

    rep.final_field = result.series.partial_sum(static_cast<int>(rep.residual_history.size()) - 1);
    finish_report(rep, cfg, start);
    return result;
}

SolveReport solve_picard(const DiscreteSystem& sys, const Reaction& r, const SolverConfig& cfg,
                         const Factorization* factorization) {
    validate(cfg);
    const auto start = Clock::now();

    std::optional<Factorization> local;
    if (factorization == nullptr) {
        local.emplace(sys.A);
        factorization = &*local;
    }

    SolveReport rep;
    rep.method = Method::Picard;

    const Eigen::VectorXd rhs = sys.beta + sys.gamma - sys.lift;
    Eigen::VectorXd psi;
    switch (cfg.picard_start.rule) {
        case PicardStart::Rule::MatchAdmZeroMode:
            psi = factorization->solve(rhs);
            rep.linear_solves = 1;
            break;
        case PicardStart::Rule::ZeroField:
            psi = Eigen::VectorXd::Zero(sys.n_free());
            break;
        case PicardStart::Rule::Custom:
            if (cfg.picard_start.custom.size() != sys.n_free())
                throw std::invalid_argument("picard start: custom vector has wrong length");
            psi = cfg.picard_start.custom;
            break;
    }
    if (cfg.record_iterates) rep.iterate_history.push_back(psi);
    rep.residual_history.push_back(inf_norm(residual(sys, r, psi)));

    while (keep_iterating(rep, cfg)) {
        try {
            const Eigen::VectorXd b_prev =
                assemble_reaction(*sys.mesh, sys.dof, r, sys.full_field(psi), sys.quad);
            const Eigen::VectorXd next = factorization->solve(rhs - b_prev);
            const double res = inf_norm(residual(sys, r, next));
            ++rep.linear_solves;
            psi = next;
            if (cfg.record_iterates) rep.iterate_history.push_back(psi);
            rep.residual_history.push_back(res);
        } catch (const std::runtime_error& e) {
            rep.diverged = true;
            rep.diagnosis = e.what();
            break;
        }
        const double res = rep.residual_history.back();
        if (!std::isfinite(res) || res > cfg.divergence_guard) {
            rep.diverged = true;
            rep.diagnosis = "residual exceeded the divergence guard";
            break;
        }
    }

    rep.final_field = sys.full_field(psi);
    finish_report(rep, cfg, start);
    return rep;
}

std::vector<ComparisonCell> compare_methods(const Problem& problem, std::span<const int> sizes,
                                            const SolverConfig& cfg) {
    std::vector<ComparisonCell> cells;
    cells.reserve(sizes.size());
    for (int n : sizes) {
        auto mesh = std::make_shared<const TriMesh>(build_unit_square_mesh(n));
        const DiscreteSystem sys = assemble_system(mesh, problem.bc, problem.source);
        const Factorization fact(sys.A);

        ComparisonCell cell;
        cell.n = n;
        cell.adm = solve_adm(sys, problem.reaction, cfg, &fact);
        cell.picard = solve_picard(sys, problem.reaction, cfg, &fact);
        if (problem.has_exact()) {
            cell.adm.report.l2_err =
                l2_error(*mesh, cell.adm.report.final_field, problem.exact, sys.quad);
            cell.picard.l2_err =
                l2_error(*mesh, cell.picard.final_field, problem.exact, sys.quad);
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

}  // namespace vadm
