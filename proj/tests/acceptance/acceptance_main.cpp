// Acceptance suite: one criterion per function, one PASS/FAIL line per
// criterion, exit code equal to the number of failures. An optional
// argument selects a single criterion by number.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "vadm/bench.hpp"
#include "vadm/demo1d.hpp"
#include "vadm/solvers.hpp"

using namespace vadm;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << (detail.tellp() > 0 ? "; " : "") << what;
        }
    }
    void note(const std::string& what) {
        detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string row_to_string(const std::vector<int>& row) {
    std::string s = "(";
    for (size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    return s + ")";
}

void check_band(Outcome& out, const char* label, const std::vector<int>& measured,
                const std::vector<int>& expected, int band) {
    bool ok = true;
    for (size_t i = 0; i < expected.size(); ++i)
        if (std::abs(measured[i] - expected[i]) > band) ok = false;
    std::ostringstream what;
    what << label << " measured " << row_to_string(measured) << " vs expected "
         << row_to_string(expected) << " band +-" << band;
    out.require(ok, what.str());
    if (ok) out.note(std::string(label) + " " + row_to_string(measured) + " within band");
}

// --- criterion 1 -----------------------------------------------------------

Outcome criterion1() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const Problem p = test2();
    SolverConfig cfg;
    cfg.record_iterates = true;
    double worst = 0.0;
    for (int n : {8, 16, 32, 64}) {
        auto mesh = std::make_shared<const TriMesh>(build_unit_square_mesh(n));
        const DiscreteSystem sys = assemble_system(mesh, p.bc, p.source);
        const Factorization fact(sys.A);
        const AdmResult adm = solve_adm(sys, p.reaction, cfg, &fact);
        const SolveReport pic = solve_picard(sys, p.reaction, cfg, &fact);
        out.require(adm.report.converged && pic.converged,
                    "both methods must converge on n=" + std::to_string(n));
        const size_t shared =
            std::min(adm.report.iterate_history.size(), pic.iterate_history.size());
        for (size_t m = 0; m < shared; ++m) {
            const double gap = (adm.report.iterate_history[m] - pic.iterate_history[m])
                                   .lpNorm<Eigen::Infinity>();
            worst = std::max(worst, gap);
        }
    }
    out.require(worst <= 1e-9, "max nodal gap " + std::to_string(worst) + " exceeds 1e-9");
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 30.0, "runtime over 30 s");
    std::ostringstream note;
    note << "max nodal ADM/Picard gap " << worst << ", " << elapsed << " s";
    out.note(note.str());
    return out;
}

// --- criteria 2-4: iteration tables ----------------------------------------

struct TableRows {
    std::vector<int> adm, picard;
    std::vector<bool> adm_converged, picard_converged;
    std::vector<double> adm_plateau;
};

// Criteria 2-5 are driven through the bench-module entry points, the
// same engine the CLI uses.
TableRows run_rows(const Problem& p, const std::vector<int>& sizes) {
    TableRows rows;
    for (const TableCell& c : run_table(p, sizes, SolverConfig{})) {
        if (c.method == Method::ADM) {
            rows.adm.push_back(c.iterations);
            rows.adm_converged.push_back(c.converged);
            rows.adm_plateau.push_back(c.plateau_level);
        } else {
            rows.picard.push_back(c.iterations);
            rows.picard_converged.push_back(c.converged);
        }
    }
    return rows;
}

const std::vector<int> kSizes = {8, 16, 32, 64, 128};

Outcome criterion2() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const TableRows rows = run_rows(test2(), kSizes);
    bool equal = true;
    for (size_t i = 0; i < kSizes.size(); ++i)
        if (rows.adm[i] != rows.picard[i]) equal = false;
    out.require(equal, "ADM and Picard counts must be identical (linear reaction)");
    if (equal) out.note("ADM == Picard at every size");
    check_band(out, "counts", rows.adm, {9, 8, 7, 6, 6}, 2);
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 60.0, "runtime over 60 s");
    return out;
}

Outcome criterion3() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const TableRows rows = run_rows(test4(), kSizes);
    bool ordered = true;
    for (size_t i = 0; i < kSizes.size(); ++i)
        if (!(rows.adm[i] > rows.picard[i])) ordered = false;
    out.require(ordered, "ADM must need strictly more iterations than Picard");
    if (ordered) out.note("ADM > Picard at every size");
    check_band(out, "ADM", rows.adm, {18, 17, 15, 13, 11}, 2);
    check_band(out, "Picard", rows.picard, {11, 10, 9, 8, 7}, 2);
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 120.0, "runtime over 120 s");
    return out;
}

Outcome criterion4() {
    Outcome out;
    const TableRows t1 = run_rows(test1(), kSizes);
    check_band(out, "test1 ADM", t1.adm, {8, 8, 7, 7, 6}, 2);
    check_band(out, "test1 Picard", t1.picard, {8, 8, 7, 7, 6}, 2);

    const TableRows t3 = run_rows(test3(), kSizes);
    out.require(!t3.adm_converged[0], "test3 n=8 ADM cell must report converged=false");
    {
        std::ostringstream note;
        if (t3.adm_converged[0]) {
            note << "test3 n=8 ADM converged in " << t3.adm[0]
                 << " iterations (reference behavior: plateau at 3.8462e-03)";
        } else {
            note << "test3 n=8 ADM plateau statistic " << t3.adm_plateau[0]
                 << " (reference 3.8462e-03, compared qualitatively)";
        }
        out.note(note.str());
    }
    check_band(out, "test3 ADM (n>=16)", {t3.adm[1], t3.adm[2], t3.adm[3], t3.adm[4]},
               {12, 9, 8, 7}, 2);
    check_band(out, "test3 Picard", t3.picard, {24, 12, 9, 8, 7}, 2);
    return out;
}

// --- criterion 5: mesh convergence -----------------------------------------

Outcome criterion5() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<int> sizes = {16, 32, 64, 128};
    for (const Problem& p : {test1(), test2(), test3(), test4()}) {
        std::vector<double> h, err;
        const auto cells = run_convergence(p, sizes, SolverConfig{});
        for (size_t i = 0; i + 1 < cells.size(); i += 2) {
            const ConvergenceCell& adm = cells[i];
            const ConvergenceCell& pic = cells[i + 1];
            out.require(adm.converged && pic.converged,
                        p.name + " n=" + std::to_string(adm.n) + " did not converge");
            if (!(adm.converged && pic.converged)) continue;
            const double gap = std::abs(adm.l2_error - pic.l2_error);
            out.require(gap <= 1e-8,
                        p.name + " n=" + std::to_string(adm.n) + " method errors differ by " +
                            std::to_string(gap));
            h.push_back(std::sqrt(adm.element_area));
            err.push_back(adm.l2_error);
        }
        if (h.size() == sizes.size()) {
            const double slope = fit_loglog_slope(h, err);
            std::ostringstream note;
            note << p.name << " slope " << slope;
            out.note(note.str());
            out.require(slope >= 1.75 && slope <= 2.25, p.name + " slope outside [1.75, 2.25]");
        }
    }
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 300.0, "runtime over 5 min");
    std::ostringstream note;
    note << elapsed << " s";
    out.note(note.str());
    return out;
}

// --- criterion 6: Adomian polynomial oracles --------------------------------

Outcome criterion6() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> dist(-0.9, 0.9);
    const auto u = Reaction::variable();

    // (a) paper closed forms for r = u^2 and r = 2 exp(u), order <= 3.
    {
        const Reaction r = pow(u, 2);
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            double m[4];
            for (double& v : m) v = dist(rng);
            const double closed[4] = {m[0] * m[0], 2.0 * m[0] * m[1],
                                      m[1] * m[1] + 2.0 * m[0] * m[2],
                                      2.0 * m[0] * m[3] + 2.0 * m[1] * m[2]};
            for (int z = 0; z <= 3; ++z)
                worst = std::max(worst, std::abs(adomian_coefficient(
                                            r, std::span<const double>(m, z + 1)) -
                                        closed[z]));
        }
        out.require(worst <= 1e-12, "square closed forms off by " + std::to_string(worst));
    }
    {
        const Reaction r = 2.0 * exp(u);
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            double m[4] = {0.0, dist(rng), dist(rng), dist(rng)};
            const double closed[4] = {2.0, 2.0 * m[1], 2.0 * m[2] + m[1] * m[1],
                                      m[1] * m[1] * m[1] / 3.0 + 2.0 * m[3] +
                                          2.0 * m[1] * m[2]};
            for (int z = 0; z <= 3; ++z)
                worst = std::max(worst, std::abs(adomian_coefficient(
                                            r, std::span<const double>(m, z + 1)) -
                                        closed[z]));
        }
        out.require(worst <= 1e-12, "exponential closed forms off by " + std::to_string(worst));
    }

    // (b) Bell-polynomial recursion oracle, order <= 6.
    {
        struct Case {
            Reaction r;
            std::function<double(int, double)> d;
        };
        const Case cases[] = {
            {pow(u, 2),
             [](int k, double v) {
                 return k == 0 ? v * v : (k == 1 ? 2.0 * v : (k == 2 ? 2.0 : 0.0));
             }},
            {exp(u), [](int, double v) { return std::exp(v); }},
            {sin(u),
             [](int k, double v) {
                 switch (k % 4) {
                     case 0: return std::sin(v);
                     case 1: return std::cos(v);
                     case 2: return -std::sin(v);
                     default: return -std::cos(v);
                 }
             }},
        };
        double worst = 0.0;
        for (const Case& c : cases)
            for (int trial = 0; trial < 50; ++trial) {
                std::vector<double> m(7);
                for (double& v : m) v = dist(rng);
                const auto expected = oracles::bell_adomian(c.d, m);
                for (int z = 0; z <= 6; ++z)
                    worst = std::max(
                        worst, std::abs(adomian_coefficient(
                                   c.r, std::span<const double>(m.data(), z + 1)) -
                               expected[z]));
            }
        out.require(worst <= 1e-10, "Bell oracle disagreement " + std::to_string(worst));
    }

    // (c) central finite differences in the series parameter at step
    // 1e-5: the first derivative directly, and the full truncation
    // through the composition values at the +-step stencil points. (A
    // raw second difference of O(1) values at this step is pure
    // roundoff, ~4e-6, so orders >= 2 are checked through the values.)
    {
        const double step = 1e-5;
        double worst = 0.0;
        for (const Reaction& r : {exp(u), sin(u), pow(u, 2)}) {
            for (int trial = 0; trial < 20; ++trial) {
                double m[4];
                for (double& v : m) v = dist(rng);
                auto along = [&](double lambda) {
                    return r(m[0] + lambda * (m[1] + lambda * (m[2] + lambda * m[3])));
                };
                const double p1 = adomian_coefficient(r, std::span<const double>(m, 2));
                const double fd1 = oracles::fd_derivative(along, 1, step);
                worst = std::max(worst, std::abs(p1 - fd1) / std::max(1.0, std::abs(fd1)));
                double poly[4];
                for (int z = 0; z <= 3; ++z)
                    poly[z] = adomian_coefficient(r, std::span<const double>(m, z + 1));
                for (double lambda : {step, -step}) {
                    const double truncated =
                        poly[0] + lambda * (poly[1] + lambda * (poly[2] + lambda * poly[3]));
                    const double exact = along(lambda);
                    worst = std::max(worst,
                                     std::abs(truncated - exact) / std::max(1.0, std::abs(exact)));
                }
            }
        }
        out.require(worst <= 1e-6, "finite-difference disagreement " + std::to_string(worst));
    }

    const double elapsed = seconds_since(t0);
    out.require(elapsed < 10.0, "runtime over 10 s");
    if (out.pass) out.note("closed forms, Bell recursion, finite differences all agree");
    return out;
}

// --- criterion 7: exact 1D example ------------------------------------------

Outcome criterion7() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto modes = adm_modes_1d(30);
    bool monomial = true;
    for (int z = 0; z <= 30; ++z) {
        if (modes[z].degree() != z) monomial = false;
        for (int k = 0; k <= z && monomial; ++k)
            if (modes[z].coeff(k) != Rational(k == z ? 1 : 0)) monomial = false;
    }
    out.require(monomial, "modes must equal x^zeta exactly for zeta <= 30");

    const auto iterates = picard_iterates_1d(10);
    bool degrees = true;
    for (int m = 0; m <= 10; ++m)
        if (iterates[m].degree() != (1 << m) - 1) degrees = false;
    out.require(degrees, "Picard iterate degrees must equal 2^M - 1 for M <= 10");

    const auto est = convergence_order_1d(0.5, 30);
    out.require(std::abs(est.ratios.back() - 0.5) <= 1e-10,
                "terminal ratio at x = 0.5 must be 0.5 within 1e-10");
    std::ostringstream note;
    note << "terminal ratio " << est.ratios.back() << ", fitted order " << est.alpha;
    out.note(note.str());

    const double elapsed = seconds_since(t0);
    out.require(elapsed < 10.0, "runtime over 10 s");
    return out;
}

// --- criterion 8: trivial-solution regression --------------------------------

Outcome criterion8() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const Problem p = remark_case();
    auto mesh = std::make_shared<const TriMesh>(build_unit_square_mesh(8));
    const DiscreteSystem sys = assemble_system(mesh, p.bc, p.source);

    SolverConfig forced;
    forced.tol = 1e-300;  // force a fixed number of corrective modes
    forced.max_iter = 6;
    const AdmResult adm = solve_adm(sys, p.reaction, forced);
    double worst_mode = 0.0, worst_poly = 0.0;
    for (int z = 0; z < adm.series.count(); ++z)
        worst_mode = std::max(worst_mode, adm.series.mode(z).values.lpNorm<Eigen::Infinity>());
    for (int z = 0; z + 1 < adm.series.count(); ++z)
        for (double v : adomian_field(p.reaction, adm.series, z, *sys.mesh, sys.quad))
            worst_poly = std::max(worst_poly, std::abs(v));
    out.require(worst_mode <= 1e-14, "mode norms must stay at zero");
    out.require(worst_poly <= 1e-14, "Adomian polynomials must vanish");

    const AdmResult standard = solve_adm(sys, p.reaction, SolverConfig{});
    out.require(standard.report.converged && standard.report.iterations == 0,
                "standard run must converge to the trivial solution at iteration 0");
    std::ostringstream note;
    note << "max mode norm " << worst_mode << ", max polynomial " << worst_poly;
    out.note(note.str());

    const double elapsed = seconds_since(t0);
    out.require(elapsed < 5.0, "runtime over 5 s");
    return out;
}

// --- criterion 9: manufactured sources ---------------------------------------

Outcome criterion9() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dist(0.02, 0.98);
    for (const Problem& p : {test1(), test2(), test3(), test4()}) {
        double worst = 0.0;
        for (int k = 0; k < 100; ++k) {
            const double x = dist(rng), y = dist(rng);
            const double lap = oracles::fd_laplacian(p.exact, x, y);
            const double defect = -lap + p.reaction(p.exact(x, y)) - p.source(x, y);
            const double scale = std::max({1.0, std::abs(lap), std::abs(p.source(x, y))});
            worst = std::max(worst, std::abs(defect) / scale);
        }
        std::ostringstream note;
        note << p.name << " worst defect " << worst;
        out.note(note.str());
        out.require(worst <= 1e-6, p.name + " manufactured-source defect above 1e-6");
    }
    const double elapsed = seconds_since(t0);
    out.require(elapsed < 5.0, "runtime over 5 s");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int number;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "linear-reaction equivalence of the two methods", criterion1},
        {2, "test2 iteration counts: methods identical, reference row banded", criterion2},
        {3, "test4 iteration ordering and reference-row bands", criterion3},
        {4, "test1/test3 reference-row bands and the coarse-mesh stall", criterion4},
        {5, "Mesh-convergence slopes and method agreement", criterion5},
        {6, "Adomian polynomial oracle suite", criterion6},
        {7, "Exact-arithmetic 1D example", criterion7},
        {8, "Trivial-solution regression", criterion8},
        {9, "Manufactured-source self-check", criterion9},
    };

    int selected = 0;
    if (argc > 1) selected = std::atoi(argv[1]);

    int failures = 0;
    for (const Criterion& c : criteria) {
        if (selected != 0 && c.number != selected) continue;
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.note(std::string("exception: ") + e.what());
        }
        std::printf("%s criterion %d: %s — %s\n", out.pass ? "PASS" : "FAIL", c.number, c.name,
                    out.detail.str().c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures;
}
