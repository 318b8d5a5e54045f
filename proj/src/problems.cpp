#include "vadm/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace vadm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// --- Test 1 pieces: psi = A(x,y) B(s), s = x - y --------------------------
//
//   A = 10 (x - x^2)(y - y^2),  B = atan(100 s^6)
//   dB/ds = g(s) = 600 s^5 / (1 + 1e4 s^12)
//   Laplacian(psi) = B lap(A) + 2 grad(A).grad(B) + A * 2 g'(s)
//   with grad(B) = (g, -g).

double t1_g(double s) {
    const double s5 = s * s * s * s * s;
    const double s12 = s5 * s5 * s * s;
    return 600.0 * s5 / (1.0 + 1e4 * s12);
}

double t1_gprime(double s) {
    const double s4 = s * s * s * s;
    const double s12 = s4 * s4 * s4;
    const double s16 = s12 * s4;
    const double den = 1.0 + 1e4 * s12;
    return (3000.0 * s4 - 4.2e7 * s16) / (den * den);
}

double t1_exact(double x, double y) {
    const double s = x - y;
    const double s6 = s * s * s * s * s * s;
    return 10.0 * (x - x * x) * (y - y * y) * std::atan(100.0 * s6);
}

double t1_laplacian(double x, double y) {
    const double s = x - y;
    const double s6 = s * s * s * s * s * s;
    const double A = 10.0 * (x - x * x) * (y - y * y);
    const double B = std::atan(100.0 * s6);
    const double lapA = -20.0 * ((x - x * x) + (y - y * y));
    const double Ax = 10.0 * (1.0 - 2.0 * x) * (y - y * y);
    const double Ay = 10.0 * (x - x * x) * (1.0 - 2.0 * y);
    const double g = t1_g(s);
    return B * lapA + 2.0 * g * (Ax - Ay) + A * 2.0 * t1_gprime(s);
}

// --- Test 3 pieces: psi = w(x) w(y) ---------------------------------------

double t3_w(double s) {
    return 1.0 + std::exp(-20.0) - std::exp(-20.0 * s) - std::exp(20.0 * (s - 1.0));
}

double t3_wpp(double s) {
    return -400.0 * (std::exp(-20.0 * s) + std::exp(20.0 * (s - 1.0)));
}

double t3_exact(double x, double y) { return t3_w(x) * t3_w(y); }

double t3_laplacian(double x, double y) {
    return t3_wpp(x) * t3_w(y) + t3_w(x) * t3_wpp(y);
}

// --- Test 4 pieces: the one-dimensional Bratu profile ----------------------

double t4_exact_x(double x, double theta) {
    const double a = 0.25 * theta;
    return -2.0 * (std::log(std::cosh(a * (2.0 * x - 1.0))) - std::log(std::cosh(a)));
}

double t4_laplacian_x(double x, double theta) {
    const double a = 0.25 * theta;
    const double sech = 1.0 / std::cosh(a * (2.0 * x - 1.0));
    return -8.0 * a * a * sech * sech;
}

}  // namespace

double bratu_theta() {
    // theta - 2 cosh(theta / 4) = 0, lower branch. Plain Newton from 2.0
    // is safe here; the damping loop guards against overshoot anyway.
    double theta = 2.0;
    for (int it = 0; it < 100; ++it) {
        const double f = theta - 2.0 * std::cosh(0.25 * theta);
        if (std::abs(f) <= 1e-14) return theta;
        const double fp = 1.0 - 0.5 * std::sinh(0.25 * theta);
        if (fp == 0.0) break;
        double step = f / fp;
        double next = theta - step;
        int halvings = 0;
        while (std::abs(next - 2.0 * std::cosh(0.25 * next)) > std::abs(f) && halvings < 60) {
            step *= 0.5;
            next = theta - step;
            ++halvings;
        }
        theta = next;
    }
    if (std::abs(theta - 2.0 * std::cosh(0.25 * theta)) > 1e-12)
        throw std::runtime_error("bratu_theta: Newton iteration failed");
    return theta;
}

Problem test1() {
    Problem p;
    p.name = "test1";
    p.bc = BoundarySpec::all_dirichlet();
    const auto u = Reaction::variable();
    p.reaction = -sin(u);
    p.exact = t1_exact;
    p.exact_laplacian = t1_laplacian;
    p.source = [](double x, double y) {
        return -t1_laplacian(x, y) - std::sin(t1_exact(x, y));
    };
    p.notes = "sine-Gordon type, manufactured source";
    return p;
}

Problem test2() {
    Problem p;
    p.name = "test2";
    p.bc.sides = {BcType::Dirichlet, BcType::Neumann, BcType::Dirichlet, BcType::Dirichlet};
    p.bc.dirichlet_value = [](double, double y) { return std::sin(2.0 * kPi * y); };
    p.bc.neumann_value = [](double, double) { return 0.0; };
    const auto u = Reaction::variable();
    p.reaction = -u;
    p.exact = [](double x, double y) { return std::cos(2.0 * kPi * x) * std::sin(2.0 * kPi * y); };
    p.exact_laplacian = [](double x, double y) {
        return -8.0 * kPi * kPi * std::cos(2.0 * kPi * x) * std::sin(2.0 * kPi * y);
    };
    p.source = [](double x, double y) {
        return (8.0 * kPi * kPi - 1.0) * std::cos(2.0 * kPi * x) * std::sin(2.0 * kPi * y);
    };
    p.notes = "Helmholtz type, linear reaction";
    return p;
}

Problem test3() {
    Problem p;
    p.name = "test3";
    p.bc = BoundarySpec::all_dirichlet();
    const auto u = Reaction::variable();
    p.reaction = u - pow(u, 3);
    p.exact = t3_exact;
    p.exact_laplacian = t3_laplacian;
    p.source = [](double x, double y) {
        const double v = t3_exact(x, y);
        return -t3_laplacian(x, y) + v - v * v * v;
    };
    p.notes = "Ginzburg-Landau type, boundary layers of width 0.05";
    return p;
}

Problem test4() {
    Problem p;
    p.name = "test4";
    p.bc.sides = {BcType::Dirichlet, BcType::Dirichlet, BcType::Neumann, BcType::Neumann};
    p.bc.neumann_value = [](double, double) { return 0.0; };
    const auto u = Reaction::variable();
    p.reaction = -2.0 * exp(u);
    const double theta = bratu_theta();
    p.exact = [theta](double x, double) { return t4_exact_x(x, theta); };
    p.exact_laplacian = [theta](double x, double) { return t4_laplacian_x(x, theta); };
    // -psi'' - 2 exp(psi) cancels identically for this profile: with
    // a = theta/4 and theta = 2 cosh(a), both terms equal
    // (theta^2 / 2) sech^2(a (2x - 1)) up to sign.
    p.source = [](double, double) { return 0.0; };
    p.notes = "Bratu, zero source; the zeroth mode is trivial";
    return p;
}

Problem remark_case() {
    Problem p;
    p.name = "remark";
    p.bc = BoundarySpec::all_dirichlet();
    const auto u = Reaction::variable();
    p.reaction = pow(u, 3) - u;
    p.source = [](double, double) { return 0.0; };
    p.notes = "trivial-solution regression; a nontrivial solution exists but the "
              "decomposition converges to zero";
    return p;
}

Problem problem_by_name(const std::string& name) {
    if (name == "test1") return test1();
    if (name == "test2") return test2();
    if (name == "test3") return test3();
    if (name == "test4") return test4();
    if (name == "remark") return remark_case();
    throw std::invalid_argument("unknown problem name: " + name);
}

}  // namespace vadm
