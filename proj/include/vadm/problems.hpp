#pragma once

#include <string>

#include "vadm/mesh.hpp"
#include "vadm/reaction.hpp"

namespace vadm {

/// A benchmark problem: boundary conditions, reaction, source, and
/// (when available) the exact solution it was manufactured from.
/// Immutable value object.
struct Problem {
    std::string name;
    BoundarySpec bc;
    Reaction reaction;
    ScalarFn source;            // f
    ScalarFn exact;             // empty when unknown
    ScalarFn exact_laplacian;   // closed-form Laplacian of exact, for self-checks
    std::string notes;

    bool has_exact() const { return static_cast<bool>(exact); }
};

/// Sine-Gordon type: r = -sin(psi), homogeneous Dirichlet on all sides,
/// exact psi = 10(x - x^2)(y - y^2) atan(100 (x - y)^6).
Problem test1();

/// Helmholtz type: r = -psi, f = (8 pi^2 - 1) cos(2 pi x) sin(2 pi y),
/// Dirichlet data sin(2 pi y) on the left, homogeneous Neumann right,
/// homogeneous Dirichlet bottom/top. Exact psi = cos(2 pi x) sin(2 pi y).
Problem test2();

/// Ginzburg-Landau type: r = psi - psi^3, homogeneous Dirichlet, exact
/// psi = w(x) w(y) with boundary layers of width 0.05.
Problem test3();

/// Bratu: r = -2 exp(psi), homogeneous Dirichlet left/right, homogeneous
/// Neumann bottom/top. The exact profile makes the source vanish
/// identically.
Problem test4();

/// Trivial-solution regression: r = psi^3 - psi, f = 0, psi_D = 0. The
/// decomposition produces the zero field even though a nontrivial
/// solution exists.
Problem remark_case();

/// Lookup by CLI name: "test1".."test4" or "remark".
Problem problem_by_name(const std::string& name);

/// Smaller positive root of theta = 2 cosh(theta / 4) (the stable Bratu
/// branch), found by damped Newton to |residual| <= 1e-14.
double bratu_theta();

}  // namespace vadm
