#pragma once

#include <array>
#include <vector>

namespace vadm {

/// Symmetric quadrature rule on the reference triangle in barycentric
/// coordinates. Weights are relative to the triangle area (they sum to 1).
struct Quadrature {
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;
    int degree = 0;

    int size() const { return static_cast<int>(points.size()); }

    /// 7-point rule, exact for polynomials of degree <= 5.
    static Quadrature triangle_degree5();
};

/// Gauss rule on the unit interval for boundary-edge integrals.
/// Weights sum to 1 (relative to edge length).
struct EdgeQuadrature {
    std::vector<double> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }

    /// 3-point Gauss-Legendre, exact for degree <= 5.
    static EdgeQuadrature gauss3();
};

}  // namespace vadm
