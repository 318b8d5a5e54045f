#include "vadm/quadrature.hpp"

#include <cmath>

namespace vadm {

Quadrature Quadrature::triangle_degree5() {
    // Radon/Hammer 7-point rule: centroid plus two symmetric orbits.
    const double s = std::sqrt(15.0);
    const double a1 = (6.0 - s) / 21.0, w1 = (155.0 - s) / 1200.0;
    const double a2 = (6.0 + s) / 21.0, w2 = (155.0 + s) / 1200.0;

    Quadrature q;
    q.degree = 5;
    q.points = {
        {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
        {a1, a1, 1.0 - 2.0 * a1},
        {a1, 1.0 - 2.0 * a1, a1},
        {1.0 - 2.0 * a1, a1, a1},
        {a2, a2, 1.0 - 2.0 * a2},
        {a2, 1.0 - 2.0 * a2, a2},
        {1.0 - 2.0 * a2, a2, a2},
    };
    q.weights = {9.0 / 40.0, w1, w1, w1, w2, w2, w2};
    return q;
}

EdgeQuadrature EdgeQuadrature::gauss3() {
    const double r = std::sqrt(0.6);
    EdgeQuadrature q;
    q.points = {0.5 * (1.0 - r), 0.5, 0.5 * (1.0 + r)};
    q.weights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
    return q;
}

}  // namespace vadm
