#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vadm/quadrature.hpp"

using namespace vadm;

namespace {

// Exact integral of x^a y^b over the reference triangle {x,y >= 0, x+y <= 1}.
double reference_monomial_integral(int a, int b) {
    // a! b! / (a + b + 2)!
    double num = 1.0, den = 1.0;
    for (int k = 2; k <= a; ++k) num *= k;
    for (int k = 2; k <= b; ++k) num *= k;
    for (int k = 2; k <= a + b + 2; ++k) den *= k;
    return num / den;
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("triangle rule: weights positive and sum to one, points inside") {
    const Quadrature q = Quadrature::triangle_degree5();
    double sum = 0.0;
    for (int i = 0; i < q.size(); ++i) {
        CHECK(q.weights[i] > 0.0);
        sum += q.weights[i];
        double bsum = 0.0;
        for (double b : q.points[i]) {
            CHECK(b > 0.0);
            CHECK(b < 1.0);
            bsum += b;
        }
        CHECK(bsum == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("triangle rule is exact through degree 5") {
    const Quadrature q = Quadrature::triangle_degree5();
    const double area = 0.5;  // reference triangle
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; a + b <= 5; ++b) {
            double acc = 0.0;
            for (int i = 0; i < q.size(); ++i) {
                // Barycentric (l0, l1, l2) on vertices (0,0), (1,0), (0,1).
                const double x = q.points[i][1];
                const double y = q.points[i][2];
                acc += q.weights[i] * std::pow(x, a) * std::pow(y, b);
            }
            const double exact = reference_monomial_integral(a, b);
            CHECK(area * acc == doctest::Approx(exact).epsilon(1e-14));
        }
    }
}

TEST_CASE("edge rule integrates polynomials through degree 5") {
    const EdgeQuadrature q = EdgeQuadrature::gauss3();
    for (int k = 0; k <= 5; ++k) {
        double acc = 0.0;
        for (int i = 0; i < q.size(); ++i) acc += q.weights[i] * std::pow(q.points[i], k);
        CHECK(acc == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
    }
}

TEST_CASE("duffy oracle agrees with closed-form triangle integrals") {
    // Sanity check of the test oracle itself on an offset triangle.
    const Node p0{0.2, 0.1}, p1{0.9, 0.3}, p2{0.4, 0.8};
    const double area =
        0.5 * ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y));
    CHECK(oracles::integrate_triangle(p0, p1, p2, [](double, double) { return 1.0; }) ==
          doctest::Approx(area).epsilon(1e-14));
    // Linear integrand: area times centroid value.
    const double cx = (p0.x + p1.x + p2.x) / 3.0, cy = (p0.y + p1.y + p2.y) / 3.0;
    CHECK(oracles::integrate_triangle(p0, p1, p2, [](double x, double y) { return 3.0 * x - y; }) ==
          doctest::Approx(area * (3.0 * cx - cy)).epsilon(1e-13));
    // Basis-function weighting: int phi_i = area / 3.
    for (int i = 0; i < 3; ++i)
        CHECK(oracles::integrate_against_basis(p0, p1, p2, i,
                                               [](double, double) { return 1.0; }) ==
              doctest::Approx(area / 3.0).epsilon(1e-13));
}

}  // TEST_SUITE
