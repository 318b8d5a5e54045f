#include <doctest.h>

#include <cmath>
#include <random>

#include "vadm/jet.hpp"
#include "vadm/reaction.hpp"

using namespace vadm;

namespace {

Jet random_jet(std::mt19937& rng, int order) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Jet j(order);
    for (int k = 0; k <= order; ++k) j[k] = dist(rng);
    return j;
}

// Coefficients of the derivative series, one order shorter.
std::vector<double> derivative_coefficients(const Jet& a) {
    std::vector<double> d(a.order());
    for (int k = 0; k < a.order(); ++k) d[k] = (k + 1) * a[k + 1];
    return d;
}

}  // namespace

TEST_SUITE("jet") {

TEST_CASE("order-0 evaluation reproduces plain arithmetic") {
    const auto u = Reaction::variable();
    const Reaction r = 2.0 * exp(u) - sin(u) * cos(u) + pow(u, 3) - atan(u);
    for (double v : {-1.3, -0.2, 0.0, 0.7, 2.5}) {
        const Jet j = r(Jet::constant(v, 0));
        CHECK(j[0] == r(v));
    }
}

TEST_CASE("variable seed extracts scaled derivatives") {
    const int K = 6;
    SUBCASE("exponential") {
        const Jet y = exp(Jet::variable(0.4, K));
        double factorial = 1.0;
        for (int k = 0; k <= K; ++k) {
            if (k > 0) factorial *= k;
            CHECK(y[k] == doctest::Approx(std::exp(0.4) / factorial).epsilon(1e-14));
        }
    }
    SUBCASE("sine derivatives cycle") {
        const double u = 0.9;
        const Jet y = sin(Jet::variable(u, K));
        const double expected[4] = {std::sin(u), std::cos(u), -std::sin(u), -std::cos(u)};
        double factorial = 1.0;
        for (int k = 0; k <= K; ++k) {
            if (k > 0) factorial *= k;
            CHECK(y[k] == doctest::Approx(expected[k % 4] / factorial).epsilon(1e-13));
        }
    }
    SUBCASE("arctangent first derivatives") {
        const double u = 0.6;
        const Jet y = atan(Jet::variable(u, 3));
        const double d1 = 1.0 / (1.0 + u * u);
        const double d2 = -2.0 * u * d1 * d1;
        const double d3 = (6.0 * u * u - 2.0) * d1 * d1 * d1;
        CHECK(y[0] == doctest::Approx(std::atan(u)).epsilon(1e-15));
        CHECK(y[1] == doctest::Approx(d1).epsilon(1e-14));
        CHECK(y[2] == doctest::Approx(d2 / 2.0).epsilon(1e-13));
        CHECK(y[3] == doctest::Approx(d3 / 6.0).epsilon(1e-13));
    }
}

TEST_CASE("multiplication is associative coefficientwise") {
    std::mt19937 rng(81);
    for (int trial = 0; trial < 25; ++trial) {
        const int K = 1 + trial % 7;
        const Jet a = random_jet(rng, K), b = random_jet(rng, K), c = random_jet(rng, K);
        const Jet lhs = (a * b) * c;
        const Jet rhs = a * (b * c);
        for (int k = 0; k <= K; ++k) CHECK(lhs[k] == doctest::Approx(rhs[k]).epsilon(1e-13));
    }
}

TEST_CASE("exp satisfies its differential identity as a series") {
    std::mt19937 rng(7);
    const Jet a = random_jet(rng, 6);
    const Jet y = exp(a);
    const auto yprime = derivative_coefficients(y);
    // y' = a' y, compared coefficient by coefficient.
    const auto aprime = derivative_coefficients(a);
    for (int k = 0; k < 6; ++k) {
        double conv = 0.0;
        for (int j = 0; j <= k; ++j) conv += aprime[j] * y[k - j];
        CHECK(yprime[k] == doctest::Approx(conv).epsilon(1e-13));
    }
}

TEST_CASE("sin and cos jets satisfy sin^2 + cos^2 = 1 through truncation") {
    std::mt19937 rng(23);
    const Jet a = random_jet(rng, 8);
    const Jet s = sin(a), c = cos(a);
    const Jet unit = s * s + c * c;
    CHECK(unit[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (int k = 1; k <= 8; ++k) CHECK(std::abs(unit[k]) <= 1e-13);
}

TEST_CASE("atan jet satisfies y' (1 + a^2) = a'") {
    std::mt19937 rng(5);
    const Jet a = random_jet(rng, 7);
    const Jet y = atan(a);
    const Jet b = a * a + 1.0;
    const auto yprime = derivative_coefficients(y);
    const auto aprime = derivative_coefficients(a);
    for (int k = 0; k < 7; ++k) {
        double conv = 0.0;
        for (int j = 0; j <= k; ++j) conv += yprime[j] * b[k - j];
        CHECK(conv == doctest::Approx(aprime[k]).epsilon(1e-12));
    }
}

TEST_CASE("integer powers match repeated multiplication") {
    std::mt19937 rng(11);
    const Jet a = random_jet(rng, 5);
    Jet expected = Jet::constant(1.0, 5);
    for (int n = 0; n <= 5; ++n) {
        const Jet p = pow(a, n);
        for (int k = 0; k <= 5; ++k) CHECK(p[k] == doctest::Approx(expected[k]).epsilon(1e-13));
        expected = expected * a;
    }
    CHECK(ipow(1.7, 4) == doctest::Approx(std::pow(1.7, 4)).epsilon(1e-15));
    CHECK_THROWS_AS(pow(a, -1), std::invalid_argument);
    CHECK_THROWS_AS(ipow(2.0, -2), std::invalid_argument);
}

TEST_CASE("mismatched truncation orders are rejected") {
    CHECK_THROWS_AS(Jet(2) + Jet(3), std::invalid_argument);
    CHECK_THROWS_AS(Jet(4) * Jet(1), std::invalid_argument);
}

}  // TEST_SUITE

TEST_SUITE("reaction") {

TEST_CASE("expression trees evaluate composites") {
    const auto u = Reaction::variable();
    const Reaction r = u - pow(u, 3);
    CHECK(r(0.0) == 0.0);
    CHECK(r(1.0) == 0.0);
    CHECK(r(0.5) == doctest::Approx(0.375).epsilon(1e-15));
    const Reaction bratu = -2.0 * exp(u);
    CHECK(bratu(0.0) == -2.0);
    CHECK(bratu(1.0) == doctest::Approx(-2.0 * std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("default reaction is identically zero") {
    const Reaction r;
    CHECK(r(3.7) == 0.0);
    CHECK(r(Jet::variable(1.0, 3))[1] == 0.0);
}

TEST_CASE("reactions are shareable immutable values") {
    const auto u = Reaction::variable();
    const Reaction base = sin(u);
    const Reaction shifted = base + 1.0;
    CHECK(base(0.0) == 0.0);  // unchanged by building on top of it
    CHECK(shifted(0.0) == 1.0);
}

}  // TEST_SUITE
