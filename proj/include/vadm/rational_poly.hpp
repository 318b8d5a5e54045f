#pragma once

#include <gmpxx.h>

#include <vector>

namespace vadm {

using Rational = mpq_class;

/// Univariate polynomial with exact rational coefficients, ascending
/// degree. All arithmetic is exact; there is no floating point anywhere
/// in this type.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coefficients);

    static RationalPoly constant(Rational c);
    static RationalPoly monomial(int k, Rational coefficient = 1);

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of x^k (zero beyond the degree).
    Rational coeff(int k) const;

    bool is_zero() const { return c_.empty(); }

    RationalPoly operator+(const RationalPoly& rhs) const;
    RationalPoly operator-(const RationalPoly& rhs) const;
    RationalPoly operator*(const RationalPoly& rhs) const;
    bool operator==(const RationalPoly& rhs) const { return c_ == rhs.c_; }

    /// Antiderivative vanishing at 0: x^k -> x^{k+1} / (k+1).
    RationalPoly integral_from_zero() const;

    Rational operator()(const Rational& x) const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace vadm
