#pragma once

#include <vector>

namespace vadm {

/// Truncated power series in a formal parameter: coefficients c_0..c_K of
/// degree K. Arithmetic and elementary functions propagate coefficients
/// exactly through order K, so coefficient k of f(series) is the k-th
/// scaled derivative of the composition.
class Jet {
public:
    Jet() : c_(1, 0.0) {}
    explicit Jet(int order) : c_(order + 1, 0.0) {}
    explicit Jet(std::vector<double> coefficients);

    static Jet constant(double value, int order);
    /// Seed for derivative extraction: (u, 1, 0, ..., 0).
    static Jet variable(double value, int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    double operator[](int k) const { return c_[k]; }
    double& operator[](int k) { return c_[k]; }
    const std::vector<double>& coefficients() const { return c_; }

    bool finite() const;

    Jet operator-() const;
    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);

    friend Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
    friend Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }
    friend Jet operator*(const Jet& lhs, const Jet& rhs);

    friend Jet operator*(double s, Jet j);
    friend Jet operator*(Jet j, double s) { return s * std::move(j); }
    friend Jet operator+(Jet j, double s);
    friend Jet operator+(double s, Jet j) { return std::move(j) + s; }
    friend Jet operator-(Jet j, double s) { return std::move(j) + (-s); }
    friend Jet operator-(double s, const Jet& j) { return -j + s; }

private:
    std::vector<double> c_;
};

Jet exp(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet atan(const Jet& a);
Jet pow(const Jet& a, int n);

/// Integer power by binary exponentiation; shared with the jet code path
/// so order-0 jet evaluation reproduces plain evaluation bit for bit.
double ipow(double base, int n);

}  // namespace vadm
