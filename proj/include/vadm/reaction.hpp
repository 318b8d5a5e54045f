#pragma once

#include <memory>

#include "vadm/jet.hpp"

namespace vadm {

namespace detail {
struct ReactionExpr;
}

/// A smooth reaction r(u) as a small expression tree over
/// {constant, u, +, -, *, integer power, exp, sin, cos, atan}.
/// Evaluates either at a plain double or at a truncated power series,
/// which is how Adomian polynomial coefficients are extracted.
///
///   auto u = Reaction::variable();
///   Reaction r = u - pow(u, 3);
///
/// Reactions are immutable values; copies share subtrees.
class Reaction {
public:
    Reaction();  // the zero reaction
    static Reaction variable();
    static Reaction constant(double value);

    double operator()(double u) const;
    Jet operator()(const Jet& u) const;

    friend Reaction operator+(const Reaction& a, const Reaction& b);
    friend Reaction operator-(const Reaction& a, const Reaction& b);
    friend Reaction operator*(const Reaction& a, const Reaction& b);
    friend Reaction operator-(const Reaction& a);

    friend Reaction operator+(double c, const Reaction& r) { return Reaction::constant(c) + r; }
    friend Reaction operator+(const Reaction& r, double c) { return r + Reaction::constant(c); }
    friend Reaction operator-(double c, const Reaction& r) { return Reaction::constant(c) - r; }
    friend Reaction operator-(const Reaction& r, double c) { return r - Reaction::constant(c); }
    friend Reaction operator*(double c, const Reaction& r) { return Reaction::constant(c) * r; }
    friend Reaction operator*(const Reaction& r, double c) { return Reaction::constant(c) * r; }

    friend Reaction pow(const Reaction& a, int n);
    friend Reaction exp(const Reaction& a);
    friend Reaction sin(const Reaction& a);
    friend Reaction cos(const Reaction& a);
    friend Reaction atan(const Reaction& a);

private:
    explicit Reaction(std::shared_ptr<const detail::ReactionExpr> node);
    std::shared_ptr<const detail::ReactionExpr> node_;
};

Reaction operator+(const Reaction& a, const Reaction& b);
Reaction operator-(const Reaction& a, const Reaction& b);
Reaction operator*(const Reaction& a, const Reaction& b);
Reaction operator-(const Reaction& a);
Reaction pow(const Reaction& a, int n);
Reaction exp(const Reaction& a);
Reaction sin(const Reaction& a);
Reaction cos(const Reaction& a);
Reaction atan(const Reaction& a);

}  // namespace vadm
