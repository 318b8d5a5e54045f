#include "vadm/rational_poly.hpp"

#include <stdexcept>
#include <utility>

namespace vadm {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    trim();
}

RationalPoly RationalPoly::constant(Rational c) {
    RationalPoly p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

RationalPoly RationalPoly::monomial(int k, Rational coefficient) {
    if (k < 0) throw std::invalid_argument("monomial: negative degree");
    RationalPoly p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = std::move(coefficient);
    p.trim();
    return p;
}

Rational RationalPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return c_[k];
}

RationalPoly RationalPoly::operator+(const RationalPoly& rhs) const {
    RationalPoly r;
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) r.c_[i] += rhs.c_[i];
    r.trim();
    return r;
}

RationalPoly RationalPoly::operator-(const RationalPoly& rhs) const {
    RationalPoly r;
    r.c_.resize(std::max(c_.size(), rhs.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < rhs.c_.size(); ++i) r.c_[i] -= rhs.c_[i];
    r.trim();
    return r;
}

RationalPoly RationalPoly::operator*(const RationalPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return RationalPoly();
    RationalPoly r;
    r.c_.assign(c_.size() + rhs.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j) r.c_[i + j] += c_[i] * rhs.c_[j];
    r.trim();
    return r;
}

RationalPoly RationalPoly::integral_from_zero() const {
    if (is_zero()) return RationalPoly();
    RationalPoly r;
    r.c_.assign(c_.size() + 1, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k)
        r.c_[k + 1] = c_[k] / Rational(static_cast<unsigned long>(k + 1));
    r.trim();
    return r;
}

Rational RationalPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace vadm
