#include "vadm/jet.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace vadm {

namespace {

void check_same_order(const Jet& a, const Jet& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("jet arithmetic requires equal truncation orders");
}

}  // namespace

Jet::Jet(std::vector<double> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw std::invalid_argument("jet needs at least the order-0 coefficient");
}

Jet Jet::constant(double value, int order) {
    Jet j(order);
    j.c_[0] = value;
    return j;
}

Jet Jet::variable(double value, int order) {
    Jet j(order);
    j.c_[0] = value;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
}

bool Jet::finite() const {
    for (double v : c_)
        if (!std::isfinite(v)) return false;
    return true;
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (double& v : r.c_) v = -v;
    return r;
}

Jet& Jet::operator+=(const Jet& rhs) {
    check_same_order(*this, rhs);
    for (int k = 0; k <= order(); ++k) c_[k] += rhs.c_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
    check_same_order(*this, rhs);
    for (int k = 0; k <= order(); ++k) c_[k] -= rhs.c_[k];
    return *this;
}

Jet operator*(const Jet& lhs, const Jet& rhs) {
    check_same_order(lhs, rhs);
    const int K = lhs.order();
    Jet r(K);
    for (int k = 0; k <= K; ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += lhs.c_[j] * rhs.c_[k - j];
        r.c_[k] = s;
    }
    return r;
}

Jet operator*(double s, Jet j) {
    for (double& v : j.c_) v *= s;
    return j;
}

Jet operator+(Jet j, double s) {
    j.c_[0] += s;
    return j;
}

Jet exp(const Jet& a) {
    const int K = a.order();
    Jet y(K);
    y[0] = std::exp(a[0]);
    for (int k = 1; k <= K; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += j * a[j] * y[k - j];
        y[k] = s / k;
    }
    return y;
}

static void sincos_jet(const Jet& a, Jet& s, Jet& c) {
    const int K = a.order();
    s = Jet(K);
    c = Jet(K);
    s[0] = std::sin(a[0]);
    c[0] = std::cos(a[0]);
    for (int k = 1; k <= K; ++k) {
        double ds = 0.0, dc = 0.0;
        for (int j = 1; j <= k; ++j) {
            ds += j * a[j] * c[k - j];
            dc += j * a[j] * s[k - j];
        }
        s[k] = ds / k;
        c[k] = -dc / k;
    }
}

Jet sin(const Jet& a) {
    Jet s, c;
    sincos_jet(a, s, c);
    return s;
}

Jet cos(const Jet& a) {
    Jet s, c;
    sincos_jet(a, s, c);
    return c;
}

Jet atan(const Jet& a) {
    // y' (1 + a^2) = a': divide the derivative series of a by 1 + a^2,
    // then integrate coefficientwise. 1 + a_0^2 >= 1, so never singular.
    const int K = a.order();
    Jet y(K);
    y[0] = std::atan(a[0]);
    if (K == 0) return y;

    const Jet b = a * a + 1.0;
    std::vector<double> z(K);  // coefficients of a' / b, order K-1
    for (int k = 0; k < K; ++k) {
        double s = (k + 1) * a[k + 1];
        for (int j = 1; j <= k; ++j) s -= b[j] * z[k - j];
        z[k] = s / b[0];
    }
    for (int k = 1; k <= K; ++k) y[k] = z[k - 1] / k;
    return y;
}

double ipow(double base, int n) {
    if (n < 0) throw std::invalid_argument("ipow: negative exponents unsupported");
    double result = 1.0;
    double p = base;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) result = result * p;
        if (e > 1) p = p * p;
    }
    return result;
}

Jet pow(const Jet& a, int n) {
    if (n < 0) throw std::invalid_argument("pow(jet): negative exponents unsupported");
    Jet result = Jet::constant(1.0, a.order());
    Jet p = a;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) result = result * p;
        if (e > 1) p = p * p;
    }
    return result;
}

}  // namespace vadm
