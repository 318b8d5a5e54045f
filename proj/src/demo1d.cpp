#include "vadm/demo1d.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vadm {

namespace {

// Adomian polynomial of r = psi^2 over polynomial modes: the Cauchy
// convolution P_zeta = sum_{i+j = zeta} psi_i psi_j.
RationalPoly square_reaction_polynomial(const std::vector<RationalPoly>& modes, int zeta) {
    RationalPoly p;
    for (int i = 0; i <= zeta; ++i) p = p + modes[i] * modes[zeta - i];
    return p;
}

Rational rational_from_point(double x) {
    if (!(x > 0.0 && x < 1.0))
        throw std::invalid_argument("demo1d: evaluation point must lie in (0, 1)");
    return Rational(x);  // exact binary-to-rational conversion
}

}  // namespace

std::vector<RationalPoly> adm_modes_1d(int M) {
    if (M < 0) throw std::invalid_argument("adm_modes_1d: M must be >= 0");
    std::vector<RationalPoly> modes;
    modes.push_back(RationalPoly::constant(1));
    for (int zeta = 1; zeta <= M; ++zeta)
        modes.push_back(square_reaction_polynomial(modes, zeta - 1).integral_from_zero());
    return modes;
}

std::vector<RationalPoly> picard_iterates_1d(int M) {
    if (M < 0) throw std::invalid_argument("picard_iterates_1d: M must be >= 0");
    std::vector<RationalPoly> iterates;
    iterates.push_back(RationalPoly::constant(1));
    const RationalPoly one = RationalPoly::constant(1);
    for (int m = 1; m <= M; ++m) {
        const RationalPoly& prev = iterates.back();
        iterates.push_back(one + (prev * prev).integral_from_zero());
    }
    return iterates;
}

ConvergenceEstimate1d convergence_order_1d(double x, int M_max) {
    if (M_max < 2) throw std::invalid_argument("convergence_order_1d: needs M_max >= 2");
    const Rational xq = rational_from_point(x);
    const Rational exact = Rational(1) / (Rational(1) - xq);
    const auto modes = adm_modes_1d(M_max + 1);

    std::vector<Rational> errors;
    RationalPoly partial;
    for (int m = 0; m <= M_max + 1; ++m) {
        partial = partial + modes[m];
        Rational e = partial(xq) - exact;
        errors.push_back(abs(e));
    }

    ConvergenceEstimate1d est;
    for (int m = 0; m + 1 < static_cast<int>(errors.size()); ++m)
        est.ratios.push_back(Rational(errors[m + 1] / errors[m]).get_d());
    est.rate = est.ratios.back();
    // Fit e_{M+1} = C e_M^alpha from the last three exact errors.
    const size_t k = errors.size();
    const double e0 = errors[k - 3].get_d();
    const double e1 = errors[k - 2].get_d();
    const double e2 = errors[k - 1].get_d();
    est.alpha = std::log(e2 / e1) / std::log(e1 / e0);
    return est;
}

std::vector<double> convergence_ratios_1d(double x, int M_max, double alpha) {
    const Rational xq = rational_from_point(x);
    const Rational exact = Rational(1) / (Rational(1) - xq);
    const auto modes = adm_modes_1d(M_max + 1);

    std::vector<double> ratios;
    RationalPoly partial;
    double prev_error = 0.0;
    for (int m = 0; m <= M_max + 1; ++m) {
        partial = partial + modes[m];
        const double e = std::abs(Rational(partial(xq) - exact).get_d());
        if (m >= 1) ratios.push_back(e / std::pow(prev_error, alpha));
        prev_error = e;
    }
    return ratios;
}

void write_demo1d_csv(std::ostream& os, double x, int M_max) {
    os << "# psi' = psi^2, psi(0) = 1\n";
    os << "mode,degree,top_coefficient\n";
    const auto modes = adm_modes_1d(std::min(M_max, 12));
    for (size_t z = 0; z < modes.size(); ++z)
        os << z << "," << modes[z].degree() << "," << modes[z].coeff(modes[z].degree()) << "\n";

    const auto est = convergence_order_1d(x, M_max);
    os << "# error ratios of the partial sums at x = " << x << "\n";
    os << "M,error_ratio\n";
    for (size_t m = 0; m < est.ratios.size(); ++m) os << m << "," << est.ratios[m] << "\n";
    os << "# fitted order alpha = " << est.alpha << ", terminal rate = " << est.rate << "\n";
}

}  // namespace vadm
