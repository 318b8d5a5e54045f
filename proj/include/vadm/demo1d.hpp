#pragma once

#include <iosfwd>
#include <vector>

#include "vadm/rational_poly.hpp"

namespace vadm {

/// Exact-arithmetic study of psi' = psi^2, psi(0) = 1 (exact solution
/// 1 / (1 - x)): the decomposition modes and Picard iterates as rational
/// polynomials, computed coefficient-exactly.

/// Decomposition modes psi_0..psi_M. Mode 0 is the constant 1; mode zeta
/// integrates the Adomian polynomial P_{zeta-1} of r = psi^2 from 0.
/// Each mode comes out as exactly the monomial x^zeta.
std::vector<RationalPoly> adm_modes_1d(int M);

/// Picard iterates 0..M of psi_M = 1 + integral_0^x psi_{M-1}^2, seeded
/// so that iterate 0 is the constant 1 (matching the zeroth mode).
/// Iterate M has degree exactly 2^M - 1.
std::vector<RationalPoly> picard_iterates_1d(int M);

struct ConvergenceEstimate1d {
    double alpha = 0.0;        // fitted order, -> 1
    double rate = 0.0;         // terminal error ratio, -> |x|
    std::vector<double> ratios;  // e_{M+1} / e_M for M = 0..M_max-1
};

/// Empirical convergence order of the partial sums at a point x in (0,1)
/// from the exact errors e_M = |psi_hat_M(x) - 1/(1-x)|.
ConvergenceEstimate1d convergence_order_1d(double x, int M_max);

/// Error ratios e_{M+1} / e_M^alpha; diverges for alpha > 1.
std::vector<double> convergence_ratios_1d(double x, int M_max, double alpha);

/// Mode table plus the (M, error-ratio) sequence as CSV.
void write_demo1d_csv(std::ostream& os, double x, int M_max);

}  // namespace vadm
