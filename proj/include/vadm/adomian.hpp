#pragma once

#include <span>
#include <vector>

#include "vadm/fem.hpp"
#include "vadm/reaction.hpp"

namespace vadm {

/// The decomposition modes psi_0, psi_1, ... as full nodal fields.
/// Append-only; modes with index >= 1 vanish at Dirichlet nodes.
class ModeSeries {
public:
    void append(NodalField mode) { modes_.push_back(std::move(mode)); }

    int count() const { return static_cast<int>(modes_.size()); }
    const NodalField& mode(int zeta) const { return modes_[zeta]; }

    /// psi_hat_M = sum of modes 0..M.
    NodalField partial_sum(int M) const;

private:
    std::vector<NodalField> modes_;
};

/// Adomian polynomial value P_zeta at one point: the coefficient of
/// lambda^zeta in r(psi_0 + lambda psi_1 + ... + lambda^zeta psi_zeta),
/// computed by truncated power-series arithmetic. point_modes supplies
/// psi_0..psi_zeta at the point; the result depends on nothing else.
double adomian_coefficient(const Reaction& r, std::span<const double> point_modes);

/// P_zeta sampled at every quadrature point of the mesh (triangle-major
/// layout) from the P1-interpolated mode fields. The samples feed
/// assemble_from_point_values to build F_zeta.
std::vector<double> adomian_field(const Reaction& r, const ModeSeries& series, int zeta,
                                  const TriMesh& mesh, const Quadrature& quad);

}  // namespace vadm
