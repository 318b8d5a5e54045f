#pragma once

#include <Eigen/Sparse>
#include <memory>
#include <vector>

#include "vadm/mesh.hpp"
#include "vadm/quadrature.hpp"
#include "vadm/reaction.hpp"

namespace vadm {

/// A piecewise-linear field given by its values at every mesh node.
struct NodalField {
    Eigen::VectorXd values;

    double operator[](int node) const { return values(node); }
};

/// Scatter a free-node vector and the Dirichlet nodal data into a full field.
NodalField embed_field(const DofMap& dof, const Eigen::VectorXd& free_values,
                       const Eigen::VectorXd& dirichlet_full);

/// Gather the free-node part of a full field.
Eigen::VectorXd restrict_to_free(const DofMap& dof, const NodalField& field);

struct StiffnessParts {
    Eigen::SparseMatrix<double> A;  // free x free
    Eigen::SparseMatrix<double> D;  // free x dirichlet, same integrand as A
};

/// Exact P1 stiffness assembly (piecewise-constant gradients, no
/// quadrature error). Throws on degenerate (non-positive-area) elements.
StiffnessParts assemble_stiffness(const TriMesh& mesh, const DofMap& dof);

/// Local 3x3 stiffness of a single triangle (exposed for tests).
std::array<std::array<double, 3>, 3> local_stiffness(const Node& p0, const Node& p1,
                                                     const Node& p2);

/// beta_z = int f phi_z over free nodes z. Throws if f is non-finite at a
/// quadrature point, reporting the location.
Eigen::VectorXd assemble_load(const TriMesh& mesh, const DofMap& dof, const ScalarFn& f,
                              const Quadrature& quad);

/// gamma_z = int_{Gamma_N} g phi_z dl. Zero when no side is Neumann.
Eigen::VectorXd assemble_neumann(const TriMesh& mesh, const DofMap& dof, const BoundarySpec& bc,
                                 const EdgeQuadrature& equad);

/// B(field)_z = int r(field_h) phi_z with the P1 interpolant evaluated at
/// quadrature points. Throws on non-finite reaction values, reporting the
/// element id.
Eigen::VectorXd assemble_reaction(const TriMesh& mesh, const DofMap& dof, const Reaction& r,
                                  const NodalField& field, const Quadrature& quad);

/// Integrate precomputed quadrature-point values (triangle-major,
/// quadrature-point-minor, as produced by adomian_field) against the free
/// basis functions.
Eigen::VectorXd assemble_from_point_values(const TriMesh& mesh, const DofMap& dof,
                                           const std::vector<double>& point_values,
                                           const Quadrature& quad);

/// L2 norm of a function sampled at quadrature points.
double l2_norm_of_point_values(const TriMesh& mesh, const std::vector<double>& point_values,
                               const Quadrature& quad);

/// The assembled pieces of the discrete problem on the free dofs:
/// stiffness A, load beta, Neumann vector gamma, Dirichlet nodal values
/// alpha_D (over all nodes) and their stiffness coupling lift = D alpha_D.
struct DiscreteSystem {
    std::shared_ptr<const TriMesh> mesh;
    DofMap dof;
    Eigen::SparseMatrix<double> A;
    Eigen::VectorXd beta;
    Eigen::VectorXd gamma;
    Eigen::VectorXd lift;
    Eigen::VectorXd alpha_D;  // full length; zero at free nodes
    Quadrature quad;
    EdgeQuadrature edge_quad;

    int n_free() const { return dof.n_free(); }

    /// Full field for a free-node coefficient vector.
    NodalField full_field(const Eigen::VectorXd& alpha) const {
        return embed_field(dof, alpha, alpha_D);
    }
};

DiscreteSystem assemble_system(std::shared_ptr<const TriMesh> mesh, const BoundarySpec& bc,
                               const ScalarFn& source);

/// Free-node defect of the discrete weak form,
///   R(alpha) = A alpha + B(alpha) - beta - gamma + lift,
/// where the reaction is evaluated at the full field (free part plus
/// Dirichlet data). Vanishes at discrete solutions; its infinity norm is
/// the solvers' stopping quantity.
Eigen::VectorXd residual(const DiscreteSystem& sys, const Reaction& r,
                         const Eigen::VectorXd& alpha);

/// sqrt of int (field_h - exact)^2 by triangle quadrature.
double l2_error(const TriMesh& mesh, const NodalField& field, const ScalarFn& exact,
                const Quadrature& quad);

/// Discrete H1 seminorm sqrt(v^T A v) of a free-node vector.
double h1_seminorm(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& v);

}  // namespace vadm
