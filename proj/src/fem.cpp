#include "vadm/fem.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vadm {

NodalField embed_field(const DofMap& dof, const Eigen::VectorXd& free_values,
                       const Eigen::VectorXd& dirichlet_full) {
    if (free_values.size() != dof.n_free())
        throw std::invalid_argument("embed_field: free vector has wrong length");
    NodalField field;
    field.values = dirichlet_full.size() == dof.n_nodes ? dirichlet_full
                                                        : Eigen::VectorXd::Zero(dof.n_nodes);
    for (int k = 0; k < dof.n_free(); ++k) field.values(dof.free_nodes[k]) = free_values(k);
    return field;
}

Eigen::VectorXd restrict_to_free(const DofMap& dof, const NodalField& field) {
    Eigen::VectorXd v(dof.n_free());
    for (int k = 0; k < dof.n_free(); ++k) v(k) = field.values(dof.free_nodes[k]);
    return v;
}

std::array<std::array<double, 3>, 3> local_stiffness(const Node& p0, const Node& p1,
                                                     const Node& p2) {
    const double det = (p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y);
    if (!(det > 0.0)) throw std::runtime_error("local_stiffness: degenerate or inverted triangle");
    const double area = 0.5 * det;
    // Barycentric gradients: grad phi_i = (b_i, c_i).
    const double b[3] = {(p1.y - p2.y) / det, (p2.y - p0.y) / det, (p0.y - p1.y) / det};
    const double c[3] = {(p2.x - p1.x) / det, (p0.x - p2.x) / det, (p1.x - p0.x) / det};

    std::array<std::array<double, 3>, 3> K;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) K[i][j] = area * (b[i] * b[j] + c[i] * c[j]);
    return K;
}

StiffnessParts assemble_stiffness(const TriMesh& mesh, const DofMap& dof) {
    std::vector<int> dirichlet_index(mesh.n_nodes(), -1);
    for (int k = 0; k < static_cast<int>(dof.dirichlet_nodes.size()); ++k)
        dirichlet_index[dof.dirichlet_nodes[k]] = k;

    std::vector<Eigen::Triplet<double>> a_entries, d_entries;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        std::array<std::array<double, 3>, 3> K;
        try {
            K = local_stiffness(mesh.nodes[tri[0]], mesh.nodes[tri[1]], mesh.nodes[tri[2]]);
        } catch (const std::runtime_error&) {
            std::ostringstream msg;
            msg << "assemble_stiffness: degenerate triangle " << t;
            throw std::runtime_error(msg.str());
        }
        for (int i = 0; i < 3; ++i) {
            const int row = dof.free_index[tri[i]];
            if (row < 0) continue;
            for (int j = 0; j < 3; ++j) {
                if (dof.is_free(tri[j]))
                    a_entries.emplace_back(row, dof.free_index[tri[j]], K[i][j]);
                else
                    d_entries.emplace_back(row, dirichlet_index[tri[j]], K[i][j]);
            }
        }
    }

    StiffnessParts parts;
    parts.A.resize(dof.n_free(), dof.n_free());
    parts.A.setFromTriplets(a_entries.begin(), a_entries.end());
    parts.D.resize(dof.n_free(), static_cast<int>(dof.dirichlet_nodes.size()));
    parts.D.setFromTriplets(d_entries.begin(), d_entries.end());
    return parts;
}

namespace {

struct QuadPoint {
    double x, y;    // physical position
    double weight;  // area-scaled weight
};

QuadPoint physical_point(const TriMesh& mesh, int t, const Quadrature& quad, int q, double area) {
    const auto& tri = mesh.triangles[t];
    const auto& bc = quad.points[q];
    const Node& p0 = mesh.nodes[tri[0]];
    const Node& p1 = mesh.nodes[tri[1]];
    const Node& p2 = mesh.nodes[tri[2]];
    return {bc[0] * p0.x + bc[1] * p1.x + bc[2] * p2.x,
            bc[0] * p0.y + bc[1] * p1.y + bc[2] * p2.y, area * quad.weights[q]};
}

}  // namespace

Eigen::VectorXd assemble_load(const TriMesh& mesh, const DofMap& dof, const ScalarFn& f,
                              const Quadrature& quad) {
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(dof.n_free());
    if (!f) return beta;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const double area = mesh.triangle_area(t);
        const auto& tri = mesh.triangles[t];
        for (int q = 0; q < quad.size(); ++q) {
            const QuadPoint p = physical_point(mesh, t, quad, q, area);
            const double fv = f(p.x, p.y);
            if (!std::isfinite(fv)) {
                std::ostringstream msg;
                msg << "assemble_load: source is not finite at (" << p.x << ", " << p.y << ")";
                throw std::runtime_error(msg.str());
            }
            for (int i = 0; i < 3; ++i) {
                const int row = dof.free_index[tri[i]];
                if (row >= 0) beta(row) += p.weight * fv * quad.points[q][i];
            }
        }
    }
    return beta;
}

Eigen::VectorXd assemble_neumann(const TriMesh& mesh, const DofMap& dof, const BoundarySpec& bc,
                                 const EdgeQuadrature& equad) {
    Eigen::VectorXd gamma = Eigen::VectorXd::Zero(dof.n_free());
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (bc.side(e.side) != BcType::Neumann) continue;
        const Node& pa = mesh.nodes[e.a];
        const Node& pb = mesh.nodes[e.b];
        const double length = std::hypot(pb.x - pa.x, pb.y - pa.y);
        for (int q = 0; q < equad.size(); ++q) {
            const double s = equad.points[q];
            const double x = pa.x + s * (pb.x - pa.x);
            const double y = pa.y + s * (pb.y - pa.y);
            const double gv = bc.g_n(x, y);
            if (!std::isfinite(gv))
                throw std::runtime_error("assemble_neumann: boundary data is not finite");
            const double w = length * equad.weights[q] * gv;
            if (dof.is_free(e.a)) gamma(dof.free_index[e.a]) += w * (1.0 - s);
            if (dof.is_free(e.b)) gamma(dof.free_index[e.b]) += w * s;
        }
    }
    return gamma;
}

Eigen::VectorXd assemble_reaction(const TriMesh& mesh, const DofMap& dof, const Reaction& r,
                                  const NodalField& field, const Quadrature& quad) {
    if (field.values.size() != mesh.n_nodes())
        throw std::invalid_argument("assemble_reaction: field must cover every node");
    Eigen::VectorXd b = Eigen::VectorXd::Zero(dof.n_free());
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const double area = mesh.triangle_area(t);
        const auto& tri = mesh.triangles[t];
        const double v0 = field.values(tri[0]);
        const double v1 = field.values(tri[1]);
        const double v2 = field.values(tri[2]);
        for (int q = 0; q < quad.size(); ++q) {
            const auto& bary = quad.points[q];
            const double u = bary[0] * v0 + bary[1] * v1 + bary[2] * v2;
            const double rv = r(u);
            if (!std::isfinite(rv)) {
                std::ostringstream msg;
                msg << "assemble_reaction: reaction is not finite on element " << t;
                throw std::runtime_error(msg.str());
            }
            const double w = area * quad.weights[q] * rv;
            for (int i = 0; i < 3; ++i) {
                const int row = dof.free_index[tri[i]];
                if (row >= 0) b(row) += w * bary[i];
            }
        }
    }
    return b;
}

Eigen::VectorXd assemble_from_point_values(const TriMesh& mesh, const DofMap& dof,
                                           const std::vector<double>& point_values,
                                           const Quadrature& quad) {
    if (static_cast<int>(point_values.size()) != mesh.n_triangles() * quad.size())
        throw std::invalid_argument("assemble_from_point_values: wrong number of samples");
    Eigen::VectorXd b = Eigen::VectorXd::Zero(dof.n_free());
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const double area = mesh.triangle_area(t);
        const auto& tri = mesh.triangles[t];
        for (int q = 0; q < quad.size(); ++q) {
            const double w = area * quad.weights[q] * point_values[t * quad.size() + q];
            for (int i = 0; i < 3; ++i) {
                const int row = dof.free_index[tri[i]];
                if (row >= 0) b(row) += w * quad.points[q][i];
            }
        }
    }
    return b;
}

double l2_norm_of_point_values(const TriMesh& mesh, const std::vector<double>& point_values,
                               const Quadrature& quad) {
    double acc = 0.0;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const double area = mesh.triangle_area(t);
        for (int q = 0; q < quad.size(); ++q) {
            const double v = point_values[t * quad.size() + q];
            acc += area * quad.weights[q] * v * v;
        }
    }
    return std::sqrt(acc);
}

DiscreteSystem assemble_system(std::shared_ptr<const TriMesh> mesh, const BoundarySpec& bc,
                               const ScalarFn& source) {
    DiscreteSystem sys;
    sys.mesh = std::move(mesh);
    sys.dof = build_dof_map(*sys.mesh, bc);
    sys.quad = Quadrature::triangle_degree5();
    sys.edge_quad = EdgeQuadrature::gauss3();

    StiffnessParts parts = assemble_stiffness(*sys.mesh, sys.dof);
    sys.A = std::move(parts.A);
    sys.beta = assemble_load(*sys.mesh, sys.dof, source, sys.quad);
    sys.gamma = assemble_neumann(*sys.mesh, sys.dof, bc, sys.edge_quad);

    // Dirichlet data enters by nodal interpolation.
    sys.alpha_D = Eigen::VectorXd::Zero(sys.dof.n_nodes);
    Eigen::VectorXd alpha_d_compact(static_cast<int>(sys.dof.dirichlet_nodes.size()));
    for (int k = 0; k < static_cast<int>(sys.dof.dirichlet_nodes.size()); ++k) {
        const Node& p = sys.mesh->nodes[sys.dof.dirichlet_nodes[k]];
        const double v = bc.psi_d(p.x, p.y);
        if (!std::isfinite(v))
            throw std::runtime_error("assemble_system: Dirichlet data is not finite");
        sys.alpha_D(sys.dof.dirichlet_nodes[k]) = v;
        alpha_d_compact(k) = v;
    }
    sys.lift = parts.D * alpha_d_compact;
    return sys;
}

Eigen::VectorXd residual(const DiscreteSystem& sys, const Reaction& r,
                         const Eigen::VectorXd& alpha) {
    if (alpha.size() != sys.n_free())
        throw std::invalid_argument("residual: coefficient vector has wrong length");
    const NodalField field = sys.full_field(alpha);
    const Eigen::VectorXd B = assemble_reaction(*sys.mesh, sys.dof, r, field, sys.quad);
    return sys.A * alpha + B - sys.beta - sys.gamma + sys.lift;
}

double l2_error(const TriMesh& mesh, const NodalField& field, const ScalarFn& exact,
                const Quadrature& quad) {
    double acc = 0.0;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const double area = mesh.triangle_area(t);
        const auto& tri = mesh.triangles[t];
        for (int q = 0; q < quad.size(); ++q) {
            const QuadPoint p = physical_point(mesh, t, quad, q, area);
            const auto& bary = quad.points[q];
            const double uh = bary[0] * field.values(tri[0]) + bary[1] * field.values(tri[1]) +
                              bary[2] * field.values(tri[2]);
            const double diff = uh - exact(p.x, p.y);
            acc += p.weight * diff * diff;
        }
    }
    return std::sqrt(acc);
}

double h1_seminorm(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& v) {
    return std::sqrt(v.dot(A * v));
}

}  // namespace vadm
