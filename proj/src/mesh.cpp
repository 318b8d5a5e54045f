#include "vadm/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace vadm {

const char* side_name(Side s) {
    switch (s) {
        case Side::Left: return "L";
        case Side::Right: return "R";
        case Side::Bottom: return "B";
        case Side::Top: return "T";
    }
    return "?";
}

double TriMesh::triangle_area(int t) const {
    const auto& tri = triangles[t];
    const Node& p0 = nodes[tri[0]];
    const Node& p1 = nodes[tri[1]];
    const Node& p2 = nodes[tri[2]];
    return 0.5 * ((p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y));
}

double TriMesh::mesh_parameter() const {
    double max_area = 0.0;
    for (int t = 0; t < n_triangles(); ++t)
        max_area = std::max(max_area, triangle_area(t));
    return std::sqrt(max_area);
}

TriMesh build_unit_square_mesh(int n_per_side) {
    if (n_per_side < 1)
        throw std::invalid_argument("build_unit_square_mesh: n_per_side must be >= 1");

    const int n = n_per_side;
    TriMesh mesh;
    mesh.n_per_side = n;
    mesh.nodes.reserve((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            mesh.nodes.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});

    auto id = [n](int i, int j) { return j * (n + 1) + i; };

    // Every cell splits along the same bottom-left to top-right diagonal.
    mesh.triangles.reserve(2 * n * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const int p00 = id(i, j), p10 = id(i + 1, j);
            const int p01 = id(i, j + 1), p11 = id(i + 1, j + 1);
            mesh.triangles.push_back({p00, p10, p11});
            mesh.triangles.push_back({p00, p11, p01});
        }

    mesh.boundary_edges.reserve(4 * n);
    for (int i = 0; i < n; ++i) {
        mesh.boundary_edges.push_back({id(i, 0), id(i + 1, 0), Side::Bottom});
        mesh.boundary_edges.push_back({id(i + 1, n), id(i, n), Side::Top});
        mesh.boundary_edges.push_back({id(0, i + 1), id(0, i), Side::Left});
        mesh.boundary_edges.push_back({id(n, i), id(n, i + 1), Side::Right});
    }
    return mesh;
}

void dump_mesh(const TriMesh& mesh, std::ostream& os) {
    for (const Node& p : mesh.nodes) os << p.x << " " << p.y << "\n";
    for (const auto& t : mesh.triangles) os << t[0] << " " << t[1] << " " << t[2] << "\n";
}

bool BoundarySpec::has_dirichlet_side() const {
    return std::any_of(sides.begin(), sides.end(),
                       [](BcType t) { return t == BcType::Dirichlet; });
}

bool BoundarySpec::has_neumann_side() const {
    return std::any_of(sides.begin(), sides.end(),
                       [](BcType t) { return t == BcType::Neumann; });
}

BoundarySpec BoundarySpec::all_dirichlet(ScalarFn psi_d) {
    BoundarySpec bc;
    bc.dirichlet_value = std::move(psi_d);
    return bc;
}

DofMap build_dof_map(const TriMesh& mesh, const BoundarySpec& bc) {
    if (!bc.has_dirichlet_side())
        throw std::invalid_argument("build_dof_map: at least one side must be Dirichlet");

    std::vector<bool> pinned(mesh.n_nodes(), false);
    for (const BoundaryEdge& e : mesh.boundary_edges) {
        if (bc.side(e.side) == BcType::Dirichlet) {
            pinned[e.a] = true;
            pinned[e.b] = true;
        }
    }

    DofMap dof;
    dof.n_nodes = mesh.n_nodes();
    dof.free_index.assign(mesh.n_nodes(), -1);
    for (int v = 0; v < mesh.n_nodes(); ++v) {
        if (pinned[v]) {
            dof.dirichlet_nodes.push_back(v);
        } else {
            dof.free_index[v] = static_cast<int>(dof.free_nodes.size());
            dof.free_nodes.push_back(v);
        }
    }
    return dof;
}

}  // namespace vadm
