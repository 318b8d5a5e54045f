#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

namespace vadm {

/// The four sides of the unit square, used to tag boundary edges.
enum class Side : int { Left = 0, Right = 1, Bottom = 2, Top = 3 };

const char* side_name(Side s);

struct Node {
    double x = 0.0;
    double y = 0.0;
};

struct BoundaryEdge {
    int a = -1;  // node indices, oriented along the owning triangle
    int b = -1;
    Side side = Side::Left;
};

/// Structured triangulation of the unit square. Immutable once built;
/// safe to share across concurrent readers.
struct TriMesh {
    std::vector<Node> nodes;
    std::vector<std::array<int, 3>> triangles;  // counterclockwise
    std::vector<BoundaryEdge> boundary_edges;
    int n_per_side = 0;

    int n_nodes() const { return static_cast<int>(nodes.size()); }
    int n_triangles() const { return static_cast<int>(triangles.size()); }

    /// Signed area of triangle t (positive for valid CCW elements).
    double triangle_area(int t) const;

    /// h = max over elements of sqrt(|tau|).
    double mesh_parameter() const;
};

/// n x n grid of square cells, each split along the bottom-left to
/// top-right diagonal. (n+1)^2 nodes, 2n^2 triangles, 4n boundary edges.
TriMesh build_unit_square_mesh(int n_per_side);

/// Plain-text debug dump: one "x y" line per node, then one "i j k"
/// line per triangle (0-based).
void dump_mesh(const TriMesh& mesh, std::ostream& os);

enum class BcType { Dirichlet, Neumann };

using ScalarFn = std::function<double(double, double)>;

/// Per-side boundary condition with Dirichlet data psi_D and Neumann
/// data g_N as scalar functions of (x, y). At least one side must be
/// Dirichlet.
struct BoundarySpec {
    std::array<BcType, 4> sides = {BcType::Dirichlet, BcType::Dirichlet,
                                   BcType::Dirichlet, BcType::Dirichlet};
    ScalarFn dirichlet_value;  // defaults to zero when unset
    ScalarFn neumann_value;    // defaults to zero when unset

    BcType side(Side s) const { return sides[static_cast<int>(s)]; }
    bool has_dirichlet_side() const;
    bool has_neumann_side() const;

    double psi_d(double x, double y) const { return dirichlet_value ? dirichlet_value(x, y) : 0.0; }
    double g_n(double x, double y) const { return neumann_value ? neumann_value(x, y) : 0.0; }

    static BoundarySpec all_dirichlet(ScalarFn psi_d = {});
};

/// Partition of mesh nodes into free degrees of freedom and nodes pinned
/// by Dirichlet edges. Corner nodes shared between a Dirichlet and a
/// Neumann side count as Dirichlet.
struct DofMap {
    int n_nodes = 0;
    std::vector<int> free_nodes;       // ascending node indices
    std::vector<int> dirichlet_nodes;  // ascending node indices
    std::vector<int> free_index;       // node -> position in free_nodes, or -1

    int n_free() const { return static_cast<int>(free_nodes.size()); }
    bool is_free(int node) const { return free_index[node] >= 0; }
    /// Legal but degenerate: every node is pinned.
    bool degenerate() const { return free_nodes.empty(); }
};

DofMap build_dof_map(const TriMesh& mesh, const BoundarySpec& bc);

}  // namespace vadm
