#include "vadm/adomian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vadm {

NodalField ModeSeries::partial_sum(int M) const {
    if (M < 0 || M >= count())
        throw std::invalid_argument("partial_sum: mode index out of range");
    NodalField sum = modes_[0];
    for (int z = 1; z <= M; ++z) sum.values += modes_[z].values;
    return sum;
}

double adomian_coefficient(const Reaction& r, std::span<const double> point_modes) {
    if (point_modes.empty())
        throw std::invalid_argument("adomian_coefficient: needs at least the zeroth mode");
    const int order = static_cast<int>(point_modes.size()) - 1;
    Jet series(order);
    for (int k = 0; k <= order; ++k) series[k] = point_modes[k];
    const Jet image = r(series);
    const double p = image[order];
    if (!std::isfinite(p))
        throw std::runtime_error("adomian_coefficient: non-finite intermediate value");
    return p;
}

std::vector<double> adomian_field(const Reaction& r, const ModeSeries& series, int zeta,
                                  const TriMesh& mesh, const Quadrature& quad) {
    if (zeta < 0 || zeta >= series.count())
        throw std::invalid_argument("adomian_field: series does not hold mode zeta");

    std::vector<double> values(mesh.n_triangles() * quad.size());
    std::vector<double> point_modes(zeta + 1);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        for (int q = 0; q < quad.size(); ++q) {
            const auto& bary = quad.points[q];
            for (int z = 0; z <= zeta; ++z) {
                const auto& m = series.mode(z).values;
                point_modes[z] = bary[0] * m(tri[0]) + bary[1] * m(tri[1]) + bary[2] * m(tri[2]);
            }
            try {
                values[t * quad.size() + q] = adomian_coefficient(r, point_modes);
            } catch (const std::runtime_error&) {
                std::ostringstream msg;
                msg << "adomian_field: non-finite polynomial value on element " << t;
                throw std::runtime_error(msg.str());
            }
        }
    }
    return values;
}

}  // namespace vadm
