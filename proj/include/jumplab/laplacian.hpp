#ifndef JUMPLAB_LAPLACIAN_HPP
#define JUMPLAB_LAPLACIAN_HPP

#include <span>

#include "jumplab/errors.hpp"
#include "jumplab/matrix.hpp"
#include "jumplab/multigraph.hpp"

namespace jumplab {

/// Weighted Laplacian of a proper resistive network: conductance 1/mu(e)
/// summed per vertex pair, loops ignored. Throws NonPositiveResistance.
template <typename Scalar>
Matrix<Scalar> laplacian(const MultiGraph& g, std::span<const Scalar> resistance) {
    if (resistance.size() != g.edge_count()) {
        throw IndexOutOfRange("laplacian: one resistance per edge required");
    }
    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    Matrix<Scalar> l = Matrix<Scalar>::Zero(n, n);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (!(resistance[e] > Scalar(0))) {
            throw NonPositiveResistance(g.edge(e).id);
        }
        const Edge& edge = g.edge(e);
        if (edge.is_loop()) {
            continue;
        }
        const Scalar c = Scalar(1) / resistance[e];
        const auto u = static_cast<Eigen::Index>(edge.u);
        const auto v = static_cast<Eigen::Index>(edge.v);
        l(u, u) += c;
        l(v, v) += c;
        l(u, v) -= c;
        l(v, u) -= c;
    }
    return l;
}

} // namespace jumplab

#endif // JUMPLAB_LAPLACIAN_HPP
