#include "jumplab/green.hpp"

#include "jumplab/errors.hpp"
#include "jumplab/laplacian.hpp"

namespace jumplab {

CombinatorialDivisor::CombinatorialDivisor(RatVector weights) : weights_(std::move(weights)), degree_(weights_.sum()) {}

CombinatorialDivisor CombinatorialDivisor::zero(std::size_t vertex_count) {
    return CombinatorialDivisor(RatVector::Zero(static_cast<Eigen::Index>(vertex_count)));
}

CombinatorialDivisor CombinatorialDivisor::point_difference(std::size_t vertex_count, VertexIndex u, VertexIndex v) {
    if (u >= vertex_count || v >= vertex_count) {
        throw UnknownVertex("point_difference: vertex out of range");
    }
    RatVector w = RatVector::Zero(static_cast<Eigen::Index>(vertex_count));
    w(static_cast<Eigen::Index>(u)) += Rational(1);
    w(static_cast<Eigen::Index>(v)) -= Rational(1);
    return CombinatorialDivisor(std::move(w));
}

bool CombinatorialDivisor::is_zero() const {
    for (Eigen::Index i = 0; i < weights_.size(); ++i) {
        if (!weights_(i).is_zero()) {
            return false;
        }
    }
    return true;
}

CombinatorialDivisor CombinatorialDivisor::push_forward(std::span<const VertexIndex> vertex_map,
                                                        std::size_t target_size) const {
    if (vertex_map.size() != size()) {
        throw IndexOutOfRange("push_forward: vertex map does not match divisor size");
    }
    RatVector w = RatVector::Zero(static_cast<Eigen::Index>(target_size));
    for (std::size_t v = 0; v < vertex_map.size(); ++v) {
        w(static_cast<Eigen::Index>(vertex_map[v])) += weights_(static_cast<Eigen::Index>(v));
    }
    return CombinatorialDivisor(std::move(w));
}

CombinatorialDivisor operator+(const CombinatorialDivisor& a, const CombinatorialDivisor& b) {
    if (a.size() != b.size()) {
        throw IndexOutOfRange("divisor sizes differ");
    }
    return CombinatorialDivisor(RatVector(a.weights_ + b.weights_));
}

CombinatorialDivisor operator*(const Rational& s, const CombinatorialDivisor& d) {
    return CombinatorialDivisor(RatVector(d.weights_ * s));
}

bool is_proper(std::span<const Rational> resistance) {
    for (const Rational& r : resistance) {
        if (r.sign() <= 0) {
            return false;
        }
    }
    return true;
}

GreenOperator::GreenOperator(const MultiGraph& g, std::span<const Rational> resistance)
    : vertex_count_(g.vertex_count()) {
    if (resistance.size() != g.edge_count()) {
        throw IndexOutOfRange("green: one resistance per edge required");
    }
    if (!is_connected(g)) {
        throw DisconnectedNetwork();
    }
    std::vector<EdgeIndex> zero_edges;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (resistance[e].sign() < 0) {
            throw NegativeResistance(g.edge(e).id);
        }
        if (resistance[e].is_zero()) {
            zero_edges.push_back(e);
        }
    }
    contraction_ = contract(g, zero_edges);

    ResistanceAssignment surviving(contraction_.quotient.edge_count());
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (const auto q = contraction_.surviving_edges[e]) {
            surviving[*q] = resistance[e];
        }
    }
    const RatMatrix l = laplacian<Rational>(contraction_.quotient, surviving);
    pseudoinverse_ = laplacian_pseudoinverse(l);
}

Rational GreenOperator::operator()(const CombinatorialDivisor& x, const CombinatorialDivisor& y) const {
    if (x.size() != vertex_count_ || y.size() != vertex_count_) {
        throw IndexOutOfRange("green: divisor is not indexed by the vertices of the network");
    }
    const std::size_t m = contraction_.quotient.vertex_count();
    const RatVector xq = x.push_forward(contraction_.vertex_map, m).weights();
    const RatVector yq = y.push_forward(contraction_.vertex_map, m).weights();
    return xq.dot(pseudoinverse_ * yq);
}

RatMatrix GreenOperator::form() const {
    const auto n = static_cast<Eigen::Index>(vertex_count_);
    const auto m = static_cast<Eigen::Index>(contraction_.quotient.vertex_count());
    RatMatrix projection = RatMatrix::Zero(m, n);
    for (Eigen::Index v = 0; v < n; ++v) {
        projection(static_cast<Eigen::Index>(contraction_.vertex_map[static_cast<std::size_t>(v)]), v) = Rational(1);
    }
    return projection.transpose() * pseudoinverse_ * projection;
}

GreenValue green_detailed(const MultiGraph& g, std::span<const Rational> resistance, const CombinatorialDivisor& x,
                          const CombinatorialDivisor& y) {
    const GreenOperator op(g, resistance);
    return GreenValue{op(x, y), !x.has_zero_degree() || !y.has_zero_degree()};
}

Rational green(const MultiGraph& g, std::span<const Rational> resistance, const CombinatorialDivisor& x,
               const CombinatorialDivisor& y) {
    return green_detailed(g, resistance, x, y).value;
}

Rational green_block_additive(const MultiGraph& g, std::span<const Rational> resistance, VertexIndex u,
                              VertexIndex v) {
    if (resistance.size() != g.edge_count()) {
        throw IndexOutOfRange("green_block_additive: one resistance per edge required");
    }
    if (u >= g.vertex_count() || v >= g.vertex_count()) {
        throw UnknownVertex("green_block_additive: vertex out of range");
    }
    const BlockDecomposition blocks = biconnected_blocks(g);
    Rational total(0);
    for (const BlockSegment& seg : block_path(blocks, u, v)) {
        const Subgraph sub = edge_subgraph(g, blocks.blocks[seg.block].edges);
        ResistanceAssignment local(sub.edges.size());
        for (std::size_t i = 0; i < sub.edges.size(); ++i) {
            local[i] = resistance[sub.edges[i]];
        }
        const auto x = CombinatorialDivisor::point_difference(sub.graph.vertex_count(), sub.local_vertex(seg.entry),
                                                              sub.local_vertex(seg.exit));
        total += green(sub.graph, local, x, x);
    }
    return total;
}

} // namespace jumplab
