#ifndef JUMPLAB_GREEN_HPP
#define JUMPLAB_GREEN_HPP

#include <span>
#include <vector>

#include "jumplab/matrix.hpp"
#include "jumplab/multigraph.hpp"

namespace jumplab {

/// Rational weighting of the vertices of a graph.
class CombinatorialDivisor {
public:
    CombinatorialDivisor() = default;
    explicit CombinatorialDivisor(RatVector weights);

    static CombinatorialDivisor zero(std::size_t vertex_count);
    /// The divisor 1_u - 1_v.
    static CombinatorialDivisor point_difference(std::size_t vertex_count, VertexIndex u, VertexIndex v);

    const RatVector& weights() const { return weights_; }
    std::size_t size() const { return static_cast<std::size_t>(weights_.size()); }
    const Rational& degree() const { return degree_; }
    bool has_zero_degree() const { return degree_.is_zero(); }
    bool is_zero() const;

    /// Weights of identified vertices add.
    CombinatorialDivisor push_forward(std::span<const VertexIndex> vertex_map, std::size_t target_size) const;

    friend CombinatorialDivisor operator+(const CombinatorialDivisor& a, const CombinatorialDivisor& b);
    friend CombinatorialDivisor operator*(const Rational& s, const CombinatorialDivisor& d);
    friend bool operator==(const CombinatorialDivisor& a, const CombinatorialDivisor& b) {
        return a.weights_ == b.weights_;
    }

private:
    RatVector weights_;
    Rational degree_;
};

/// Edge resistances mu(e) >= 0, indexed by edge.
using ResistanceAssignment = std::vector<Rational>;

bool is_proper(std::span<const Rational> resistance);

/// The Green's bilinear form of one resistive network. Zero-resistance
/// edges are contracted up front and the pseudoinverse of the contracted
/// Laplacian is cached, so repeated evaluations are cheap.
class GreenOperator {
public:
    /// Throws DisconnectedNetwork, NegativeResistance.
    GreenOperator(const MultiGraph& g, std::span<const Rational> resistance);

    Rational operator()(const CombinatorialDivisor& x, const CombinatorialDivisor& y) const;

    /// n x n matrix G with gr(X, Y) = X^T G Y in the original vertex indexing.
    RatMatrix form() const;

    const ContractionResult& contraction() const { return contraction_; }
    const RatMatrix& contracted_pseudoinverse() const { return pseudoinverse_; }

private:
    std::size_t vertex_count_ = 0;
    ContractionResult contraction_;
    RatMatrix pseudoinverse_;
};

struct GreenValue {
    Rational value;
    /// Set when X or Y has nonzero total degree; the value is still the
    /// pseudoinverse pairing, but has no potential-theoretic reading.
    bool nonzero_degree = false;
};

/// gr(g, mu; X, Y). Throws DisconnectedNetwork, NegativeResistance.
GreenValue green_detailed(const MultiGraph& g, std::span<const Rational> resistance, const CombinatorialDivisor& x,
                          const CombinatorialDivisor& y);
Rational green(const MultiGraph& g, std::span<const Rational> resistance, const CombinatorialDivisor& x,
               const CombinatorialDivisor& y);

/// Effective resistance between u and v assembled block by block along the
/// block-cut tree; each block is evaluated with green() on its own.
Rational green_block_additive(const MultiGraph& g, std::span<const Rational> resistance, VertexIndex u,
                              VertexIndex v);

} // namespace jumplab

#endif // JUMPLAB_GREEN_HPP
