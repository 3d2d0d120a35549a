#ifndef JUMPLAB_JUMP_HPP
#define JUMPLAB_JUMP_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "jumplab/green.hpp"
#include "jumplab/labels.hpp"
#include "jumplab/psd.hpp"

namespace jumplab {

/// Integer combination sum_i d_i * sigma_i of sections, each recorded by
/// the vertex (component) its section passes through.
struct SectionDivisor {
    std::vector<std::pair<VertexIndex, std::int64_t>> supports;

    std::int64_t degree() const;
};

/// Multidegree of the divisor on each component. Throws NonZeroDegree and
/// UnknownVertex.
CombinatorialDivisor to_combinatorial(const SectionDivisor& d, const MultiGraph& g);

struct JumpResult {
    Rational value;
    /// gr for the full labelling.
    Rational full;
    /// gr for each single-divisor labelling l_i.
    std::vector<Rational> single;
    AlignmentVerdict alignment;
};

/// The jump bilinear form of a labelled graph along one test curve:
///   j(X, Y) = gr(l; X, Y) - sum_i gr(l_i; X, Y)
/// with resistances pulled back along the order vector. The r + 1 Green's
/// operators are built once.
class JumpForm {
public:
    /// Throws DisconnectedNetwork, BasisMismatch, NonCanonicalLabel.
    JumpForm(const LabelledGraph& lg, const OrderVector& orders);

    /// Throws NonZeroDegree when X or Y has nonzero total degree.
    JumpResult evaluate(const CombinatorialDivisor& x, const CombinatorialDivisor& y) const;
    Rational operator()(const CombinatorialDivisor& x, const CombinatorialDivisor& y) const;

    /// Symmetric matrix of the form on the basis 1_{u_i} - 1_{u_0}, i >= 1.
    RatMatrix gram() const;

    std::size_t vertex_count() const { return vertex_count_; }
    const AlignmentVerdict& alignment() const { return alignment_; }

private:
    std::size_t vertex_count_ = 0;
    AlignmentVerdict alignment_;
    GreenOperator full_;
    std::vector<GreenOperator> single_;
};

/// Throws DisconnectedNetwork, NonZeroDegree, BasisMismatch, NonCanonicalLabel.
JumpResult height_jump(const LabelledGraph& lg, const SectionDivisor& d, const SectionDivisor& e,
                       const OrderVector& orders);
JumpResult height_jump(const LabelledGraph& lg, const CombinatorialDivisor& d, const CombinatorialDivisor& e,
                       const OrderVector& orders);

/// Jump for D = E = u - v summed block by block along the block-cut tree.
Rational height_jump_block_additive(const LabelledGraph& lg, VertexIndex u, VertexIndex v, const OrderVector& orders);

RatMatrix jump_gram(const LabelledGraph& lg, const OrderVector& orders);

/// Throws NotSymmetric.
PsdCertificate<Rational> check_psd(const RatMatrix& gram);

struct SweepRow {
    std::vector<std::int64_t> orders;
    Rational value;
};

struct SweepSummary {
    Rational min;
    Rational max;
    bool all_nonnegative = true;
    bool all_zero = true;
};

struct SweepResult {
    /// m in {1..max}^r, lexicographic.
    std::vector<SweepRow> interior;
    /// m in {0..max}^r with at least one zero coordinate, lexicographic.
    std::vector<SweepRow> faces;
    SweepSummary summary;  // over the interior rows
    std::vector<std::vector<std::int64_t>> zero_locus;  // interior points with j = 0
    std::size_t homogeneity_checks = 0;
    bool homogeneous = true;
    AlignmentVerdict alignment;
};

/// Evaluates the jump on a grid of order vectors. Grid points are
/// independent and may be evaluated on several threads; the output order
/// does not depend on scheduling. Throws as height_jump and
/// std::invalid_argument when max_order < 1.
SweepResult sweep(const LabelledGraph& lg, const SectionDivisor& d, const SectionDivisor& e, std::int64_t max_order,
                  unsigned threads = 0);

} // namespace jumplab

#endif // JUMPLAB_JUMP_HPP
