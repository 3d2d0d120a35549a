#ifndef JUMPLAB_LABELS_HPP
#define JUMPLAB_LABELS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jumplab/multigraph.hpp"
#include "jumplab/rational.hpp"

namespace jumplab {

/// Ordered, named boundary divisors Z_1, ..., Z_r.
class BoundaryBasis {
public:
    BoundaryBasis() = default;
    explicit BoundaryBasis(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(const std::string& name) const;

    friend bool operator==(const BoundaryBasis&, const BoundaryBasis&) = default;

private:
    std::vector<std::string> names_;
};

/// Edge label z_1^a_1 ... z_r^a_r, stored as its exponent vector.
class Label {
public:
    Label() = default;
    explicit Label(std::vector<std::int64_t> exponents);

    std::size_t size() const { return exponents_.size(); }
    std::int64_t operator[](std::size_t i) const { return exponents_.at(i); }
    const std::vector<std::int64_t>& exponents() const { return exponents_; }

    /// All exponents zero: the label generates the unit ideal.
    bool is_unit() const;
    /// True iff every index with a positive exponent lies in `indices`.
    bool supported_in(std::span<const std::size_t> indices) const;

    friend bool operator==(const Label&, const Label&) = default;

private:
    std::vector<std::int64_t> exponents_;
};

/// n1*a = n2*b for some positive integers n1, n2; false if either is a unit.
bool multiplicatively_related(const Label& a, const Label& b);

struct LabelledGraph {
    MultiGraph graph;
    BoundaryBasis basis;
    std::vector<Label> labels;  // one per edge

    /// Throws BasisMismatch or IndexOutOfRange on shape errors.
    void validate() const;
    /// No edge carries the unit label.
    bool is_canonical() const;
};

/// Vanishing orders of the basis divisors along a test curve.
class OrderVector {
public:
    OrderVector() = default;
    OrderVector(BoundaryBasis basis, std::vector<std::int64_t> orders);

    const BoundaryBasis& basis() const { return basis_; }
    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::int64_t operator[](std::size_t i) const { return orders_.at(i); }

    OrderVector scaled(std::int64_t factor) const;
    /// Keeps entries in `indices`, zeroes the rest.
    OrderVector restricted(std::span<const std::size_t> indices) const;

    friend bool operator==(const OrderVector&, const OrderVector&) = default;

private:
    BoundaryBasis basis_;
    std::vector<std::int64_t> orders_;
};

/// The labelling l_I: exponents outside `indices` are set to zero.
/// Throws IndexOutOfRange.
LabelledGraph restrict_labelling(const LabelledGraph& lg, std::span<const std::size_t> indices);

/// Resistance of each edge along the test curve: sum_i a_i * m_i.
/// Throws BasisMismatch.
std::vector<Rational> pullback_orders(const LabelledGraph& lg, const OrderVector& orders);

struct Specialization {
    LabelledGraph labelled;
    ContractionResult contraction;
};

/// Passes to a generisation where the divisors in `unit_set` become
/// invertible: edges whose label is supported in `unit_set` are contracted
/// and the surviving labels lose those coordinates.
Specialization specialize(const LabelledGraph& lg, std::span<const std::size_t> unit_set);

struct AlignmentWitness {
    Cycle cycle;
    EdgeIndex first = 0;
    EdgeIndex second = 0;
};

struct AlignmentVerdict {
    bool aligned = true;
    std::optional<AlignmentWitness> witness;
};

/// Decides alignment through the biconnected blocks: the graph is aligned
/// iff all labels inside each block are multiplicatively related. For a
/// non-aligned graph the witness is a simple cycle through two unrelated
/// edges. Throws NonCanonicalLabel.
AlignmentVerdict is_aligned(const LabelledGraph& lg);

/// Simple cycle through two distinct non-loop edges lying in one block.
Cycle cycle_through(const MultiGraph& g, std::span<const EdgeIndex> block, EdgeIndex first, EdgeIndex second);

} // namespace jumplab

#endif // JUMPLAB_LABELS_HPP
