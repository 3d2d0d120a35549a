#include "jumplab/labels.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "jumplab/errors.hpp"

namespace jumplab {

BoundaryBasis::BoundaryBasis(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) {
        throw Error("boundary basis must name at least one divisor");
    }
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) {
            throw Error("boundary divisor names must be nonempty");
        }
        if (!seen.insert(n).second) {
            throw Error("duplicate boundary divisor '" + n + "'");
        }
    }
}

std::optional<std::size_t> BoundaryBasis::index_of(const std::string& name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
}

Label::Label(std::vector<std::int64_t> exponents) : exponents_(std::move(exponents)) {
    for (const auto a : exponents_) {
        if (a < 0) {
            throw Error("label exponents must be nonnegative");
        }
    }
}

bool Label::is_unit() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](std::int64_t a) { return a == 0; });
}

bool Label::supported_in(std::span<const std::size_t> indices) const {
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] != 0 && std::find(indices.begin(), indices.end(), i) == indices.end()) {
            return false;
        }
    }
    return true;
}

bool multiplicatively_related(const Label& a, const Label& b) {
    if (a.size() != b.size()) {
        throw BasisMismatch("labels over different bases");
    }
    if (a.is_unit() || b.is_unit()) {
        return false;
    }
    // Nonnegative nonzero vectors are positively proportional iff all 2x2
    // cross products vanish.
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const __int128 lhs = static_cast<__int128>(a[i]) * b[j];
            const __int128 rhs = static_cast<__int128>(a[j]) * b[i];
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

void LabelledGraph::validate() const {
    if (labels.size() != graph.edge_count()) {
        throw IndexOutOfRange("labelled graph needs exactly one label per edge");
    }
    for (std::size_t e = 0; e < labels.size(); ++e) {
        if (labels[e].size() != basis.size()) {
            throw BasisMismatch("label of edge '" + graph.edge(e).id + "' does not match the basis");
        }
    }
}

bool LabelledGraph::is_canonical() const {
    return std::none_of(labels.begin(), labels.end(), [](const Label& l) { return l.is_unit(); });
}

OrderVector::OrderVector(BoundaryBasis basis, std::vector<std::int64_t> orders)
    : basis_(std::move(basis)), orders_(std::move(orders)) {
    if (orders_.size() != basis_.size()) {
        throw BasisMismatch("order vector length differs from basis size");
    }
    for (const auto m : orders_) {
        if (m < 0) {
            throw Error("orders must be nonnegative");
        }
    }
}

OrderVector OrderVector::scaled(std::int64_t factor) const {
    std::vector<std::int64_t> out(orders_);
    for (auto& m : out) {
        m *= factor;
    }
    return OrderVector(basis_, std::move(out));
}

OrderVector OrderVector::restricted(std::span<const std::size_t> indices) const {
    std::vector<std::int64_t> out(orders_.size(), 0);
    for (const std::size_t i : indices) {
        out.at(i) = orders_.at(i);
    }
    return OrderVector(basis_, std::move(out));
}

LabelledGraph restrict_labelling(const LabelledGraph& lg, std::span<const std::size_t> indices) {
    for (const std::size_t i : indices) {
        if (i >= lg.basis.size()) {
            throw IndexOutOfRange("basis index " + std::to_string(i) + " out of range");
        }
    }
    LabelledGraph out{lg.graph, lg.basis, {}};
    out.labels.reserve(lg.labels.size());
    for (const Label& l : lg.labels) {
        std::vector<std::int64_t> a(l.size(), 0);
        for (const std::size_t i : indices) {
            a[i] = l[i];
        }
        out.labels.emplace_back(std::move(a));
    }
    return out;
}

std::vector<Rational> pullback_orders(const LabelledGraph& lg, const OrderVector& orders) {
    if (!(orders.basis() == lg.basis)) {
        throw BasisMismatch("order vector is indexed by a different basis");
    }
    std::vector<Rational> mu;
    mu.reserve(lg.labels.size());
    for (const Label& l : lg.labels) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < l.size(); ++i) {
            acc += mpz_class(static_cast<long>(l[i])) * mpz_class(static_cast<long>(orders[i]));
        }
        mu.emplace_back(acc);
    }
    return mu;
}

Specialization specialize(const LabelledGraph& lg, std::span<const std::size_t> unit_set) {
    for (const std::size_t i : unit_set) {
        if (i >= lg.basis.size()) {
            throw IndexOutOfRange("basis index " + std::to_string(i) + " out of range");
        }
    }
    std::vector<EdgeIndex> contracted;
    for (EdgeIndex e = 0; e < lg.labels.size(); ++e) {
        if (lg.labels[e].supported_in(unit_set)) {
            contracted.push_back(e);
        }
    }
    Specialization out;
    out.contraction = contract(lg.graph, contracted);
    out.labelled.graph = out.contraction.quotient;
    out.labelled.basis = lg.basis;
    out.labelled.labels.resize(out.labelled.graph.edge_count());
    for (EdgeIndex e = 0; e < lg.labels.size(); ++e) {
        const auto q = out.contraction.surviving_edges[e];
        if (!q) {
            continue;
        }
        std::vector<std::int64_t> a = lg.labels[e].exponents();
        for (const std::size_t i : unit_set) {
            a[i] = 0;
        }
        out.labelled.labels[*q] = Label(std::move(a));
    }
    return out;
}

namespace {

// Unit-capacity max flow on a vertex-split network, small and dense enough
// for BFS augmentation.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : adj_(nodes) {}

    std::size_t add_arc(std::size_t from, std::size_t to, std::optional<EdgeIndex> tag = std::nullopt) {
        const std::size_t id = arcs_.size();
        arcs_.push_back({from, to, 1, 0, tag});
        arcs_.push_back({to, from, 0, 0, std::nullopt});
        adj_[from].push_back(id);
        adj_[to].push_back(id + 1);
        return id;
    }

    int max_flow(std::size_t source, std::size_t sink, int limit) {
        int total = 0;
        while (total < limit) {
            std::vector<std::optional<std::size_t>> via(adj_.size());
            std::deque<std::size_t> queue{source};
            std::vector<bool> seen(adj_.size(), false);
            seen[source] = true;
            while (!queue.empty() && !seen[sink]) {
                const std::size_t x = queue.front();
                queue.pop_front();
                for (const std::size_t a : adj_[x]) {
                    const Arc& arc = arcs_[a];
                    if (arc.cap - arc.flow > 0 && !seen[arc.to]) {
                        seen[arc.to] = true;
                        via[arc.to] = a;
                        queue.push_back(arc.to);
                    }
                }
            }
            if (!seen[sink]) {
                break;
            }
            for (std::size_t x = sink; x != source;) {
                const std::size_t a = *via[x];
                arcs_[a].flow += 1;
                arcs_[a ^ 1U].flow -= 1;
                x = arcs_[a].from;
            }
            ++total;
        }
        return total;
    }

    // Follows saturated forward arcs from `start`, collecting tagged arcs,
    // until reaching `sink`. Returns the node reached just before the sink.
    std::size_t follow(std::size_t start, std::size_t sink, std::vector<EdgeIndex>& tags) const {
        std::size_t x = start;
        while (true) {
            std::optional<std::size_t> next;
            for (const std::size_t a : adj_[x]) {
                if ((a & 1U) == 0 && arcs_[a].flow > 0) {
                    next = a;
                    break;
                }
            }
            const Arc& arc = arcs_[*next];
            if (arc.to == sink) {
                return x;
            }
            if (arc.tag) {
                tags.push_back(*arc.tag);
            }
            x = arc.to;
        }
    }

private:
    struct Arc {
        std::size_t from;
        std::size_t to;
        int cap;
        int flow;
        std::optional<EdgeIndex> tag;
    };
    std::vector<Arc> arcs_;
    std::vector<std::vector<std::size_t>> adj_;
};

} // namespace

Cycle cycle_through(const MultiGraph& g, std::span<const EdgeIndex> block, EdgeIndex first, EdgeIndex second) {
    const Edge& e1 = g.edge(first);
    const Edge& e2 = g.edge(second);
    if (first == second || e1.is_loop() || e2.is_loop()) {
        throw Error("cycle_through needs two distinct non-loop edges");
    }
    const std::size_t n = g.vertex_count();
    const auto in = [](VertexIndex v) { return 2 * v; };
    const auto out = [](VertexIndex v) { return 2 * v + 1; };
    const std::size_t source = 2 * n;
    const std::size_t sink = 2 * n + 1;

    // Two vertex-disjoint paths from {a, b} (ends of the first edge) to
    // {c, d} (ends of the second) close up into the cycle.
    FlowNetwork net(2 * n + 2);
    for (VertexIndex v = 0; v < n; ++v) {
        net.add_arc(in(v), out(v));
    }
    for (const EdgeIndex e : block) {
        if (e == first || e == second || g.edge(e).is_loop()) {
            continue;
        }
        net.add_arc(out(g.edge(e).u), in(g.edge(e).v), e);
        net.add_arc(out(g.edge(e).v), in(g.edge(e).u), e);
    }
    net.add_arc(source, in(e1.u));
    net.add_arc(source, in(e1.v));
    net.add_arc(out(e2.u), sink);
    net.add_arc(out(e2.v), sink);
    if (net.max_flow(source, sink, 2) < 2) {
        throw Error("edges do not lie on a common cycle");
    }

    std::vector<EdgeIndex> path_a;
    std::vector<EdgeIndex> path_b;
    net.follow(in(e1.u), sink, path_a);
    const VertexIndex y = net.follow(in(e1.v), sink, path_b) / 2;

    // Walk: first edge from v to u, path_a from u to some end of the second
    // edge, across it to y, then path_b backwards from y to v.
    Cycle cycle;
    cycle.vertices.push_back(e1.v);
    cycle.edges.push_back(first);
    VertexIndex at = e1.u;
    for (const EdgeIndex e : path_a) {
        cycle.vertices.push_back(at);
        cycle.edges.push_back(e);
        at = g.edge(e).other(at);
    }
    cycle.vertices.push_back(at);
    cycle.edges.push_back(second);
    at = y;
    for (auto it = path_b.rbegin(); it != path_b.rend(); ++it) {
        cycle.vertices.push_back(at);
        cycle.edges.push_back(*it);
        at = g.edge(*it).other(at);
    }
    return cycle;
}

AlignmentVerdict is_aligned(const LabelledGraph& lg) {
    lg.validate();
    for (EdgeIndex e = 0; e < lg.labels.size(); ++e) {
        if (lg.labels[e].is_unit()) {
            throw NonCanonicalLabel(lg.graph.edge(e).id);
        }
    }
    for (const auto& block : edge_blocks(lg.graph)) {
        if (block.size() < 2) {
            continue;
        }
        const EdgeIndex reference = block.front();
        for (const EdgeIndex e : block) {
            if (!multiplicatively_related(lg.labels[reference], lg.labels[e])) {
                return AlignmentVerdict{false, AlignmentWitness{cycle_through(lg.graph, block, reference, e), reference, e}};
            }
        }
    }
    return AlignmentVerdict{};
}

} // namespace jumplab
