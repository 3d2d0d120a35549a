#include "jumplab/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "jumplab/errors.hpp"

namespace jumplab {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Keeps the smaller index as representative.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (b < a) {
            std::swap(a, b);
        }
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

} // namespace

VertexIndex MultiGraph::add_vertex(std::string name) {
    if (name.empty()) {
        throw Error("vertex name must be nonempty");
    }
    if (vertex_lookup_.contains(name)) {
        throw Error("duplicate vertex '" + name + "'");
    }
    const VertexIndex idx = vertex_names_.size();
    vertex_lookup_.emplace(name, idx);
    vertex_names_.push_back(std::move(name));
    return idx;
}

EdgeIndex MultiGraph::add_edge(std::string id, VertexIndex u, VertexIndex v) {
    if (u >= vertex_count() || v >= vertex_count()) {
        throw UnknownVertex("endpoint index out of range for edge '" + id + "'");
    }
    if (id.empty()) {
        throw Error("edge id must be nonempty");
    }
    if (edge_lookup_.contains(id)) {
        throw Error("duplicate edge id '" + id + "'");
    }
    const EdgeIndex idx = edges_.size();
    edge_lookup_.emplace(id, idx);
    edges_.push_back(Edge{std::move(id), u, v});
    return idx;
}

EdgeIndex MultiGraph::add_edge(std::string id, const std::string& u, const std::string& v) {
    return add_edge(std::move(id), vertex(u), vertex(v));
}

std::optional<VertexIndex> MultiGraph::find_vertex(const std::string& name) const {
    const auto it = vertex_lookup_.find(name);
    if (it == vertex_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<EdgeIndex> MultiGraph::find_edge(const std::string& id) const {
    const auto it = edge_lookup_.find(id);
    if (it == edge_lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

VertexIndex MultiGraph::vertex(const std::string& name) const {
    const auto v = find_vertex(name);
    if (!v) {
        throw UnknownVertex("'" + name + "'");
    }
    return *v;
}

std::vector<std::vector<EdgeIndex>> MultiGraph::incidence() const {
    std::vector<std::vector<EdgeIndex>> inc(vertex_count());
    for (EdgeIndex e = 0; e < edges_.size(); ++e) {
        inc[edges_[e].u].push_back(e);
        if (!edges_[e].is_loop()) {
            inc[edges_[e].v].push_back(e);
        }
    }
    return inc;
}

ContractionResult contract(const MultiGraph& g, std::span<const EdgeIndex> edges) {
    std::vector<bool> contracted(g.edge_count(), false);
    DisjointSets sets(g.vertex_count());
    for (const EdgeIndex e : edges) {
        if (e >= g.edge_count()) {
            throw UnknownEdge("index " + std::to_string(e));
        }
        contracted[e] = true;
        sets.unite(g.edge(e).u, g.edge(e).v);
    }

    ContractionResult result;
    result.vertex_map.assign(g.vertex_count(), 0);
    std::vector<std::optional<VertexIndex>> rep_to_quotient(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const std::size_t rep = sets.find(v);
        if (!rep_to_quotient[rep]) {
            // rep == v here: the representative is the smallest member.
            rep_to_quotient[rep] = result.quotient.add_vertex(g.vertex_name(v));
        }
        result.vertex_map[v] = *rep_to_quotient[rep];
    }

    result.surviving_edges.assign(g.edge_count(), std::nullopt);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (contracted[e]) {
            continue;
        }
        const Edge& edge = g.edge(e);
        result.surviving_edges[e] =
            result.quotient.add_edge(edge.id, result.vertex_map[edge.u], result.vertex_map[edge.v]);
    }
    return result;
}

std::vector<std::vector<VertexIndex>> connected_components(const MultiGraph& g) {
    DisjointSets sets(g.vertex_count());
    for (const Edge& e : g.edges()) {
        sets.unite(e.u, e.v);
    }
    std::vector<std::vector<VertexIndex>> parts;
    std::vector<std::optional<std::size_t>> part_of_rep(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        const std::size_t rep = sets.find(v);
        if (!part_of_rep[rep]) {
            part_of_rep[rep] = parts.size();
            parts.emplace_back();
        }
        parts[*part_of_rep[rep]].push_back(v);
    }
    return parts;
}

bool is_connected(const MultiGraph& g) {
    return connected_components(g).size() <= 1;
}

std::optional<std::size_t> BlockDecomposition::node_of_vertex(VertexIndex v) const {
    if (cut_node_of_vertex.at(v)) {
        return cut_node_of_vertex[v];
    }
    if (blocks_of_vertex.at(v).empty()) {
        return std::nullopt;
    }
    return blocks_of_vertex[v].front();
}

std::vector<std::size_t> BlockDecomposition::tree_path(std::size_t from, std::size_t to) const {
    std::vector<std::optional<std::size_t>> parent(tree.size());
    std::deque<std::size_t> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        if (x == to) {
            break;
        }
        for (const std::size_t y : tree[x]) {
            if (!parent[y]) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    std::vector<std::size_t> path;
    if (!parent[to]) {
        return path;
    }
    for (std::size_t x = to; x != from; x = *parent[x]) {
        path.push_back(x);
    }
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

struct TarjanState {
    const MultiGraph& g;
    std::vector<std::vector<EdgeIndex>> inc;
    std::vector<int> disc;
    std::vector<int> low;
    std::vector<EdgeIndex> stack;
    std::vector<std::vector<EdgeIndex>> blocks;
    int time = 0;

    void visit(VertexIndex v, std::optional<EdgeIndex> parent_edge) {
        disc[v] = low[v] = time++;
        for (const EdgeIndex e : inc[v]) {
            const Edge& edge = g.edge(e);
            if (edge.is_loop() || e == parent_edge) {
                continue;
            }
            const VertexIndex w = edge.other(v);
            if (disc[w] < 0) {
                stack.push_back(e);
                visit(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    std::vector<EdgeIndex> block;
                    EdgeIndex top = 0;
                    do {
                        top = stack.back();
                        stack.pop_back();
                        block.push_back(top);
                    } while (top != e);
                    blocks.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    }
};

} // namespace

std::vector<std::vector<EdgeIndex>> edge_blocks(const MultiGraph& g) {
    TarjanState state{g, g.incidence(), std::vector<int>(g.vertex_count(), -1),
                      std::vector<int>(g.vertex_count(), -1), {}, {}, 0};
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (state.disc[v] < 0) {
            state.visit(v, std::nullopt);
        }
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).is_loop()) {
            state.blocks.push_back({e});
        }
    }
    for (auto& b : state.blocks) {
        std::sort(b.begin(), b.end());
    }
    std::sort(state.blocks.begin(), state.blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return std::move(state.blocks);
}

BlockDecomposition biconnected_blocks(const MultiGraph& g) {
    if (!is_connected(g)) {
        throw DisconnectedNetwork();
    }
    auto raw_blocks = edge_blocks(g);

    BlockDecomposition out;
    out.block_of_edge.assign(g.edge_count(), 0);
    out.blocks_of_vertex.assign(g.vertex_count(), {});
    out.cut_node_of_vertex.assign(g.vertex_count(), std::nullopt);
    for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
        Block block;
        block.edges = std::move(raw_blocks[b]);
        for (const EdgeIndex e : block.edges) {
            out.block_of_edge[e] = b;
            block.vertices.push_back(g.edge(e).u);
            block.vertices.push_back(g.edge(e).v);
        }
        std::sort(block.vertices.begin(), block.vertices.end());
        block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
        block.is_loop = block.edges.size() == 1 && g.edge(block.edges.front()).is_loop();
        block.is_bridge = block.edges.size() == 1 && !block.is_loop;
        for (const VertexIndex v : block.vertices) {
            out.blocks_of_vertex[v].push_back(b);
        }
        out.blocks.push_back(std::move(block));
    }

    out.tree.assign(out.blocks.size(), {});
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (out.blocks_of_vertex[v].size() < 2) {
            continue;
        }
        const std::size_t node = out.tree.size();
        out.cut_node_of_vertex[v] = node;
        out.cut_vertices.push_back(v);
        out.tree.emplace_back();
        for (const std::size_t b : out.blocks_of_vertex[v]) {
            out.tree[node].push_back(b);
            out.tree[b].push_back(node);
        }
    }
    return out;
}

std::vector<BlockSegment> block_path(const BlockDecomposition& blocks, VertexIndex u, VertexIndex v) {
    std::vector<BlockSegment> segments;
    if (u == v) {
        return segments;
    }
    const auto from = blocks.node_of_vertex(u);
    const auto to = blocks.node_of_vertex(v);
    if (!from || !to) {
        throw DisconnectedNetwork();
    }
    const auto nodes = blocks.tree_path(*from, *to);
    if (nodes.empty()) {
        throw DisconnectedNetwork();
    }
    const std::size_t block_count = blocks.blocks.size();
    VertexIndex current = u;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] >= block_count) {
            continue;
        }
        VertexIndex exit = v;
        if (i + 1 < nodes.size()) {
            exit = blocks.cut_vertices[nodes[i + 1] - block_count];
        }
        segments.push_back({nodes[i], current, exit});
        current = exit;
    }
    return segments;
}

VertexIndex Subgraph::local_vertex(VertexIndex parent) const {
    const auto it = std::find(vertices.begin(), vertices.end(), parent);
    if (it == vertices.end()) {
        throw UnknownVertex("vertex " + std::to_string(parent) + " is not in the subgraph");
    }
    return static_cast<VertexIndex>(it - vertices.begin());
}

Subgraph edge_subgraph(const MultiGraph& g, std::span<const EdgeIndex> edges) {
    Subgraph sub;
    std::vector<std::optional<VertexIndex>> local(g.vertex_count());
    auto ensure = [&](VertexIndex v) {
        if (!local[v]) {
            local[v] = sub.graph.add_vertex(g.vertex_name(v));
            sub.vertices.push_back(v);
        }
        return *local[v];
    };
    std::vector<EdgeIndex> sorted(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<VertexIndex> ends;
    for (const EdgeIndex e : sorted) {
        if (e >= g.edge_count()) {
            throw UnknownEdge("index " + std::to_string(e));
        }
        ends.push_back(g.edge(e).u);
        ends.push_back(g.edge(e).v);
    }
    std::sort(ends.begin(), ends.end());
    for (const VertexIndex v : ends) {
        ensure(v);
    }
    for (const EdgeIndex e : sorted) {
        sub.graph.add_edge(g.edge(e).id, *local[g.edge(e).u], *local[g.edge(e).v]);
        sub.edges.push_back(e);
    }
    return sub;
}

void for_each_cycle(const MultiGraph& g, const std::function<bool(const Cycle&)>& visit,
                    std::size_t edge_bound) {
    if (g.edge_count() > edge_bound) {
        throw TooLargeForEnumeration(g.edge_count(), edge_bound);
    }
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).is_loop() && !visit(Cycle{{e}, {g.edge(e).u}})) {
            return;
        }
    }

    const auto inc = g.incidence();
    std::vector<bool> on_path(g.vertex_count(), false);
    Cycle path;
    bool stopped = false;

    // Each cycle is rooted at its smallest vertex; of its two traversal
    // directions only the one whose first edge index is below its closing
    // edge index is reported.
    std::function<void(VertexIndex, VertexIndex)> extend = [&](VertexIndex root, VertexIndex x) {
        for (const EdgeIndex e : inc[x]) {
            if (stopped) {
                return;
            }
            const Edge& edge = g.edge(e);
            if (edge.is_loop() || (!path.edges.empty() && e == path.edges.back())) {
                continue;
            }
            const VertexIndex w = edge.other(x);
            if (w == root) {
                if (!path.edges.empty() && path.edges.front() < e) {
                    Cycle found = path;
                    found.edges.push_back(e);
                    if (!visit(found)) {
                        stopped = true;
                    }
                }
            } else if (w > root && !on_path[w]) {
                on_path[w] = true;
                path.edges.push_back(e);
                path.vertices.push_back(w);
                extend(root, w);
                path.edges.pop_back();
                path.vertices.pop_back();
                on_path[w] = false;
            }
        }
    };

    for (VertexIndex root = 0; root < g.vertex_count() && !stopped; ++root) {
        on_path[root] = true;
        path.vertices = {root};
        extend(root, root);
        on_path[root] = false;
    }
}

std::vector<Cycle> cycles(const MultiGraph& g, std::size_t edge_bound) {
    std::vector<Cycle> out;
    for_each_cycle(
        g,
        [&](const Cycle& c) {
            out.push_back(c);
            return true;
        },
        edge_bound);
    return out;
}

Rational resistance_oracle(const MultiGraph& g, std::span<const Rational> resistance, VertexIndex u,
                           VertexIndex v, std::size_t edge_bound) {
    if (resistance.size() != g.edge_count()) {
        throw IndexOutOfRange("resistance_oracle: one resistance per edge required");
    }
    if (u >= g.vertex_count() || v >= g.vertex_count()) {
        throw UnknownVertex("resistance_oracle endpoint out of range");
    }
    if (g.edge_count() > edge_bound) {
        throw TooLargeForEnumeration(g.edge_count(), edge_bound);
    }
    if (!is_connected(g)) {
        throw DisconnectedNetwork();
    }

    std::vector<EdgeIndex> usable;
    std::vector<Rational> conductance;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (resistance[e].sign() <= 0) {
            throw NonPositiveResistance(g.edge(e).id);
        }
        if (!g.edge(e).is_loop()) {
            usable.push_back(e);
            conductance.push_back(Rational(1) / resistance[e]);
        }
    }

    const std::size_t n = g.vertex_count();
    Rational trees(0);
    Rational forests(0);
    const std::size_t subsets = std::size_t{1} << usable.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size + 1 != n && size + 2 != n) {
            continue;
        }
        DisjointSets sets(n);
        bool acyclic = true;
        Rational weight(1);
        for (std::size_t i = 0; i < usable.size() && acyclic; ++i) {
            if ((mask >> i) & 1U) {
                const Edge& edge = g.edge(usable[i]);
                acyclic = sets.unite(edge.u, edge.v);
                weight *= conductance[i];
            }
        }
        if (!acyclic) {
            continue;
        }
        if (size + 1 == n) {
            trees += weight;
        } else if (sets.find(u) != sets.find(v)) {
            forests += weight;
        }
    }
    return forests / trees;
}

} // namespace jumplab
