#ifndef JUMPLAB_MULTIGRAPH_HPP
#define JUMPLAB_MULTIGRAPH_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jumplab/rational.hpp"

namespace jumplab {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

struct Edge {
    std::string id;
    VertexIndex u = 0;
    VertexIndex v = 0;

    bool is_loop() const { return u == v; }
    VertexIndex other(VertexIndex x) const { return x == u ? v : u; }
};

/// Undirected multigraph with loops and parallel edges. Vertices and edges
/// are addressed by their position in declaration order; names are kept for
/// reporting and must be unique.
class MultiGraph {
public:
    MultiGraph() = default;

    VertexIndex add_vertex(std::string name);
    EdgeIndex add_edge(std::string id, VertexIndex u, VertexIndex v);
    EdgeIndex add_edge(std::string id, const std::string& u, const std::string& v);

    std::size_t vertex_count() const { return vertex_names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& vertex_name(VertexIndex v) const { return vertex_names_.at(v); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }

    std::optional<VertexIndex> find_vertex(const std::string& name) const;
    std::optional<EdgeIndex> find_edge(const std::string& id) const;
    VertexIndex vertex(const std::string& name) const;  // throws UnknownVertex

    /// Incident edge indices per vertex; a loop is listed once.
    std::vector<std::vector<EdgeIndex>> incidence() const;

    friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
        return a.vertex_names_ == b.vertex_names_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertex_names_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

inline bool operator==(const Edge& a, const Edge& b) {
    return a.id == b.id && a.u == b.u && a.v == b.v;
}

struct ContractionResult {
    MultiGraph quotient;
    /// original vertex -> quotient vertex (surjective)
    std::vector<VertexIndex> vertex_map;
    /// original edge -> quotient edge, empty for contracted edges
    std::vector<std::optional<EdgeIndex>> surviving_edges;
};

/// Identifies the endpoints of every edge in `edges`. Quotient vertices are
/// ordered by their smallest original index and named after it; surviving
/// edges keep their ids and relative order, and edges that become loops are
/// kept. Throws UnknownEdge.
ContractionResult contract(const MultiGraph& g, std::span<const EdgeIndex> edges);

/// Partition of the vertex set, each part sorted, parts ordered by their
/// smallest vertex.
std::vector<std::vector<VertexIndex>> connected_components(const MultiGraph& g);
bool is_connected(const MultiGraph& g);

struct Block {
    std::vector<EdgeIndex> edges;
    std::vector<VertexIndex> vertices;
    bool is_loop = false;
    bool is_bridge = false;
};

/// Biconnected decomposition. Tree nodes [0, blocks.size()) are blocks,
/// nodes after that are the cut vertices listed in `cut_vertices`; a vertex
/// counts as a cut vertex when it lies in two or more blocks (loops included).
struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<VertexIndex> cut_vertices;
    std::vector<std::vector<std::size_t>> tree;
    /// Block index for every edge.
    std::vector<std::size_t> block_of_edge;

    /// Tree node representing vertex v: its cut node, or its unique block.
    /// Empty for an isolated vertex.
    std::optional<std::size_t> node_of_vertex(VertexIndex v) const;
    /// Node sequence of the unique tree path between two nodes.
    std::vector<std::size_t> tree_path(std::size_t from, std::size_t to) const;

    std::vector<std::optional<std::size_t>> cut_node_of_vertex;
    std::vector<std::vector<std::size_t>> blocks_of_vertex;
};

/// Throws DisconnectedNetwork.
BlockDecomposition biconnected_blocks(const MultiGraph& g);

/// Edge sets of the biconnected blocks of any graph, connected or not.
/// Each loop is its own block; blocks are sorted by smallest edge index.
std::vector<std::vector<EdgeIndex>> edge_blocks(const MultiGraph& g);

/// One hop of a two-point walk through the block-cut tree: enter `block`
/// at `entry`, leave it at `exit`.
struct BlockSegment {
    std::size_t block = 0;
    VertexIndex entry = 0;
    VertexIndex exit = 0;
};

/// Blocks crossed on the way from u to v with their entry and exit
/// vertices. Empty when u == v.
std::vector<BlockSegment> block_path(const BlockDecomposition& blocks, VertexIndex u, VertexIndex v);

/// Subgraph spanned by a set of edges, with index maps back to the parent.
struct Subgraph {
    MultiGraph graph;
    std::vector<VertexIndex> vertices;  // local -> parent
    std::vector<EdgeIndex> edges;       // local -> parent

    VertexIndex local_vertex(VertexIndex parent) const;
};

Subgraph edge_subgraph(const MultiGraph& g, std::span<const EdgeIndex> edges);

struct Cycle {
    std::vector<EdgeIndex> edges;
    /// vertices[i] is the common endpoint of edges[i-1] and edges[i];
    /// vertices[0] joins the last edge to the first.
    std::vector<VertexIndex> vertices;
};

inline constexpr std::size_t kDefaultCycleBound = 16;
inline constexpr std::size_t kDefaultOracleBound = 10;

/// Visits every simple cycle exactly once up to rotation and reflection.
/// Loops are 1-edge cycles, pairs of parallel edges 2-edge cycles. The visitor
/// returns false to stop early. Throws TooLargeForEnumeration when the graph
/// has more than `edge_bound` edges.
void for_each_cycle(const MultiGraph& g, const std::function<bool(const Cycle&)>& visit,
                    std::size_t edge_bound = kDefaultCycleBound);
std::vector<Cycle> cycles(const MultiGraph& g, std::size_t edge_bound = kDefaultCycleBound);

/// Effective resistance between u and v as the ratio of the weighted count
/// of spanning 2-forests separating u from v to the weighted count of
/// spanning trees, each edge weighted by its conductance 1/mu(e). Explicit
/// subset enumeration; independent of any matrix computation.
Rational resistance_oracle(const MultiGraph& g, std::span<const Rational> resistance, VertexIndex u,
                           VertexIndex v, std::size_t edge_bound = kDefaultOracleBound);

} // namespace jumplab

#endif // JUMPLAB_MULTIGRAPH_HPP
