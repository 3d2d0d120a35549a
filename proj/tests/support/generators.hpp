#ifndef JUMPLAB_TESTS_GENERATORS_HPP
#define JUMPLAB_TESTS_GENERATORS_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "jumplab/jump.hpp"
#include "jumplab/labels.hpp"
#include "jumplab/multigraph.hpp"
#include "jumplab/rational.hpp"

namespace testkit {

using namespace jumplab;

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline std::string vname(std::size_t i) { return "v" + std::to_string(i); }

// Connected multigraph: a random spanning tree, then extra edges (parallels
// and loops allowed).
inline MultiGraph random_connected(Rng& rng, std::size_t vertices, std::size_t edges, bool loops = true) {
    MultiGraph g;
    for (std::size_t i = 0; i < vertices; ++i) {
        g.add_vertex(vname(i));
    }
    std::size_t next = 0;
    for (std::size_t i = 1; i < vertices && next < edges; ++i) {
        const auto parent = static_cast<VertexIndex>(uniform(rng, 0, static_cast<std::int64_t>(i) - 1));
        g.add_edge("e" + std::to_string(next++), parent, i);
    }
    while (next < edges) {
        const auto u = static_cast<VertexIndex>(uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
        auto v = static_cast<VertexIndex>(uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
        if (!loops && vertices > 1) {
            while (v == u) {
                v = static_cast<VertexIndex>(uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
            }
        }
        g.add_edge("e" + std::to_string(next++), u, v);
    }
    return g;
}

inline BoundaryBasis basis_of(std::size_t r) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r; ++i) {
        names.push_back("z" + std::to_string(i + 1));
    }
    return BoundaryBasis(names);
}

// Nonzero exponent vector with entries in [0, max_entry].
inline Label random_label(Rng& rng, std::size_t r, std::int64_t max_entry) {
    while (true) {
        std::vector<std::int64_t> a(r);
        for (auto& x : a) {
            x = uniform(rng, 0, max_entry);
        }
        Label l(a);
        if (!l.is_unit()) {
            return l;
        }
    }
}

inline LabelledGraph random_labelled(Rng& rng, MultiGraph g, std::size_t r, std::int64_t max_entry) {
    LabelledGraph lg{std::move(g), basis_of(r), {}};
    for (std::size_t e = 0; e < lg.graph.edge_count(); ++e) {
        lg.labels.push_back(random_label(rng, r, max_entry));
    }
    return lg;
}

// Labels parallel within each block: one direction per block, scaled by a
// random positive multiple per edge. Blocks come from the library, but the
// aligned property of the output is checked by brute force in the tests.
inline LabelledGraph random_aligned(Rng& rng, MultiGraph g, std::size_t r, std::int64_t max_entry) {
    LabelledGraph lg{std::move(g), basis_of(r), {}};
    lg.labels.assign(lg.graph.edge_count(), Label{});
    for (const auto& block : edge_blocks(lg.graph)) {
        const Label direction = random_label(rng, r, max_entry);
        for (const EdgeIndex e : block) {
            const std::int64_t k = uniform(rng, 1, 3);
            std::vector<std::int64_t> a = direction.exponents();
            for (auto& x : a) {
                x *= k;
            }
            lg.labels[e] = Label(a);
        }
    }
    return lg;
}

inline SectionDivisor random_divisor(Rng& rng, std::size_t vertices, std::int64_t max_coeff = 3) {
    SectionDivisor d;
    std::int64_t total = 0;
    const auto terms = uniform(rng, 1, 4);
    for (std::int64_t t = 0; t < terms; ++t) {
        const auto v = static_cast<VertexIndex>(uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
        const std::int64_t c = uniform(rng, -max_coeff, max_coeff);
        d.supports.emplace_back(v, c);
        total += c;
    }
    const auto v = static_cast<VertexIndex>(uniform(rng, 0, static_cast<std::int64_t>(vertices) - 1));
    d.supports.emplace_back(v, -total);
    return d;
}

inline OrderVector random_orders(Rng& rng, const BoundaryBasis& basis, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> m(basis.size());
    for (auto& x : m) {
        x = uniform(rng, lo, hi);
    }
    return OrderVector(basis, m);
}

inline std::vector<Rational> random_resistances(Rng& rng, std::size_t edges) {
    std::vector<Rational> mu;
    for (std::size_t e = 0; e < edges; ++e) {
        mu.emplace_back(uniform(rng, 1, 9), uniform(rng, 1, 5));
    }
    return mu;
}

// Parallel test by reduction to primitive vectors, independent of the
// cross-product test used in the library.
inline std::vector<std::int64_t> primitive(const std::vector<std::int64_t>& a) {
    std::int64_t g = 0;
    for (const auto x : a) {
        g = std::gcd(g, x);
    }
    std::vector<std::int64_t> out = a;
    if (g != 0) {
        for (auto& x : out) {
            x /= g;
        }
    }
    return out;
}

inline bool parallel_by_gcd(const Label& a, const Label& b) {
    return !a.is_unit() && !b.is_unit() && primitive(a.exponents()) == primitive(b.exponents());
}

// Alignment straight from the definition: every pair of edges on every
// simple cycle carries parallel labels.
inline bool aligned_by_cycles(const LabelledGraph& lg) {
    for (const Cycle& c : cycles(lg.graph, 64)) {
        for (std::size_t i = 0; i < c.edges.size(); ++i) {
            for (std::size_t j = i + 1; j < c.edges.size(); ++j) {
                if (!parallel_by_gcd(lg.labels[c.edges[i]], lg.labels[c.edges[j]])) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Two resistors in parallel.
inline Rational parallel(const Rational& a, const Rational& b) { return a * b / (a + b); }

} // namespace testkit

#endif // JUMPLAB_TESTS_GENERATORS_HPP
