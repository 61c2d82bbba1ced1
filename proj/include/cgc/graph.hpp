#ifndef CGC_GRAPH_HPP
#define CGC_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "cgc/errors.hpp"

namespace cgc {

/// Vertices are dense integers 0..n-1.
using Vertex = int;

/// A subset of the vertices of some ambient graph, kept sorted and unique.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph: no self-loops, no parallel edges. Adjacency
/// lists are kept sorted ascending, which makes every traversal in the
/// library deterministic. Graphs are treated as immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n >= 0 ? static_cast<std::size_t>(n) : 0) {
        if (n < 0) throw domain_error("vertex count must be nonnegative");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    /// Inserts the edge uv. Duplicate insertions are collapsed silently;
    /// self-loops are rejected.
    void add_edge(Vertex u, Vertex v);

    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Vertex>& neighbours(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const {
        return static_cast<int>(neighbours(v).size());
    }

    int max_degree() const;

    /// Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool is_valid_vertex(Vertex v) const {
        return v >= 0 && v < vertex_count();
    }

    void check_vertex(Vertex v) const {
        if (!is_valid_vertex(v))
            throw domain_error("vertex id " + std::to_string(v) + " out of range");
    }

    bool operator==(const Graph& other) const {
        return adj_ == other.adj_;
    }

    /// Display-only vertex labels; empty unless a producer fills them in.
    std::vector<std::string> labels;

private:
    std::vector<std::vector<Vertex>> adj_;
    int edge_count_ = 0;
};

enum class GraphFormat { dimacs, edge_list };

/// Parses DIMACS .col text ("c" comments, one "p edge <n> <m>" header,
/// "e <u> <v>" lines with 1-based ids) or plain edge-list text ("u v" per
/// line, 0-based, n inferred as max id + 1). Duplicate edge lines collapse;
/// self-loops and out-of-range ids raise parse_error with the line number.
Graph parse_graph(const std::string& text, GraphFormat format);

/// Canonical DIMACS serialization: "p edge n m" then sorted "e u v" lines
/// (1-based, u < v). Byte-stable for equal graphs.
std::string to_dimacs(const Graph& g);

/// Canonical 0-based edge-list serialization, sorted, one pair per line.
std::string to_edge_list(const Graph& g);

/// True iff g has at most one connected component. The empty graph counts
/// as connected by convention.
bool is_connected(const Graph& g);

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// Vertices whose removal disconnects g. Requires g connected.
VertexSet cut_vertices(const Graph& g);

/// Vertex sets of the biconnected components of a connected graph. Every
/// edge belongs to exactly one component; components share only
/// cut-vertices. A single isolated vertex (n = 1) yields one trivial
/// component.
std::vector<VertexSet> biconnected_components(const Graph& g);

enum class GraphClass { bipartite, block, cactus, k4_minor_free };

/// Class membership tests. Bipartite: BFS 2-colouring. Block / cactus:
/// every biconnected component a clique / a cycle (a single edge counts as
/// both). K4-minor-free: reduce by deleting isolated and degree-1 vertices
/// and suppressing degree-2 vertices (discarding loops and parallel edges
/// on the spot); true iff the graph reduces to nothing.
bool recognize(const Graph& g, GraphClass cls);

/// Induced subgraph plus the table mapping its vertex ids back to g's.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent; // local id -> parent id, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

/// Sorts and deduplicates in place, checking ids against g.
void normalize_vertex_set(const Graph& g, VertexSet& s);

} // namespace cgc

#endif // CGC_GRAPH_HPP
