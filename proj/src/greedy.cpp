#include "cgc/greedy.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

namespace cgc {

void check_ordering(const Graph& g, const VertexOrdering& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw domain_error("ordering has wrong length");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw domain_error("ordering is not a permutation of the vertices");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

bool is_proper(const Graph& g, const Colouring& c) {
    if (c.vertex_count() != g.vertex_count()) return false;
    int max_seen = 0;
    for (int col : c.colour) {
        if (col < 1) return false;
        max_seen = std::max(max_seen, col);
    }
    if (max_seen != c.max_colour && g.vertex_count() > 0) return false;
    for (auto [u, v] : g.edges())
        if (c.colour[static_cast<std::size_t>(u)] == c.colour[static_cast<std::size_t>(v)])
            return false;
    return true;
}

namespace {

// Smallest positive integer not used on the coloured neighbours of v.
int first_fit_colour(const Graph& g, const std::vector<int>& colour, Vertex v) {
    std::vector<char> used(g.neighbours(v).size() + 2, 0);
    for (Vertex u : g.neighbours(v)) {
        int c = colour[static_cast<std::size_t>(u)];
        if (c >= 1 && c < static_cast<int>(used.size())) used[static_cast<std::size_t>(c)] = 1;
    }
    int c = 1;
    while (used[static_cast<std::size_t>(c)]) ++c;
    return c;
}

} // namespace

Colouring greedy_colouring(const Graph& g, const VertexOrdering& order) {
    check_ordering(g, order);
    Colouring result;
    result.colour.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : order) {
        int c = first_fit_colour(g, result.colour, v);
        result.colour[static_cast<std::size_t>(v)] = c;
        result.max_colour = std::max(result.max_colour, c);
    }
    return result;
}

SeededColouring seeded_greedy(const Graph& g, const VertexOrdering& order, int seed) {
    check_ordering(g, order);
    if (seed < 1) throw domain_error("seed colour must be positive");
    SeededColouring result;
    result.colouring.colour.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    bool first = true;
    for (Vertex v : order) {
        int c = first ? seed : first_fit_colour(g, result.colouring.colour, v);
        result.colouring.colour[static_cast<std::size_t>(v)] = c;
        result.colouring.max_colour = std::max(result.colouring.max_colour, c);
        if (!first) result.tail_max = std::max(result.tail_max, c);
        first = false;
    }
    return result;
}

bool is_connected_ordering(const Graph& g, const VertexOrdering& order) {
    check_ordering(g, order);
    std::vector<char> placed(static_cast<std::size_t>(g.vertex_count()), 0);
    bool first = true;
    for (Vertex v : order) {
        if (!first) {
            bool attached = false;
            for (Vertex u : g.neighbours(v))
                if (placed[static_cast<std::size_t>(u)]) {
                    attached = true;
                    break;
                }
            if (!attached) return false;
        }
        placed[static_cast<std::size_t>(v)] = 1;
        first = false;
    }
    return true;
}

VertexOrdering ordering_from_colouring(const Graph& g, const Colouring& c) {
    if (!is_proper(g, c))
        throw domain_error("ordering_from_colouring requires a proper colouring");
    VertexOrdering order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        int ca = c.colour[static_cast<std::size_t>(a)];
        int cb = c.colour[static_cast<std::size_t>(b)];
        return ca != cb ? ca < cb : a < b;
    });
    return order;
}

VertexOrdering extend_via_dominating(const Graph& g, const Colouring& c,
                                     const VertexSet& h_vertices,
                                     const VertexOrdering& order_h) {
    if (!is_proper(g, c))
        throw domain_error("extend_via_dominating: colouring is not proper");
    VertexSet h = h_vertices;
    normalize_vertex_set(g, h);

    auto [h_graph, to_parent] = induced_subgraph(g, h);
    if (!is_connected(h_graph))
        throw domain_error("extend_via_dominating: subgraph is not connected");

    std::vector<char> in_h(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : h) in_h[static_cast<std::size_t>(v)] = 1;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_h[static_cast<std::size_t>(v)]) continue;
        bool dominated = false;
        for (Vertex u : g.neighbours(v))
            if (in_h[static_cast<std::size_t>(u)]) {
                dominated = true;
                break;
            }
        if (!dominated)
            throw domain_error("extend_via_dominating: subgraph is not dominating");
    }

    // order_h is given in g's vertex ids; translate to H-local ids.
    if (order_h.size() != h.size())
        throw domain_error("extend_via_dominating: ordering does not cover the subgraph");
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        local[static_cast<std::size_t>(to_parent[i])] = static_cast<int>(i);
    VertexOrdering order_local;
    order_local.reserve(order_h.size());
    for (Vertex v : order_h) {
        g.check_vertex(v);
        if (local[static_cast<std::size_t>(v)] < 0)
            throw domain_error("extend_via_dominating: ordering leaves the subgraph");
        order_local.push_back(local[static_cast<std::size_t>(v)]);
    }
    if (!is_connected_ordering(h_graph, order_local))
        throw domain_error("extend_via_dominating: ordering of the subgraph is not connected");

    Colouring h_greedy = greedy_colouring(h_graph, order_local);
    for (std::size_t i = 0; i < to_parent.size(); ++i)
        if (h_greedy.colour[i] != c.colour[static_cast<std::size_t>(to_parent[i])])
            throw domain_error(
                "extend_via_dominating: greedy colouring of the subgraph disagrees "
                "with the given colouring");

    VertexOrdering rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!in_h[static_cast<std::size_t>(v)]) rest.push_back(v);
    std::sort(rest.begin(), rest.end(), [&](Vertex a, Vertex b) {
        int ca = c.colour[static_cast<std::size_t>(a)];
        int cb = c.colour[static_cast<std::size_t>(b)];
        return ca != cb ? ca < cb : a < b;
    });

    VertexOrdering order = order_h;
    order.insert(order.end(), rest.begin(), rest.end());

#ifndef NDEBUG
    // Inductive bound behind the construction: outside H, greedy never
    // exceeds the target colouring pointwise.
    Colouring replay = greedy_colouring(g, order);
    for (Vertex v : rest)
        assert(replay.colour[static_cast<std::size_t>(v)] <=
               c.colour[static_cast<std::size_t>(v)]);
    assert(replay.max_colour <= c.max_colour);
#endif
    return order;
}

} // namespace cgc
