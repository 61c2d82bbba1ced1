#ifndef CGC_GREEDY_HPP
#define CGC_GREEDY_HPP

#include <vector>

#include "cgc/graph.hpp"

namespace cgc {

/// A permutation of 0..n-1 of the ambient graph.
using VertexOrdering = std::vector<Vertex>;

/// Complete proper colouring: colour[v] is a positive integer for every
/// vertex, max_colour the largest value used.
struct Colouring {
    std::vector<int> colour;
    int max_colour = 0;

    int vertex_count() const { return static_cast<int>(colour.size()); }
    bool operator==(const Colouring&) const = default;
};

bool is_proper(const Graph& g, const Colouring& c);

/// First-Fit: walk the ordering, giving each vertex the smallest positive
/// integer unused among its already-coloured neighbours.
Colouring greedy_colouring(const Graph& g, const VertexOrdering& order);

struct SeededColouring {
    Colouring colouring;
    /// Largest colour among the vertices after the first one (0 when n <= 1).
    int tail_max = 0;
};

/// Like greedy_colouring but the first vertex receives `seed` instead of 1.
SeededColouring seeded_greedy(const Graph& g, const VertexOrdering& order, int seed);

/// True iff every prefix of the ordering induces a connected subgraph;
/// equivalently each vertex after the first has an earlier neighbour.
bool is_connected_ordering(const Graph& g, const VertexOrdering& order);

/// Orders vertices by colour ascending (ties by id). Greedy along the
/// result assigns every vertex a colour no larger than c gave it.
VertexOrdering ordering_from_colouring(const Graph& g, const Colouring& c);

/// Prepends a connected ordering of a dominating subgraph H to the rest of
/// the vertices sorted by c-colour. Preconditions are verified: c proper,
/// G[h] connected and dominating, order_h a connected ordering of G[h]
/// whose greedy colouring agrees with c on h. The full greedy run along
/// the result then uses exactly c.max_colour colours.
VertexOrdering extend_via_dominating(const Graph& g, const Colouring& c,
                                     const VertexSet& h_vertices,
                                     const VertexOrdering& order_h);

/// Throws domain_error unless order is a permutation of g's vertices.
void check_ordering(const Graph& g, const VertexOrdering& order);

} // namespace cgc

#endif // CGC_GREEDY_HPP
