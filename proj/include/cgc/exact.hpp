#ifndef CGC_EXACT_HPP
#define CGC_EXACT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "cgc/budget.hpp"
#include "cgc/graph.hpp"
#include "cgc/greedy.hpp"

namespace cgc {

/// (vertex, forbidden colour) pairs a colouring must avoid.
struct ColouringConstraint {
    std::vector<std::pair<Vertex, int>> forbidden;

    bool allows(Vertex v, int colour) const {
        for (auto [fv, fc] : forbidden)
            if (fv == v && fc == colour) return false;
        return true;
    }
};

/// Exact maximum clique size (0 for the empty graph).
int clique_number(const Graph& g, const SearchBudget& budget = {});

/// Exact chromatic number with a witness colouring. Iterative deepening
/// from the clique lower bound to a greedy upper bound, DSATUR branching.
std::pair<int, Colouring> chromatic_number(const Graph& g,
                                           const SearchBudget& budget = {});

/// A proper k-colouring honouring the constraint, or nullopt if none
/// exists. Never approximates: budget exhaustion raises budget_error.
std::optional<Colouring> constrained_optimal_colouring(
    const Graph& g, int k, const ColouringConstraint& constraint,
    const SearchBudget& budget = {});

/// True iff some k-clique contains both endpoints of the edge uv.
bool edge_in_k_clique(const Graph& g, Vertex u, Vertex v, int k,
                      const SearchBudget& budget = {});

/// Perfection test for small graphs (intended n <= ~20): searches for an
/// induced odd cycle of length >= 5 in g and in its complement.
bool is_perfect_small(const Graph& g, const SearchBudget& budget = {});

} // namespace cgc

#endif // CGC_EXACT_HPP
