#include "cgc/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace cgc {

namespace {

// Minimal dynamic bitset for candidate sets in the clique search.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(int n = 0) : w(static_cast<std::size_t>((n + 63) / 64), 0) {}

    void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= 1ull << (i & 63); }
    void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(1ull << (i & 63)); }
    bool test(int i) const {
        return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    int first() const {
        for (std::size_t b = 0; b < w.size(); ++b)
            if (w[b]) return static_cast<int>(b * 64) + std::countr_zero(w[b]);
        return -1;
    }
    void and_with(const Bits& o) {
        for (std::size_t b = 0; b < w.size(); ++b) w[b] &= o.w[b];
    }
    void andnot_with(const Bits& o) {
        for (std::size_t b = 0; b < w.size(); ++b) w[b] &= ~o.w[b];
    }
};

std::vector<Bits> adjacency_bits(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Bits> adj(static_cast<std::size_t>(n), Bits(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbours(u)) adj[static_cast<std::size_t>(u)].set(v);
    return adj;
}

// Branch and bound maximum clique with a greedy colouring bound. Stops as
// soon as `target` is reached when target > 0 (membership queries).
struct CliqueSearch {
    const std::vector<Bits>& adj;
    BudgetMeter& meter;
    int best = 0;
    int target; // 0: compute exact maximum

    bool done() const { return target > 0 && best >= target; }

    void expand(int r_size, const Bits& candidates) {
        meter.tick();
        if (done()) return;

        // Greedy colour classes over the candidates; class index bounds the
        // clique extension size.
        std::vector<std::pair<int, int>> order; // (vertex, colour)
        Bits uncoloured = candidates;
        int colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bits cls = uncoloured;
            while (cls.any()) {
                int v = cls.first();
                cls.reset(v);
                cls.andnot_with(adj[static_cast<std::size_t>(v)]);
                uncoloured.reset(v);
                order.emplace_back(v, colour);
            }
        }
        if (order.empty()) {
            best = std::max(best, r_size);
            return;
        }
        Bits pool = candidates;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto [v, c] = *it;
            if (r_size + c <= best) return;
            Bits next = pool;
            next.and_with(adj[static_cast<std::size_t>(v)]);
            if (r_size + 1 > best) best = r_size + 1;
            if (done()) return;
            expand(r_size + 1, next);
            if (done()) return;
            pool.reset(v);
        }
    }
};

int max_clique(const Graph& g, BudgetMeter& meter, int target = 0) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto adj = adjacency_bits(g);
    Bits all(n);
    for (int v = 0; v < n; ++v) all.set(v);
    CliqueSearch search{adj, meter, 0, target};
    search.expand(0, all);
    return search.best;
}

// DSATUR-ordered colouring machinery, used both as the heuristic upper
// bound and as the branching rule of the exact search.
struct KColouring {
    const Graph& g;
    BudgetMeter& meter;
    int k;
    const ColouringConstraint* constraint; // nullptr: unconstrained
    std::vector<int> colour;

    explicit KColouring(const Graph& graph, BudgetMeter& m, int kk,
                        const ColouringConstraint* cons)
        : g(graph), meter(m), k(kk), constraint(cons),
          colour(static_cast<std::size_t>(graph.vertex_count()), 0) {}

    // Highest saturation, ties by degree then smallest id.
    Vertex pick() const {
        Vertex best = -1;
        int best_sat = -1, best_deg = -1;
        std::vector<char> used(static_cast<std::size_t>(k) + 2, 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (colour[static_cast<std::size_t>(v)] != 0) continue;
            std::fill(used.begin(), used.end(), 0);
            int sat = 0;
            for (Vertex u : g.neighbours(v)) {
                int c = colour[static_cast<std::size_t>(u)];
                if (c >= 1 && c < static_cast<int>(used.size()) && !used[static_cast<std::size_t>(c)]) {
                    used[static_cast<std::size_t>(c)] = 1;
                    ++sat;
                }
            }
            int deg = g.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool feasible(Vertex v, int c) const {
        if (constraint && !constraint->allows(v, c)) return false;
        for (Vertex u : g.neighbours(v))
            if (colour[static_cast<std::size_t>(u)] == c) return false;
        return true;
    }

    // Exhaustive backtracking. Colour symmetry is broken via first-use
    // order, which is only sound without vertex/colour constraints.
    bool solve(int uncoloured, int max_used) {
        if (uncoloured == 0) return true;
        Vertex v = pick();
        int limit = constraint ? k : std::min(k, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (!feasible(v, c)) continue;
            meter.tick();
            colour[static_cast<std::size_t>(v)] = c;
            if (solve(uncoloured - 1, std::max(max_used, c))) return true;
            colour[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    }
};

Colouring dsatur_heuristic(const Graph& g) {
    const int n = g.vertex_count();
    BudgetMeter unlimited({});
    KColouring state(g, unlimited, n + 1, nullptr);
    Colouring result;
    result.colour.assign(static_cast<std::size_t>(n), 0);
    for (int placed = 0; placed < n; ++placed) {
        Vertex v = state.pick();
        int c = 1;
        while (!state.feasible(v, c)) ++c;
        state.colour[static_cast<std::size_t>(v)] = c;
        result.colour[static_cast<std::size_t>(v)] = c;
        result.max_colour = std::max(result.max_colour, c);
    }
    return result;
}

Colouring to_colouring(const std::vector<int>& colour) {
    Colouring c;
    c.colour = colour;
    for (int x : colour) c.max_colour = std::max(c.max_colour, x);
    return c;
}

// Induced odd cycle of length >= 5. DFS over induced paths rooted at the
// smallest cycle vertex.
struct OddHoleSearch {
    const Graph& g;
    BudgetMeter& meter;
    std::vector<char> in_path;
    std::vector<Vertex> path;

    bool dfs() {
        meter.tick();
        Vertex s = path.front();
        Vertex last = path.back();
        for (Vertex w : g.neighbours(last)) {
            if (w <= s || in_path[static_cast<std::size_t>(w)]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (path.size() >= 2 && g.has_edge(w, s)) {
                std::size_t cycle_len = path.size() + 1;
                if (cycle_len >= 5 && cycle_len % 2 == 1) return true;
                continue; // closing edge would be a chord of any longer path
            }
            if (path.size() == 1 && !g.has_edge(w, s)) continue; // unreachable guard
            in_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            if (dfs()) return true;
            path.pop_back();
            in_path[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }
};

bool has_odd_hole(const Graph& g, BudgetMeter& meter) {
    const int n = g.vertex_count();
    if (n < 5) return false;
    OddHoleSearch search{g, meter,
                         std::vector<char>(static_cast<std::size_t>(n), 0), {}};
    for (Vertex s = 0; s + 4 < n; ++s) {
        search.path.assign(1, s);
        search.in_path.assign(static_cast<std::size_t>(n), 0);
        search.in_path[static_cast<std::size_t>(s)] = 1;
        if (search.dfs()) return true;
    }
    return false;
}

} // namespace

int clique_number(const Graph& g, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    return max_clique(g, meter);
}

std::pair<int, Colouring> chromatic_number(const Graph& g, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    const int n = g.vertex_count();
    if (n == 0) return {0, Colouring{}};

    int lb = std::max(1, max_clique(g, meter));
    Colouring ub_col = dsatur_heuristic(g);
    if (lb == ub_col.max_colour) return {lb, ub_col};

    for (int k = lb; k < ub_col.max_colour; ++k) {
        KColouring state(g, meter, k, nullptr);
        if (state.solve(n, 0)) return {k, to_colouring(state.colour)};
    }
    return {ub_col.max_colour, ub_col};
}

std::optional<Colouring> constrained_optimal_colouring(const Graph& g, int k,
                                                       const ColouringConstraint& constraint,
                                                       const SearchBudget& budget) {
    if (k < 1) throw domain_error("colour count must be positive");
    for (auto [v, c] : constraint.forbidden) {
        g.check_vertex(v);
        if (c < 1) throw domain_error("forbidden colour must be positive");
    }
    BudgetMeter meter(budget);
    KColouring state(g, meter, k, &constraint);
    if (!state.solve(g.vertex_count(), 0)) return std::nullopt;
    return to_colouring(state.colour);
}

bool edge_in_k_clique(const Graph& g, Vertex u, Vertex v, int k, const SearchBudget& budget) {
    if (!g.has_edge(u, v)) throw domain_error("edge_in_k_clique requires an edge");
    if (k < 2) throw domain_error("edge_in_k_clique requires k >= 2");
    if (k == 2) return true;
    if (k > g.vertex_count()) return false;

    VertexSet common;
    std::set_intersection(g.neighbours(u).begin(), g.neighbours(u).end(),
                          g.neighbours(v).begin(), g.neighbours(v).end(),
                          std::back_inserter(common));
    if (static_cast<int>(common.size()) < k - 2) return false;
    BudgetMeter meter(budget);
    auto [sub, to_parent] = induced_subgraph(g, common);
    return max_clique(sub, meter, k - 2) >= k - 2;
}

bool is_perfect_small(const Graph& g, const SearchBudget& budget) {
    BudgetMeter meter(budget);
    if (has_odd_hole(g, meter)) return false;
    return !has_odd_hole(complement(g), meter);
}

} // namespace cgc
