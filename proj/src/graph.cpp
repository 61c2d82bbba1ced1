#include "cgc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <stack>

namespace cgc {

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw domain_error("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return; // duplicate
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "c") continue;
        if (kind == "p") {
            if (n >= 0) throw parse_error("duplicate problem line", lineno);
            std::string what;
            long long pn = -1, pm = -1;
            ls >> what >> pn >> pm;
            if (!ls || what != "edge" || pn < 0 || pm < 0)
                throw parse_error("malformed header, expected 'p edge <n> <m>'", lineno);
            n = static_cast<int>(pn);
            continue;
        }
        if (kind == "e") {
            if (n < 0) throw parse_error("edge before problem line", lineno);
            long long u = 0, v = 0;
            ls >> u >> v;
            if (!ls) throw parse_error("malformed edge line", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("vertex id out of range 1.." + std::to_string(n), lineno);
            if (u == v) throw parse_error("self-loop", lineno);
            edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
            continue;
        }
        throw parse_error("unrecognized line type '" + kind + "'", lineno);
    }
    if (n < 0) throw parse_error("missing 'p edge <n> <m>' header");
    return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        std::istringstream ls(line);
        long long u = 0, v = 0;
        ls >> u >> v;
        std::string rest;
        if (!ls || (ls >> rest))
            throw parse_error("expected 'u v' pair", lineno);
        if (u < 0 || v < 0) throw parse_error("negative vertex id", lineno);
        if (u == v) throw parse_error("self-loop", lineno);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    return Graph::from_edges(max_id + 1, edges);
}

} // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

std::string to_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex v : g.neighbours(u))
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == n;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        std::queue<Vertex> q;
        q.push(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            comp.push_back(u);
            for (Vertex v : g.neighbours(u))
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace {

// Iterative Tarjan lowlink computing articulation points and the vertex
// sets of the biconnected components (via an edge stack).
struct BlockDecomposition {
    VertexSet cut;
    std::vector<VertexSet> blocks;
};

BlockDecomposition decompose_blocks(const Graph& g) {
    const int n = g.vertex_count();
    BlockDecomposition out;
    if (n == 0) return out;
    if (n == 1) {
        out.blocks.push_back({0});
        return out;
    }

    std::vector<int> num(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next_child(static_cast<std::size_t>(n), 0);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<Vertex, Vertex>> edge_stack;
    int counter = 0;

    auto pop_block = [&](Vertex u, Vertex v) {
        VertexSet block;
        std::pair<Vertex, Vertex> e;
        do {
            e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
        } while (e != std::make_pair(u, v));
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
    };

    for (Vertex root = 0; root < n; ++root) {
        if (num[static_cast<std::size_t>(root)] != -1) continue;
        int root_children = 0;
        std::stack<Vertex> stack;
        stack.push(root);
        num[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        while (!stack.empty()) {
            Vertex u = stack.top();
            const auto& nbrs = g.neighbours(u);
            if (next_child[static_cast<std::size_t>(u)] < nbrs.size()) {
                Vertex v = nbrs[next_child[static_cast<std::size_t>(u)]++];
                if (num[static_cast<std::size_t>(v)] == -1) {
                    parent[static_cast<std::size_t>(v)] = u;
                    edge_stack.emplace_back(u, v);
                    num[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
                    if (u == root) ++root_children;
                    stack.push(v);
                } else if (v != parent[static_cast<std::size_t>(u)] &&
                           num[static_cast<std::size_t>(v)] < num[static_cast<std::size_t>(u)]) {
                    edge_stack.emplace_back(u, v);
                    low[static_cast<std::size_t>(u)] =
                        std::min(low[static_cast<std::size_t>(u)], num[static_cast<std::size_t>(v)]);
                }
            } else {
                stack.pop();
                Vertex p = parent[static_cast<std::size_t>(u)];
                if (p != -1) {
                    low[static_cast<std::size_t>(p)] =
                        std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
                    if (low[static_cast<std::size_t>(u)] >= num[static_cast<std::size_t>(p)]) {
                        if (p != root) is_cut[static_cast<std::size_t>(p)] = 1;
                        pop_block(p, u);
                    }
                }
            }
        }
        if (root_children >= 2) is_cut[static_cast<std::size_t>(root)] = 1;
        // isolated vertex: its own trivial block
        if (g.degree(root) == 0) out.blocks.push_back({root});
    }

    for (Vertex v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) out.cut.push_back(v);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

} // namespace

VertexSet cut_vertices(const Graph& g) {
    if (!is_connected(g)) throw domain_error("cut_vertices requires a connected graph");
    return decompose_blocks(g).cut;
}

std::vector<VertexSet> biconnected_components(const Graph& g) {
    if (!is_connected(g))
        throw domain_error("biconnected_components requires a connected graph");
    return decompose_blocks(g).blocks;
}

namespace {

bool is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (Vertex s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex v : g.neighbours(u)) {
                if (side[static_cast<std::size_t>(v)] == -1) {
                    side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                    q.push(v);
                } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool block_is_clique(const Graph& g, const VertexSet& block) {
    for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t j = i + 1; j < block.size(); ++j)
            if (!g.has_edge(block[i], block[j])) return false;
    return true;
}

bool block_is_cycle(const Graph& g, const VertexSet& block) {
    if (block.size() <= 2) return true; // vertex or single edge: degenerate
    for (Vertex v : block) {
        int deg_in_block = 0;
        for (Vertex u : g.neighbours(v))
            if (std::binary_search(block.begin(), block.end(), u)) ++deg_in_block;
        if (deg_in_block != 2) return false;
    }
    return true;
}

bool every_block(const Graph& g, bool (*pred)(const Graph&, const VertexSet&)) {
    for (const auto& comp : connected_components(g)) {
        if (comp.size() == 1) continue;
        auto [sub, to_parent] = induced_subgraph(g, comp);
        for (const auto& block : decompose_blocks(sub).blocks)
            if (!pred(sub, block)) return false;
    }
    return true;
}

// Series-parallel style reduction. Returns true iff the graph melts away
// entirely, which happens exactly for the K4-minor-free inputs.
bool reduces_to_empty(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbours(v);
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    int alive_count = n;

    auto detach = [&](Vertex a, Vertex b) {
        auto& aa = adj[static_cast<std::size_t>(a)];
        aa.erase(std::find(aa.begin(), aa.end(), b));
    };
    auto attach = [&](Vertex a, Vertex b) {
        auto& aa = adj[static_cast<std::size_t>(a)];
        aa.insert(std::lower_bound(aa.begin(), aa.end(), b), b);
    };

    bool progress = true;
    while (progress && alive_count > 0) {
        progress = false;
        for (Vertex v = 0; v < n; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            auto& av = adj[static_cast<std::size_t>(v)];
            if (av.size() > 2) continue;
            if (av.size() == 2) {
                Vertex a = av[0], b = av[1];
                detach(a, v);
                detach(b, v);
                auto& aa = adj[static_cast<std::size_t>(a)];
                if (!std::binary_search(aa.begin(), aa.end(), b)) {
                    attach(a, b);
                    attach(b, a);
                } // else: parallel edge, dropped
            } else if (av.size() == 1) {
                detach(av[0], v);
            }
            av.clear();
            alive[static_cast<std::size_t>(v)] = 0;
            --alive_count;
            progress = true;
        }
    }
    return alive_count == 0;
}

} // namespace

bool recognize(const Graph& g, GraphClass cls) {
    switch (cls) {
    case GraphClass::bipartite:
        return is_bipartite(g);
    case GraphClass::block:
        return every_block(g, block_is_clique);
    case GraphClass::cactus:
        return every_block(g, block_is_cycle);
    case GraphClass::k4_minor_free:
        return reduces_to_empty(g);
    }
    throw domain_error("unknown graph class");
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet sorted = s;
    normalize_vertex_set(g, sorted);
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < sorted.size(); ++i)
        local[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
    Graph sub(static_cast<int>(sorted.size()));
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (Vertex u : g.neighbours(sorted[i])) {
            int lu = local[static_cast<std::size_t>(u)];
            if (lu > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), lu);
        }
    return {std::move(sub), std::move(sorted)};
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph co(n);
    for (Vertex u = 0; u < n; ++u) {
        const auto& nbrs = g.neighbours(u);
        std::size_t k = 0;
        for (Vertex v = u + 1; v < n; ++v) {
            while (k < nbrs.size() && nbrs[k] < v) ++k;
            if (k < nbrs.size() && nbrs[k] == v) continue;
            co.add_edge(u, v);
        }
    }
    return co;
}

void normalize_vertex_set(const Graph& g, VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

} // namespace cgc
