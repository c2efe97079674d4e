#include "quasitoric/chordal.hpp"

#include "quasitoric/errors.hpp"

namespace quasitoric {

BipartiteGraph build_graph(const IndexSet& s) {
    if (s.k() != 2) throw precondition_error("bipartite graph needs a 2-way index set");
    BipartiteGraph g;
    g.m = s.dims[0];
    g.n = s.dims[1];
    g.adj.assign(g.m, std::vector<bool>(g.n, false));
    for (const Tuple& t : s.tuples) g.adj[t[0] - 1][t[1] - 1] = true;
    return g;
}

namespace {

// Vertices get global ids: left i -> i, right j -> m + j.
struct CycleSearch {
    const BipartiteGraph& g;
    int nv;
    std::vector<std::vector<bool>> adj;       // nv x nv
    std::vector<std::vector<int>> neighbors;  // ascending
    std::vector<int> path;
    std::vector<bool> on_path;
    std::optional<std::vector<int>> found;

    explicit CycleSearch(const BipartiteGraph& graph) : g(graph) {
        nv = g.m + g.n;
        adj.assign(nv, std::vector<bool>(nv, false));
        neighbors.resize(nv);
        for (int i = 0; i < g.m; ++i)
            for (int j = 0; j < g.n; ++j)
                if (g.edge(i, j)) {
                    adj[i][g.m + j] = adj[g.m + j][i] = true;
                    neighbors[i].push_back(g.m + j);
                    neighbors[g.m + j].push_back(i);
                }
        on_path.assign(nv, false);
    }

    // Grow a chordless path whose minimum vertex is path[0]; report the first
    // chordless cycle of length >= 6 encountered.
    void extend() {
        if (found) return;
        int tail = path.back();
        for (int w : neighbors[tail]) {
            if (found) return;
            if (w <= path[0] || on_path[w]) continue;
            // A chord to any interior path vertex rules w out entirely.
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (adj[w][path[i]]) { chord = true; break; }
            if (chord) continue;
            if (path.size() >= 2 && adj[w][path[0]]) {
                // Closing edge; cycle length = path length + 1.
                if (path.size() + 1 >= 6) {
                    std::vector<int> cyc = path;
                    cyc.push_back(w);
                    found = cyc;
                    return;
                }
                // Extending past w would leave the chord w-path[0] behind.
                continue;
            }
            path.push_back(w);
            on_path[w] = true;
            extend();
            on_path[w] = false;
            path.pop_back();
        }
    }

    std::optional<std::vector<int>> run() {
        for (int s = 0; s < nv && !found; ++s) {
            path = {s};
            on_path.assign(nv, false);
            on_path[s] = true;
            extend();
        }
        return found;
    }
};

}  // namespace

bool verify_witness(const BipartiteGraph& g, const ChordalityWitness& w) {
    auto edge = [&g](const GraphVertex& a, const GraphVertex& b) {
        if (a.left == b.left) return false;
        return a.left ? g.edge(a.idx, b.idx) : g.edge(b.idx, a.idx);
    };
    const auto& vs = w.vertices;
    for (const GraphVertex& v : vs) {
        int lim = v.left ? g.m : g.n;
        if (v.idx < 0 || v.idx >= lim) return false;
    }
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j]) return false;

    if (w.kind == ChordalityWitness::Kind::InducedCycle) {
        const size_t len = vs.size();
        if (len < 6 || len % 2 != 0) return false;
        for (size_t i = 0; i < len; ++i)
            for (size_t j = i + 1; j < len; ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
                if (edge(vs[i], vs[j]) != consecutive) return false;
            }
        return true;
    }
    // Double-square: (v0,v1) shared edge, (v2,v3) and (v4,v5) the two
    // completing pairs; exactly seven induced edges.
    if (vs.size() != 6) return false;
    if (!vs[0].left || vs[1].left) return false;
    if (!vs[2].left || vs[3].left || !vs[4].left || vs[5].left) return false;
    bool want[6][6] = {};
    auto set_edge = [&want](int a, int b) { want[a][b] = want[b][a] = true; };
    set_edge(0, 1);
    set_edge(0, 3); set_edge(2, 1); set_edge(2, 3);
    set_edge(0, 5); set_edge(4, 1); set_edge(4, 5);
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (vs[i].left == vs[j].left) continue;
            if (edge(vs[i], vs[j]) != want[i][j]) return false;
        }
    return true;
}

std::optional<ChordalityWitness> find_chordality_violation(const BipartiteGraph& g) {
    if (auto cyc = CycleSearch(g).run()) {
        ChordalityWitness w;
        w.kind = ChordalityWitness::Kind::InducedCycle;
        for (int v : *cyc)
            w.vertices.push_back(v < g.m ? GraphVertex{true, v} : GraphVertex{false, v - g.m});
        return w;
    }
    // Double-squares: enumerate a shared edge (a,b) plus two completing pairs.
    for (int a = 0; a < g.m; ++a)
        for (int b = 0; b < g.n; ++b) {
            if (!g.edge(a, b)) continue;
            std::vector<std::pair<int, int>> squares;  // (c,d): a-b-c-d is a 4-cycle
            for (int c = 0; c < g.m; ++c) {
                if (c == a || !g.edge(c, b)) continue;
                for (int d = 0; d < g.n; ++d)
                    if (d != b && g.edge(a, d) && g.edge(c, d)) squares.push_back({c, d});
            }
            for (size_t p = 0; p < squares.size(); ++p)
                for (size_t q = p + 1; q < squares.size(); ++q) {
                    auto [c1, d1] = squares[p];
                    auto [c2, d2] = squares[q];
                    if (c1 == c2 || d1 == d2) continue;
                    if (g.edge(c1, d2) || g.edge(c2, d1)) continue;
                    ChordalityWitness w;
                    w.kind = ChordalityWitness::Kind::DoubleSquare;
                    w.vertices = {GraphVertex{true, a},  GraphVertex{false, b},
                                  GraphVertex{true, c1}, GraphVertex{false, d1},
                                  GraphVertex{true, c2}, GraphVertex{false, d2}};
                    return w;
                }
        }
    return std::nullopt;
}

bool ml_degree_one_2way(const IndexSet& s) {
    return is_doubly_chordal_bipartite(build_graph(s));
}

}  // namespace quasitoric
