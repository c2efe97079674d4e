#include "quasitoric/lawrence.hpp"

#include <algorithm>
#include <numeric>

#include "quasitoric/ctfp.hpp"
#include "quasitoric/exact_linalg.hpp"

namespace quasitoric {

std::vector<std::vector<int>> lawrence_lift(const std::vector<std::vector<int>>& t) {
    const int rows = static_cast<int>(t.size());
    const int cols = rows ? static_cast<int>(t[0].size()) : 0;
    for (const auto& row : t)
        if (static_cast<int>(row.size()) != cols) throw input_error("ragged matrix");

    std::vector<std::vector<int>> out;
    for (int r = 0; r < rows; ++r) {
        std::vector<int> row(2 * cols, 0);
        std::copy(t[r].begin(), t[r].end(), row.begin());
        out.push_back(std::move(row));
    }
    for (int r = 0; r < rows; ++r) {
        std::vector<int> row(2 * cols, 0);
        std::copy(t[r].begin(), t[r].end(), row.begin() + cols);
        out.push_back(std::move(row));
    }
    for (int c = 0; c < cols; ++c) {
        std::vector<int> row(2 * cols, 0);
        row[c] = row[c + cols] = 1;
        out.push_back(std::move(row));
    }
    return out;
}

LawrenceLift modified_lawrence_lift(const IndexSet& s) {
    if (s.k() != 2) throw precondition_error("the modified lift needs a 2-way index set");
    const int m = s.dims[0], n_states = s.dims[1], n = s.size();

    std::vector<Tuple> triples;
    for (int t = 0; t < n; ++t)
        triples.push_back({s.tuples[t][0], s.tuples[t][1], t + 1});
    for (int t = 0; t < n; ++t)
        triples.push_back({s.tuples[t][0] + m, s.tuples[t][1] + n_states, t + 1});

    LawrenceLift lift;
    lift.source = s;
    lift.sprime = make_index_set({2 * m, 2 * n_states, n}, triples);
    lift.lambda_prime = build_a_matrix(lift.sprime);

    // Direct block assembly: (A|0; 0|A), (B|0; 0|B), (I|I).
    MultipartitionMatrix base = build_a_matrix(s);
    auto doubled = [&](const MatrixBlock& block) {
        std::vector<std::vector<int>> rows;
        for (const MatrixRow& r : block.rows) {
            std::vector<int> row(2 * n, 0);
            std::copy(r.entries.begin(), r.entries.end(), row.begin());
            rows.push_back(std::move(row));
        }
        for (const MatrixRow& r : block.rows) {
            std::vector<int> row(2 * n, 0);
            std::copy(r.entries.begin(), r.entries.end(), row.begin() + n);
            rows.push_back(std::move(row));
        }
        return rows;
    };
    std::vector<std::vector<int>> direct = doubled(base.blocks[0]);
    for (auto& row : doubled(base.blocks[1])) direct.push_back(std::move(row));
    for (int c = 0; c < n; ++c) {
        std::vector<int> row(2 * n, 0);
        row[c] = row[c + n] = 1;
        direct.push_back(std::move(row));
    }
    if (lift.lambda_prime.dense() != direct)
        throw verification_error(
            "lifted design matrix differs from the direct block assembly");

    std::vector<std::vector<int>> lambda = lawrence_lift(base.dense());
    if (!rowspan_equal(to_rat_matrix(lambda), to_rat_matrix(direct)))
        throw verification_error(
            "stacked doubling and modified lift do not share a rowspan");
    return lift;
}

StarSide star_forest_side(const BipartiteGraph& g) {
    bool left_centers = true;   // every right vertex has degree <= 1
    bool right_centers = true;  // every left vertex has degree <= 1
    for (int j = 0; j < g.n; ++j) {
        int deg = 0;
        for (int i = 0; i < g.m; ++i) deg += g.edge(i, j) ? 1 : 0;
        if (deg > 1) left_centers = false;
    }
    for (int i = 0; i < g.m; ++i) {
        int deg = std::accumulate(g.adj[i].begin(), g.adj[i].end(), 0);
        if (deg > 1) right_centers = false;
    }
    if (left_centers && right_centers) return StarSide::either;
    if (left_centers) return StarSide::left;
    if (right_centers) return StarSide::right;
    return StarSide::none;
}

bool lift_is_ctfp(const IndexSet& s) {
    if (s.k() != 2) throw precondition_error("the lift criterion needs a 2-way index set");
    const bool star = is_star_forest_same_side(build_graph(s));

    LawrenceLift lift = modified_lawrence_lift(s);
    std::vector<CtfpFactorization> found = find_ctfp(lift.sprime);
    for (const CtfpFactorization& f : found)
        if (f.spec.j == 3)
            throw verification_error(
                "a lifted set admitted a split along the third coordinate");
    if (star != !found.empty())
        throw verification_error(
            "star criterion disagrees with split search on the lifted set");
    return star;
}

namespace {

// Edges in a unified vertex space; contraction relabels vertices.
long long count_trees(std::vector<std::pair<int, int>> edges, int nvert) {
    if (edges.empty()) return nvert == 1 ? 1 : 0;
    auto [u, v] = edges.back();
    edges.pop_back();
    long long without = count_trees(edges, nvert);
    // Contract v into u, dropping loops.
    std::vector<std::pair<int, int>> merged;
    for (auto [a, b] : edges) {
        if (a == v) a = u;
        if (b == v) b = u;
        if (a > v) --a;
        if (b > v) --b;
        if (a != b) merged.push_back({a, b});
    }
    return without + count_trees(std::move(merged), nvert - 1);
}

int component_count(const BipartiteGraph& g) {
    const int total = g.m + g.n;
    std::vector<bool> seen(total, false);
    int components = 0;
    for (int start = 0; start < total; ++start) {
        if (seen[start]) continue;
        ++components;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            if (x < g.m) {
                for (int j = 0; j < g.n; ++j)
                    if (g.edge(x, j) && !seen[g.m + j]) {
                        seen[g.m + j] = true;
                        stack.push_back(g.m + j);
                    }
            } else {
                for (int i = 0; i < g.m; ++i)
                    if (g.edge(i, x - g.m) && !seen[i]) {
                        seen[i] = true;
                        stack.push_back(i);
                    }
            }
        }
    }
    return components;
}

int edge_count(const BipartiteGraph& g) {
    int e = 0;
    for (int i = 0; i < g.m; ++i)
        for (int j = 0; j < g.n; ++j) e += g.edge(i, j) ? 1 : 0;
    return e;
}

}  // namespace

long long spanning_tree_count(const BipartiteGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.m; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.edge(i, j)) edges.push_back({i, g.m + j});
    if (edges.size() > 12)
        throw precondition_error("spanning-tree enumeration is limited to 12 edges");
    return count_trees(std::move(edges), g.m + g.n);
}

long long lift_ml_degree_prediction(const IndexSet& s) {
    if (s.k() != 2) throw precondition_error("the lift prediction needs a 2-way index set");
    BipartiteGraph g = build_graph(s);
    const int edges = edge_count(g);
    const int components = component_count(g);
    // Acyclicity <=> edges + components == vertices.
    if (edges + components == g.m + g.n) return 1;
    if (components > 1)
        throw precondition_error(
            "spanning-tree prediction is only supported for connected graphs "
            "(or forests, which predict 1)");
    return spanning_tree_count(g);
}

}  // namespace quasitoric
