#include "quasitoric/clique_poset.hpp"

#include <algorithm>
#include <set>

#include "quasitoric/errors.hpp"

namespace quasitoric {

namespace {

std::vector<int> col_support(const IndexSet& s, int row) {
    std::vector<int> out;
    for (const Tuple& t : s.tuples)
        if (t[0] == row) out.push_back(t[1]);
    return out;  // sorted: tuples are lex-sorted
}

std::vector<int> row_support(const IndexSet& s, int col) {
    std::vector<int> out;
    for (const Tuple& t : s.tuples)
        if (t[1] == col) out.push_back(t[0]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> intersect_sets(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Clique> maximal_cliques(const IndexSet& s) {
    if (s.k() != 2) throw precondition_error("maximal cliques need a 2-way index set");
    // Every maximal biclique's column set is an intersection of row supports,
    // so close the row supports under pairwise intersection and read off the
    // extents.
    std::vector<std::vector<int>> supports;
    for (int i = 1; i <= s.dims[0]; ++i) supports.push_back(col_support(s, i));
    std::set<std::vector<int>> closed(supports.begin(), supports.end());
    std::vector<std::vector<int>> work(closed.begin(), closed.end());
    while (!work.empty()) {
        std::vector<int> c = std::move(work.back());
        work.pop_back();
        for (const auto& sup : supports) {
            std::vector<int> meet = intersect_sets(c, sup);
            if (!meet.empty() && closed.insert(meet).second) work.push_back(std::move(meet));
        }
    }
    std::vector<Clique> cliques;
    for (const auto& cols : closed) {
        if (cols.empty()) continue;
        Clique q;
        q.cols = cols;
        for (int i = 1; i <= s.dims[0]; ++i)
            if (subset_of(cols, supports[i - 1])) q.rows.push_back(i);
        if (!q.rows.empty()) cliques.push_back(std::move(q));
    }
    std::sort(cliques.begin(), cliques.end(), [](const Clique& a, const Clique& b) {
        // primary key: (smallest row, smallest column); full lex as a tie-break
        if (a.rows.front() != b.rows.front()) return a.rows.front() < b.rows.front();
        if (a.cols.front() != b.cols.front()) return a.cols.front() < b.cols.front();
        if (a.rows != b.rows) return a.rows < b.rows;
        return a.cols < b.cols;
    });
    return cliques;
}

std::vector<MaxIntersection> maximal_intersections(const IndexSet& s,
                                                   const std::vector<Clique>& cliques) {
    (void)s;
    const int nq = static_cast<int>(cliques.size());
    // Collect all nonempty pairwise intersections as cell sets.
    std::map<std::vector<Cell>, std::vector<std::pair<int, int>>> by_cells;
    for (int d = 0; d < nq; ++d)
        for (int e = d + 1; e < nq; ++e) {
            std::vector<int> rows = intersect_sets(cliques[d].rows, cliques[e].rows);
            std::vector<int> cols = intersect_sets(cliques[d].cols, cliques[e].cols);
            if (rows.empty() || cols.empty()) continue;
            std::vector<Cell> cells;
            for (int i : rows)
                for (int j : cols) cells.push_back({i, j});
            std::sort(cells.begin(), cells.end());
            by_cells[cells].push_back({d, e});
        }
    // Keep the inclusion-maximal cell sets.
    std::vector<MaxIntersection> out;
    for (const auto& [cells, pairs] : by_cells) {
        bool dominated = false;
        for (const auto& [other, op] : by_cells) {
            if (other.size() <= cells.size() || other == cells) continue;
            if (std::includes(other.begin(), other.end(), cells.begin(), cells.end())) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        MaxIntersection mi;
        mi.cells = cells;
        mi.gen_pairs = pairs;
        // The canonical pair: rows(D) equals the intersection's rows and
        // cols(E) its columns (exists whenever D,E are comparable).
        std::vector<int> rows, cols;
        for (const Cell& c : cells) {
            rows.push_back(c.first);
            cols.push_back(c.second);
        }
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        for (const auto& [d, e] : pairs) {
            bool d_lower = cliques[d].rows == rows && cliques[e].cols == cols &&
                           subset_of(cliques[d].rows, cliques[e].rows);
            bool e_lower = cliques[e].rows == rows && cliques[d].cols == cols &&
                           subset_of(cliques[e].rows, cliques[d].rows);
            if (d_lower) { mi.cover_pair = {d, e}; break; }
            if (e_lower) { mi.cover_pair = {e, d}; break; }
        }
        out.push_back(std::move(mi));
    }
    std::sort(out.begin(), out.end(), [](const MaxIntersection& a, const MaxIntersection& b) {
        auto key = [](const MaxIntersection& m) {
            return m.cover_pair.first >= 0
                       ? std::pair<int, int>{std::min(m.cover_pair.first, m.cover_pair.second),
                                             std::max(m.cover_pair.first, m.cover_pair.second)}
                       : m.gen_pairs.front();
        };
        if (key(a) != key(b)) return key(a) < key(b);
        return a.cells < b.cells;
    });
    return out;
}

CliquePoset build_poset(const IndexSet& s) {
    CliquePoset p;
    p.cliques = maximal_cliques(s);
    p.intersections = maximal_intersections(s, p.cliques);
    const int nq = static_cast<int>(p.cliques.size());

    // Covers: comparable pairs whose intersection is inclusion-maximal.
    std::set<std::pair<int, int>> inter_pairs;  // (lower, upper) of some Int(S) element
    for (const MaxIntersection& mi : p.intersections)
        if (mi.cover_pair.first >= 0) inter_pairs.insert(mi.cover_pair);
    for (int d = 0; d < nq; ++d)
        for (int e = 0; e < nq; ++e) {
            if (d == e) continue;
            if (!subset_of(p.cliques[d].rows, p.cliques[e].rows)) continue;
            if (inter_pairs.count({d, e})) p.covers.push_back({d, e});
        }
    std::sort(p.covers.begin(), p.covers.end());

    // Level assignment: BFS a potential along cover edges, per component.
    p.levels.assign(nq, 0);
    std::vector<std::vector<std::pair<int, int>>> nbr(nq);  // (other, delta)
    for (const auto& [d, e] : p.covers) {
        nbr[d].push_back({e, +1});
        nbr[e].push_back({d, -1});
    }
    std::vector<int> comp(nq, -1);
    for (int root = 0; root < nq; ++root) {
        if (comp[root] >= 0) continue;
        std::vector<int> queue = {root};
        std::vector<int> members;
        comp[root] = root;
        p.levels[root] = 0;
        size_t head = 0;
        while (head < queue.size()) {
            int v = queue[head++];
            members.push_back(v);
            for (const auto& [w, delta] : nbr[v]) {
                if (comp[w] < 0) {
                    comp[w] = root;
                    p.levels[w] = p.levels[v] + delta;
                    queue.push_back(w);
                } else if (p.levels[w] != p.levels[v] + delta) {
                    throw not_tree_error("no consistent level assignment on the clique poset");
                }
            }
        }
        int lo = p.levels[members.front()];
        for (int v : members) lo = std::min(lo, p.levels[v]);
        for (int v : members) p.levels[v] += 1 - lo;
    }
    p.h = *std::max_element(p.levels.begin(), p.levels.end());

    // Intersection levels: read off the cover pair.
    for (MaxIntersection& mi : p.intersections) {
        if (mi.cover_pair.first < 0) continue;
        int lo = p.levels[mi.cover_pair.first];
        int hi = p.levels[mi.cover_pair.second];
        if (hi != lo + 1)
            throw not_tree_error("cover pair levels differ by " + std::to_string(hi - lo));
        mi.level = lo;
    }
    return p;
}

Clique e_clique_row(const IndexSet& s, int i) {
    if (s.k() != 2) throw precondition_error("e_clique_row needs a 2-way index set");
    if (i < 1 || i > s.dims[0]) throw precondition_error("row out of range");
    Clique q;
    q.cols = col_support(s, i);
    for (int r = 1; r <= s.dims[0]; ++r)
        if (subset_of(q.cols, col_support(s, r))) q.rows.push_back(r);
    // Cross-checks: minimality below every maximal clique containing i.
    std::vector<Clique> maxes = maximal_cliques(s);
    if (std::find(maxes.begin(), maxes.end(), q) == maxes.end())
        throw verification_error("e_clique_row result is not a maximal clique");
    for (const Clique& d : maxes)
        if (std::binary_search(d.rows.begin(), d.rows.end(), i) && !subset_of(q.rows, d.rows))
            throw verification_error("e_clique_row result is not minimal");
    return q;
}

Clique e_clique_col(const IndexSet& s, int j) {
    if (s.k() != 2) throw precondition_error("e_clique_col needs a 2-way index set");
    if (j < 1 || j > s.dims[1]) throw precondition_error("column out of range");
    Clique q;
    q.rows = row_support(s, j);
    for (int c = 1; c <= s.dims[1]; ++c)
        if (subset_of(q.rows, row_support(s, c))) q.cols.push_back(c);
    std::vector<Clique> maxes = maximal_cliques(s);
    if (std::find(maxes.begin(), maxes.end(), q) == maxes.end())
        throw verification_error("e_clique_col result is not a maximal clique");
    for (const Clique& d : maxes)
        if (std::binary_search(d.cols.begin(), d.cols.end(), j) && !subset_of(d.rows, q.rows))
            throw verification_error("e_clique_col result is not maximal among cliques with column " +
                                     std::to_string(j));
    return q;
}

namespace {

struct Recursion {
    std::map<int, int> pos_coeffs, neg_coeffs;
    std::vector<std::vector<int>> a_sets, b_sets;
};

// Alternating neighborhood recursion on a bipartite adjacency structure.
// adj_a[x] lists the B-side neighbors of A-side vertex x (1-based).
Recursion run_recursion(const std::vector<std::vector<int>>& adj_a,
                        const std::vector<std::vector<int>>& adj_b,
                        std::vector<int> a1, std::vector<int> b0) {
    Recursion rec;
    std::set<int> seen_a(a1.begin(), a1.end()), seen_b(b0.begin(), b0.end());
    std::vector<int> a_prev = a1, b_prev = b0;
    rec.a_sets.push_back(a1);
    for (int x : a1) rec.pos_coeffs[x] = 1;
    for (int iter = 0;; ++iter) {
        if (iter > static_cast<int>(adj_a.size() + adj_b.size()))
            throw nonterminating_recursion("alternating recursion failed to terminate");
        std::set<int> bnext_s;
        for (int x : a_prev)
            for (int y : adj_a[x])
                if (!std::binary_search(b_prev.begin(), b_prev.end(), y)) bnext_s.insert(y);
        std::vector<int> b_next(bnext_s.begin(), bnext_s.end());
        rec.b_sets.push_back(b_next);
        for (int y : b_next) {
            if (seen_b.count(y))
                throw nonterminating_recursion("column revisited by the alternating recursion");
            seen_b.insert(y);
            rec.neg_coeffs[y] = -1;
        }
        if (b_next.empty()) break;
        std::set<int> anext_s;
        for (int y : b_next)
            for (int x : adj_b[y])
                if (!std::binary_search(a_prev.begin(), a_prev.end(), x)) anext_s.insert(x);
        std::vector<int> a_next(anext_s.begin(), anext_s.end());
        rec.a_sets.push_back(a_next);
        for (int x : a_next) {
            if (seen_a.count(x))
                throw nonterminating_recursion("row revisited by the alternating recursion");
            seen_a.insert(x);
            rec.pos_coeffs[x] = 1;
        }
        if (a_next.empty()) break;
        a_prev = std::move(a_next);
        b_prev = std::move(b_next);
    }
    return rec;
}

}  // namespace

IndicatorCombination indicator_combination(const IndexSet& s, const MaxIntersection& c) {
    if (s.k() != 2) throw precondition_error("indicator combinations need a 2-way index set");
    std::vector<std::vector<int>> row_adj(s.dims[0] + 1), col_adj(s.dims[1] + 1);
    for (const Tuple& t : s.tuples) {
        row_adj[t[0]].push_back(t[1]);
        col_adj[t[1]].push_back(t[0]);
    }
    std::vector<int> rows, cols;
    for (const Cell& cell : c.cells) {
        rows.push_back(cell.first);
        cols.push_back(cell.second);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

    auto verify = [&](const std::map<int, int>& rc, const std::map<int, int>& cc) {
        std::set<Cell> cell_set(c.cells.begin(), c.cells.end());
        for (const Tuple& t : s.tuples) {
            int val = 0;
            if (auto it = rc.find(t[0]); it != rc.end()) val += it->second;
            if (auto it = cc.find(t[1]); it != cc.end()) val += it->second;
            if (val != (cell_set.count({t[0], t[1]}) ? 1 : 0)) return false;
        }
        return true;
    };

    Recursion row_rec = run_recursion(row_adj, col_adj, rows, cols);
    Recursion col_rec = run_recursion(col_adj, row_adj, cols, rows);

    IndicatorCombination by_rows;
    by_rows.row_coeffs = row_rec.pos_coeffs;
    by_rows.col_coeffs = row_rec.neg_coeffs;
    by_rows.a_sets = row_rec.a_sets;
    by_rows.b_sets = row_rec.b_sets;
    by_rows.column_oriented = false;

    IndicatorCombination by_cols;
    by_cols.row_coeffs = col_rec.neg_coeffs;
    by_cols.col_coeffs = col_rec.pos_coeffs;
    by_cols.a_sets = col_rec.a_sets;
    by_cols.b_sets = col_rec.b_sets;
    by_cols.column_oriented = true;

    if (!verify(by_rows.row_coeffs, by_rows.col_coeffs) ||
        !verify(by_cols.row_coeffs, by_cols.col_coeffs))
        throw verification_error("indicator expansion failed exact evaluation");

    size_t nr = by_rows.row_coeffs.size() + by_rows.col_coeffs.size();
    size_t ncols = by_cols.row_coeffs.size() + by_cols.col_coeffs.size();
    return ncols < nr ? by_cols : by_rows;
}

}  // namespace quasitoric
