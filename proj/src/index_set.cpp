#include "quasitoric/index_set.hpp"

#include <algorithm>
#include <set>

#include "quasitoric/errors.hpp"

namespace quasitoric {

std::string tuple_to_string(const Tuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

bool IndexSet::contains(const Tuple& t) const {
    return std::binary_search(tuples.begin(), tuples.end(), t);
}

bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.dims == b.dims && a.tuples == b.tuples;
}

IndexSet make_index_set(std::vector<int> dims, std::vector<Tuple> tuples) {
    const int k = static_cast<int>(dims.size());
    if (k < 1) throw input_error("index set needs at least one axis");
    for (int d : dims)
        if (d < 1) throw input_error("axis dimensions must be positive");
    if (tuples.empty()) throw input_error("index set must contain at least one tuple");

    for (const Tuple& t : tuples) {
        if (static_cast<int>(t.size()) != k)
            throw input_error("tuple " + tuple_to_string(t) + " has arity " +
                              std::to_string(t.size()) + ", expected " + std::to_string(k));
        for (int a = 0; a < k; ++a)
            if (t[a] < 1 || t[a] > dims[a])
                throw input_error("tuple " + tuple_to_string(t) + " leaves axis " +
                                  std::to_string(a + 1) + " range [1," +
                                  std::to_string(dims[a]) + "]");
    }
    std::sort(tuples.begin(), tuples.end());
    if (std::adjacent_find(tuples.begin(), tuples.end()) != tuples.end())
        throw input_error("duplicate tuple in index set");

    // Surjectivity onto every axis.
    for (int a = 0; a < k; ++a) {
        std::vector<bool> seen(dims[a] + 1, false);
        for (const Tuple& t : tuples) seen[t[a]] = true;
        for (int s = 1; s <= dims[a]; ++s)
            if (!seen[s])
                throw input_error("state " + std::to_string(s) + " of axis " +
                                  std::to_string(a + 1) +
                                  " is unused; trim the index set first");
    }
    return IndexSet{std::move(dims), std::move(tuples)};
}

IndexSet trim(const std::vector<int>& dims, std::vector<Tuple> tuples) {
    const int k = static_cast<int>(dims.size());
    if (k < 1) throw input_error("index set needs at least one axis");
    if (tuples.empty()) throw input_error("index set must contain at least one tuple");
    for (const Tuple& t : tuples)
        if (static_cast<int>(t.size()) != k)
            throw input_error("tuple arity mismatch in trim");

    std::vector<std::vector<int>> remap(k);
    std::vector<int> new_dims(k, 0);
    for (int a = 0; a < k; ++a) {
        std::set<int> used;
        for (const Tuple& t : tuples) {
            if (t[a] < 1 || t[a] > dims[a]) throw input_error("tuple state out of range in trim");
            used.insert(t[a]);
        }
        remap[a].assign(dims[a] + 1, 0);
        int next = 1;
        for (int s : used) remap[a][s] = next++;
        new_dims[a] = next - 1;
    }
    for (Tuple& t : tuples)
        for (int a = 0; a < k; ++a) t[a] = remap[a][t[a]];
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    return make_index_set(new_dims, std::move(tuples));
}

IndexSet permute_axes(const IndexSet& s, const std::vector<int>& perm) {
    const int k = s.k();
    if (static_cast<int>(perm.size()) != k) throw input_error("axis permutation arity mismatch");
    std::vector<int> dims(k);
    std::vector<Tuple> tuples(s.tuples.size(), Tuple(k));
    for (int a = 0; a < k; ++a) dims[perm[a]] = s.dims[a];
    for (size_t t = 0; t < s.tuples.size(); ++t)
        for (int a = 0; a < k; ++a) tuples[t][perm[a]] = s.tuples[t][a];
    return make_index_set(std::move(dims), std::move(tuples));
}

StarMatrix star_matrix(const IndexSet& s) {
    if (s.k() != 2) throw precondition_error("star matrix needs a 2-way index set");
    StarMatrix sm;
    sm.m = s.dims[0];
    sm.n = s.dims[1];
    sm.cell.assign(sm.m, std::vector<bool>(sm.n, false));
    for (const Tuple& t : s.tuples) sm.cell[t[0] - 1][t[1] - 1] = true;
    return sm;
}

IndexSet index_set_from_star(const StarMatrix& sm) {
    std::vector<Tuple> tuples;
    for (int i = 0; i < sm.m; ++i)
        for (int j = 0; j < sm.n; ++j)
            if (sm.cell[i][j]) tuples.push_back({i + 1, j + 1});
    return make_index_set({sm.m, sm.n}, std::move(tuples));
}

}  // namespace quasitoric
