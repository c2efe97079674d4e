#include "quasitoric/ctfp.hpp"

#include <algorithm>

#include "quasitoric/chordal.hpp"
#include "quasitoric/errors.hpp"

namespace quasitoric {

std::vector<int> SplitSpec::in_b(int k) const {
    std::vector<int> out;
    for (int a = 1; a <= k; ++a)
        if (a == j || !std::binary_search(in_a.begin(), in_a.end(), a)) out.push_back(a);
    return out;
}

void validate_split(const IndexSet& s, const SplitSpec& spec) {
    const int k = s.k();
    if (spec.j < 1 || spec.j > k)
        throw input_error("split axis " + std::to_string(spec.j) + " out of range");
    if (!std::is_sorted(spec.in_a.begin(), spec.in_a.end()) ||
        std::adjacent_find(spec.in_a.begin(), spec.in_a.end()) != spec.in_a.end())
        throw input_error("inA must be a sorted set of axes");
    for (int a : spec.in_a)
        if (a < 1 || a > k) throw input_error("inA axis out of range");
    if (!std::binary_search(spec.in_a.begin(), spec.in_a.end(), spec.j))
        throw input_error("inA must contain the shared axis");
    if (spec.in_a.size() <= 1) throw input_error("inA must contain an axis besides the shared one");
    if (static_cast<int>(spec.in_a.size()) >= k)
        throw input_error("inA must leave at least one axis to the second factor");
}

namespace {

Tuple project(const Tuple& t, const std::vector<int>& axes) {
    Tuple out;
    out.reserve(axes.size());
    for (int a : axes) out.push_back(t[a - 1]);
    return out;
}

int position_of(const std::vector<int>& axes, int j) {
    return static_cast<int>(std::lower_bound(axes.begin(), axes.end(), j) - axes.begin());
}

}  // namespace

SplitProjections split(const IndexSet& s, const SplitSpec& spec) {
    validate_split(s, spec);
    std::vector<int> axes_b = spec.in_b(s.k());
    SplitProjections out;
    out.j_pos_1 = position_of(spec.in_a, spec.j);
    out.j_pos_2 = position_of(axes_b, spec.j);
    for (const Tuple& t : s.tuples) {
        ++out.s1[project(t, spec.in_a)];
        ++out.s2[project(t, axes_b)];
    }
    return out;
}

bool check_frequency_condition(const IndexSet& s, const SplitSpec& spec) {
    SplitProjections pr = split(s, spec);
    // Distinct-element counts per shared state.
    std::map<int, int> d1, d2;
    for (const auto& [t, mult] : pr.s1) ++d1[t[pr.j_pos_1]];
    for (const auto& [t, mult] : pr.s2) ++d2[t[pr.j_pos_2]];
    for (const auto& [t, mult] : pr.s1)
        if (mult != d2[t[pr.j_pos_1]]) return false;
    for (const auto& [t, mult] : pr.s2)
        if (mult != d1[t[pr.j_pos_2]]) return false;
    return true;
}

std::optional<SwapWitness> check_swap_condition(const IndexSet& s, const SplitSpec& spec) {
    validate_split(s, spec);
    const int j0 = spec.j - 1;
    std::vector<bool> in_a_mask(s.k(), false);
    for (int a : spec.in_a) in_a_mask[a - 1] = true;
    const auto& ts = s.tuples;  // sorted, so the pair scan is lexicographic
    for (size_t p = 0; p < ts.size(); ++p)
        for (size_t q = p + 1; q < ts.size(); ++q) {
            if (ts[p][j0] != ts[q][j0]) continue;
            Tuple cross_a(s.k()), cross_b(s.k());
            for (int a = 0; a < s.k(); ++a) {
                cross_a[a] = in_a_mask[a] ? ts[p][a] : ts[q][a];
                cross_b[a] = in_a_mask[a] ? ts[q][a] : ts[p][a];
            }
            if (!s.contains(cross_a)) return SwapWitness{ts[p], ts[q], cross_a};
            if (!s.contains(cross_b)) return SwapWitness{ts[p], ts[q], cross_b};
        }
    return std::nullopt;
}

GlueResult glue(const IndexSet& s1, int j1, const IndexSet& s2, int j2) {
    if (j1 < 0 || j1 >= s1.k() || j2 < 0 || j2 >= s2.k())
        throw precondition_error("glue position out of range");
    if (s1.dims[j1] != s2.dims[j2])
        throw precondition_error("shared axis dimensions disagree: " +
                                 std::to_string(s1.dims[j1]) + " vs " +
                                 std::to_string(s2.dims[j2]));
    GlueResult out;
    std::vector<int> dims;
    for (int a = 0; a < s1.k(); ++a)
        if (a != j1) dims.push_back(s1.dims[a]);
    out.shared_pos = static_cast<int>(dims.size());
    dims.push_back(s1.dims[j1]);
    for (int a = 0; a < s2.k(); ++a)
        if (a != j2) dims.push_back(s2.dims[a]);

    std::vector<Tuple> tuples;
    for (const Tuple& t1 : s1.tuples)
        for (const Tuple& t2 : s2.tuples) {
            if (t1[j1] != t2[j2]) continue;
            Tuple t;
            t.reserve(dims.size());
            for (int a = 0; a < s1.k(); ++a)
                if (a != j1) t.push_back(t1[a]);
            t.push_back(t1[j1]);
            for (int a = 0; a < s2.k(); ++a)
                if (a != j2) t.push_back(t2[a]);
            tuples.push_back(std::move(t));
        }
    out.glued = make_index_set(std::move(dims), std::move(tuples));
    return out;
}

CtfpFactorization factorize(const IndexSet& s, const SplitSpec& spec) {
    if (auto w = check_swap_condition(s, spec))
        throw condition_failed("not a cTFP along this split: " + tuple_to_string(w->s1) +
                               " and " + tuple_to_string(w->s2) + " require " +
                               tuple_to_string(w->missing));
    SplitProjections pr = split(s, spec);
    CtfpFactorization f;
    f.spec = spec;
    f.j1 = pr.j_pos_1;
    f.j2 = pr.j_pos_2;
    std::vector<int> axes_b = spec.in_b(s.k());
    for (int a : spec.in_a) f.axes_1.push_back(a - 1);
    for (int a : axes_b) f.axes_2.push_back(a - 1);

    std::vector<int> dims1, dims2;
    std::vector<Tuple> t1, t2;
    for (int a : spec.in_a) dims1.push_back(s.dims[a - 1]);
    for (int a : axes_b) dims2.push_back(s.dims[a - 1]);
    for (const auto& [t, mult] : pr.s1) t1.push_back(t);
    for (const auto& [t, mult] : pr.s2) t2.push_back(t);
    f.s1 = make_index_set(std::move(dims1), std::move(t1));
    f.s2 = make_index_set(std::move(dims2), std::move(t2));

    if (!(reassemble(f) == s))
        throw verification_error("cTFP reassembly does not reproduce the input set");
    return f;
}

IndexSet reassemble(const CtfpFactorization& f) {
    GlueResult g = glue(f.s1, f.j1, f.s2, f.j2);
    // Result positions carry original axes (axes_1 minus shared, shared,
    // axes_2 minus shared); permute back to the original order.
    std::vector<int> original_axis;
    for (size_t p = 0; p < f.axes_1.size(); ++p)
        if (static_cast<int>(p) != f.j1) original_axis.push_back(f.axes_1[p]);
    original_axis.push_back(f.axes_1[f.j1]);
    for (size_t p = 0; p < f.axes_2.size(); ++p)
        if (static_cast<int>(p) != f.j2) original_axis.push_back(f.axes_2[p]);
    return permute_axes(g.glued, original_axis);
}

std::vector<SplitSpec> enumerate_canonical_splits(int k) {
    if (k < 3) throw precondition_error("splits need at least three axes");
    std::vector<SplitSpec> specs;
    for (int j = 1; j <= k; ++j) {
        std::vector<int> others;
        for (int a = 1; a <= k; ++a)
            if (a != j) others.push_back(a);
        const int no = static_cast<int>(others.size());
        std::vector<std::vector<int>> parts;
        for (unsigned mask = 1; mask + 1 < (1u << no); ++mask) {
            if (!(mask & 1u)) continue;  // canonical: part contains the smallest other axis
            SplitSpec spec;
            spec.j = j;
            for (int b = 0; b < no; ++b)
                if (mask & (1u << b)) spec.in_a.push_back(others[b]);
            spec.in_a.push_back(j);
            std::sort(spec.in_a.begin(), spec.in_a.end());
            specs.push_back(std::move(spec));
        }
    }
    std::sort(specs.begin(), specs.end(), [](const SplitSpec& a, const SplitSpec& b) {
        if (a.j != b.j) return a.j < b.j;
        return a.in_a < b.in_a;
    });
    return specs;
}

std::vector<CtfpFactorization> find_ctfp(const IndexSet& s) {
    if (s.k() < 3)
        throw precondition_error("cTFP search needs a set with at least three axes");
    std::vector<CtfpFactorization> out;
    for (const SplitSpec& spec : enumerate_canonical_splits(s.k()))
        if (!check_swap_condition(s, spec)) out.push_back(factorize(s, spec));
    return out;
}

std::optional<long long> predicted_ml_degree(const CtfpFactorization& f) {
    if (f.s1.k() != 2 || f.s2.k() != 2) return std::nullopt;
    if (ml_degree_one_2way(f.s1) && ml_degree_one_2way(f.s2)) return 1;
    return std::nullopt;
}

}  // namespace quasitoric
