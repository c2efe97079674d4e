#include "quasitoric/facial.hpp"

#include <algorithm>

#include "quasitoric/multipartition.hpp"

namespace quasitoric {

namespace {

std::vector<int> other_axes(int k, int a, int b) {
    std::vector<int> rest;
    for (int c = 1; c <= k; ++c)
        if (c != a && c != b) rest.push_back(c);
    return rest;
}

}  // namespace

Slice slice(const IndexSet& s, int a, int b, const Tuple& fixed) {
    const int k = s.k();
    if (k < 3) throw precondition_error("slices need a k-way index set with k >= 3");
    if (a < 1 || b < 1 || a > k || b > k || a == b)
        throw input_error("slice axes must be two distinct axes in 1..k");
    if (a > b) std::swap(a, b);
    std::vector<int> rest = other_axes(k, a, b);
    if (fixed.size() != rest.size())
        throw input_error("fixed states must cover exactly the non-slice axes");
    for (size_t p = 0; p < rest.size(); ++p)
        if (fixed[p] < 1 || fixed[p] > s.dims[rest[p] - 1])
            throw input_error("fixed state out of range on axis " + std::to_string(rest[p]));

    Slice sl;
    sl.a = a;
    sl.b = b;
    sl.fixed = fixed;
    sl.na = s.dims[a - 1];
    sl.nb = s.dims[b - 1];
    for (const Tuple& t : s.tuples) {
        bool match = true;
        for (size_t p = 0; p < rest.size(); ++p)
            if (t[rest[p] - 1] != fixed[p]) {
                match = false;
                break;
            }
        if (match) sl.pairs.push_back({t[a - 1], t[b - 1]});
    }
    std::sort(sl.pairs.begin(), sl.pairs.end());
    return sl;
}

IndexSet slice_index_set(const Slice& sl) {
    if (sl.empty()) throw precondition_error("an empty slice has no index set");
    std::vector<Tuple> tuples;
    for (const auto& [x, y] : sl.pairs) tuples.push_back({x, y});
    return trim({sl.na, sl.nb}, std::move(tuples));
}

bool face_functional_check(const IndexSet& s, const Slice& sl) {
    const int k = s.k();
    std::vector<int> rest = other_axes(k, sl.a, sl.b);

    MultipartitionMatrix mat = build_a_matrix(s);
    // Functional over the matrix rows: zero on the two slice axes, the
    // fixed-state indicator on every other axis.
    std::vector<std::vector<int>> weight(k);
    for (int axis = 0; axis < k; ++axis) weight[axis].assign(s.dims[axis] + 1, 0);
    for (size_t p = 0; p < rest.size(); ++p) weight[rest[p] - 1][sl.fixed[p]] = 1;

    for (int c = 0; c < s.size(); ++c) {
        int value = 0;
        for (int axis = 0; axis < k; ++axis) {
            int row = mat.covering_row(axis, c);
            value += weight[axis][row + 1];
        }
        bool in_slice = true;
        for (size_t p = 0; p < rest.size(); ++p)
            if (s.tuples[c][rest[p] - 1] != sl.fixed[p]) {
                in_slice = false;
                break;
            }
        if (in_slice != (value == k - 2)) return false;
        if (!in_slice && value >= k - 2) return false;
    }
    return true;
}

SliceScanReport slices_necessary_condition(const IndexSet& s) {
    const int k = s.k();
    if (k < 3) throw precondition_error("the slice scan needs a k-way index set with k >= 3");

    SliceScanReport report;
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            std::vector<int> rest = other_axes(k, a, b);
            // Enumerate fixed-state tuples in lexicographic order.
            Tuple fixed(rest.size(), 1);
            while (true) {
                Slice sl = slice(s, a, b, fixed);
                SliceRecord rec;
                rec.a = a;
                rec.b = b;
                rec.fixed = fixed;
                rec.size = static_cast<int>(sl.pairs.size());
                rec.empty = sl.empty();
                ++report.slices_checked;
                if (rec.empty) {
                    ++report.empty_slices;
                } else {
                    IndexSet flat = slice_index_set(sl);
                    rec.witness = find_chordality_violation(build_graph(flat));
                    rec.rational_mle = !rec.witness.has_value();
                    if (!rec.rational_mle && !report.first_failing) {
                        report.first_failing = static_cast<int>(report.records.size());
                        report.passed = false;
                    }
                }
                report.records.push_back(std::move(rec));

                // Advance the odometer.
                int pos = static_cast<int>(rest.size()) - 1;
                while (pos >= 0) {
                    if (++fixed[pos] <= s.dims[rest[pos] - 1]) break;
                    fixed[pos] = 1;
                    --pos;
                }
                if (pos < 0) break;
            }
        }
    if (report.passed)
        report.note =
            "necessary condition passed - NOT sufficient: the converse fails, "
            "e.g. the no-three-way-interaction model on three binary variables "
            "has ML degree 3 even though every 2-way slice has a rational MLE";
    return report;
}

}  // namespace quasitoric
