#include "quasitoric/multipartition.hpp"

#include "quasitoric/errors.hpp"

namespace quasitoric {

int MultipartitionMatrix::n_rows() const {
    int r = 0;
    for (const auto& b : blocks) r += static_cast<int>(b.rows.size());
    return r;
}

std::vector<std::vector<int>> MultipartitionMatrix::dense() const {
    std::vector<std::vector<int>> out;
    out.reserve(n_rows());
    for (const auto& b : blocks)
        for (const auto& r : b.rows) out.push_back(r.entries);
    return out;
}

int MultipartitionMatrix::covering_row(int b, int c) const {
    const auto& rows = blocks[b].rows;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (rows[r].entries[c] == 1) return r;
    return -1;
}

ValidationReport validate_multipartition(const MultipartitionMatrix& M) {
    ValidationReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.problems.push_back(std::move(msg));
    };
    const int nc = M.n_cols();
    if (M.blocks.empty()) fail("matrix has no blocks");
    for (int b = 0; b < M.n_blocks(); ++b) {
        const auto& rows = M.blocks[b].rows;
        if (rows.empty()) fail("block " + std::to_string(b + 1) + " has no rows");
        for (const auto& r : rows) {
            if (static_cast<int>(r.entries.size()) != nc)
                fail("row '" + r.label + "' has " + std::to_string(r.entries.size()) +
                     " entries, expected " + std::to_string(nc));
            for (int e : r.entries)
                if (e != 0 && e != 1) fail("row '" + r.label + "' has a non-0/1 entry");
        }
        for (int c = 0; c < nc; ++c) {
            int ones = 0;
            for (const auto& r : rows)
                if (c < static_cast<int>(r.entries.size()) && r.entries[c] == 1) ++ones;
            if (ones != 1)
                fail("column " + std::to_string(c + 1) + " has " + std::to_string(ones) +
                     " ones in block " + std::to_string(b + 1));
        }
    }
    return rep;
}

std::string axis_row_label(int axis, int state) {
    if (axis < 0 || axis >= 26) throw precondition_error("axis letter out of range");
    return std::string(1, static_cast<char>('a' + axis)) + "_" + std::to_string(state);
}

MultipartitionMatrix build_a_matrix(const IndexSet& s) {
    MultipartitionMatrix M;
    M.columns = s.tuples;  // already sorted lexicographically
    const int nc = s.size();
    M.blocks.resize(s.k());
    for (int a = 0; a < s.k(); ++a) {
        auto& block = M.blocks[a];
        block.rows.resize(s.dims[a]);
        for (int st = 1; st <= s.dims[a]; ++st) {
            auto& row = block.rows[st - 1];
            row.label = axis_row_label(a, st);
            row.entries.assign(nc, 0);
        }
        for (int c = 0; c < nc; ++c) block.rows[s.tuples[c][a] - 1].entries[c] = 1;
    }
    return M;
}

MultipartitionMatrix build_matrix_from_coded_tuples(
    const std::vector<Tuple>& coded,
    const std::vector<std::vector<std::string>>& alphabet_labels,
    std::vector<Tuple> column_names) {
    const int k = static_cast<int>(alphabet_labels.size());
    if (coded.empty()) throw precondition_error("no columns");
    MultipartitionMatrix M;
    M.columns = column_names.empty() ? coded : std::move(column_names);
    if (M.columns.size() != coded.size())
        throw precondition_error("column name count mismatch");
    const int nc = static_cast<int>(coded.size());
    M.blocks.resize(k);
    for (int p = 0; p < k; ++p) {
        auto& block = M.blocks[p];
        const auto& labels = alphabet_labels[p];
        block.rows.resize(labels.size());
        for (size_t r = 0; r < labels.size(); ++r) {
            block.rows[r].label = labels[r];
            block.rows[r].entries.assign(nc, 0);
        }
        for (int c = 0; c < nc; ++c) {
            if (static_cast<int>(coded[c].size()) != k)
                throw precondition_error("coded tuple arity mismatch");
            int code = coded[c][p];
            if (code < 1 || code > static_cast<int>(labels.size()))
                throw precondition_error("coded tuple state out of alphabet range");
            block.rows[code - 1].entries[c] = 1;
        }
    }
    return M;
}

}  // namespace quasitoric
