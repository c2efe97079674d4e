#ifndef QUASITORIC_MULTIPARTITION_HPP
#define QUASITORIC_MULTIPARTITION_HPP

#include <string>
#include <vector>

#include "quasitoric/index_set.hpp"

namespace quasitoric {

struct MatrixRow {
    std::string label;
    std::vector<int> entries;  // 0/1, one per column
};

struct MatrixBlock {
    std::vector<MatrixRow> rows;
};

/// A 0/1 block matrix in which every column has exactly one 1 per block.
/// Duplicate columns are permitted (they arise in derived constructions);
/// build_a_matrix never produces them.
struct MultipartitionMatrix {
    std::vector<Tuple> columns;  // column labels; duplicates allowed
    std::vector<MatrixBlock> blocks;

    int n_cols() const { return static_cast<int>(columns.size()); }
    int n_rows() const;
    int n_blocks() const { return static_cast<int>(blocks.size()); }
    // Flattened view, blocks stacked in order.
    std::vector<std::vector<int>> dense() const;
    // Index (within block b) of the row covering column c; -1 if none.
    int covering_row(int b, int c) const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> problems;
};

/// Checks the defining property block by block (exactly one 1 per column per
/// block, entries 0/1, consistent widths).  Never throws.
ValidationReport validate_multipartition(const MultipartitionMatrix& M);

/// The design matrix of a k-way index set: one block per axis, one row per
/// state, column for tuple t carries a single 1 per block at row t_axis.
/// Columns in lexicographic tuple order.  Row labels: axis letters a,b,c,...
/// with 1-based state subscripts ("a_1", "b_3", ...).
MultipartitionMatrix build_a_matrix(const IndexSet& s);

/// Row label for state `state` (1-based) of axis `axis` (0-based).
std::string axis_row_label(int axis, int state);

/// Generic builder used by derived constructions: columns are arbitrary coded
/// tuples (codes 1-based per position), block p has one row per code in
/// alphabet_labels[p], in that order.  Tuples may repeat.
MultipartitionMatrix build_matrix_from_coded_tuples(
    const std::vector<Tuple>& coded,
    const std::vector<std::vector<std::string>>& alphabet_labels,
    std::vector<Tuple> column_names = {});

}  // namespace quasitoric

#endif
