#ifndef QUASITORIC_INDEX_SET_HPP
#define QUASITORIC_INDEX_SET_HPP

#include <string>
#include <vector>

namespace quasitoric {

// A point of [n_1] x ... x [n_k]; states are 1-based in all public I/O.
using Tuple = std::vector<int>;

std::string tuple_to_string(const Tuple& t);

/// A finite set S of allowed k-tuples over the box [n_1] x ... x [n_k].
///
/// Invariants (enforced by make_index_set):
///   * k >= 1, every dim >= 1;
///   * tuples are distinct, in range, and stored sorted lexicographically;
///   * S is surjective onto every axis: each state of each axis occurs in
///     at least one tuple.  Inputs violating surjectivity are rejected at
///     parse time; use trim() to renumber states instead.
struct IndexSet {
    std::vector<int> dims;
    std::vector<Tuple> tuples;  // sorted lex, no duplicates

    int k() const { return static_cast<int>(dims.size()); }
    int size() const { return static_cast<int>(tuples.size()); }
    bool contains(const Tuple& t) const;
};

bool operator==(const IndexSet& a, const IndexSet& b);

/// Validates and canonicalizes; throws input_error on any violation.
IndexSet make_index_set(std::vector<int> dims, std::vector<Tuple> tuples);

/// Drops unused states on every axis and renumbers the rest contiguously,
/// so the result satisfies the surjectivity invariant.
IndexSet trim(const std::vector<int>& dims, std::vector<Tuple> tuples);

/// Reorders the axes of S: axis `perm[a]` of the result is axis `a` of S
/// (perm is a 0-based permutation of 0..k-1 mapping old axis -> new position).
IndexSet permute_axes(const IndexSet& s, const std::vector<int>& perm);

/// 2-way incidence view: cell (i,j) is set iff (i,j) in S.  Rows/cols 0-based.
struct StarMatrix {
    int m = 0, n = 0;
    std::vector<std::vector<bool>> cell;  // m x n
};

StarMatrix star_matrix(const IndexSet& s);           // requires k == 2
IndexSet index_set_from_star(const StarMatrix& sm);  // inverse (requires surjectivity)

}  // namespace quasitoric

#endif
