#ifndef QUASITORIC_CLIQUE_POSET_HPP
#define QUASITORIC_CLIQUE_POSET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quasitoric/errors.hpp"
#include "quasitoric/index_set.hpp"

namespace quasitoric {

/// A biclique rows x cols fully contained in a 2-way index set.
/// Row/col states are 1-based and sorted.
struct Clique {
    std::vector<int> rows, cols;
    bool operator==(const Clique&) const = default;
};

using Cell = std::pair<int, int>;  // 1-based (row, col)

/// An inclusion-maximal pairwise intersection of maximal cliques.
struct MaxIntersection {
    std::vector<Cell> cells;                     // sorted
    std::vector<std::pair<int, int>> gen_pairs;  // generating clique index pairs (d<e), sorted
    // The unique generating pair (D,E) with rows(D) = rows(cells) and
    // cols(E) = cols(cells), when the cliques are comparable; (-1,-1) else.
    std::pair<int, int> cover_pair{-1, -1};
    int level = -1;  // assigned by build_poset when a leveled cover pair exists
};

/// All inclusion-maximal bicliques of S, canonically sorted (by row set,
/// then column set, lexicographically).
std::vector<Clique> maximal_cliques(const IndexSet& s);

/// Int(S): the inclusion-maximal sets among pairwise intersections of
/// distinct maximal cliques, sorted by canonical generating pair.
std::vector<MaxIntersection> maximal_intersections(const IndexSet& s,
                                                   const std::vector<Clique>& cliques);

/// Max(S) ordered by row-set inclusion, with covers read off intersection
/// maximality, plus the level function (covers raise the level by exactly
/// one; the minimum level in every connected component is 1).
struct CliquePoset {
    std::vector<Clique> cliques;
    std::vector<MaxIntersection> intersections;
    std::vector<std::pair<int, int>> covers;  // (lower, upper) 0-based, sorted
    std::vector<int> levels;                  // per clique, >= 1
    int h = 0;                                // max level
};

/// Throws not_tree_error when no consistent level assignment exists.
CliquePoset build_poset(const IndexSet& s);

/// The minimal maximal clique containing row i:  {rows whose support
/// contains cols(i)} x cols(i).  Asserts it is maximal and below every
/// maximal clique containing i.  i is 1-based.
Clique e_clique_row(const IndexSet& s, int i);

/// The maximal maximal clique containing column j (dual construction).
Clique e_clique_col(const IndexSet& s, int j);

/// An expansion of the indicator vector of C as a +/-1 combination of
/// design-matrix rows, produced by the alternating neighborhood recursion.
/// Both orientations are run (starting from the rows of C or from its
/// columns); the sparser expansion wins, ties favor the row orientation.
struct IndicatorCombination {
    std::map<int, int> row_coeffs, col_coeffs;  // 1-based state -> +/-1
    // Recursion trace: a_sets[k]/b_sets[k] hold A_{k+1}/B_{k+1}; in the
    // column orientation the roles of rows and columns are exchanged.
    std::vector<std::vector<int>> a_sets, b_sets;
    bool column_oriented = false;
};

/// Throws nonterminating_recursion (a precondition_error) when the
/// alternating sets revisit a vertex, which cannot happen for doubly
/// chordal inputs.  The result is verified exactly before returning.
IndicatorCombination indicator_combination(const IndexSet& s, const MaxIntersection& c);

struct nonterminating_recursion : precondition_error {
    explicit nonterminating_recursion(const std::string& msg) : precondition_error(msg) {}
};

}  // namespace quasitoric

#endif
