#ifndef QUASITORIC_REPARAM_HPP
#define QUASITORIC_REPARAM_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "quasitoric/clique_poset.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/index_set.hpp"
#include "quasitoric/multipartition.hpp"

namespace quasitoric {

/// Per-level row/column bookkeeping for the leveled block construction:
/// x[r] lists the level-r maximal intersections, rows[r] the rows not yet
/// consumed by a clique of level <= r, cols[r] the columns already finished
/// (in a level-<=r clique but no deeper one).
struct LevelSets {
    std::vector<std::vector<int>> x;     // x[r]: indices into poset.intersections
    std::vector<std::vector<int>> rows;  // rows[r] = R_r, 1-based ascending
    std::vector<std::vector<int>> cols;  // cols[r] = C_r, 1-based ascending
};

LevelSets level_sets(const IndexSet& s, const CliquePoset& poset);

/// Identity of one row of a leveled block: an intersection indicator, an
/// original row (a_i), or an original column (b_j).
struct BarLabel {
    enum class Kind { inter, row, col };
    Kind kind = Kind::row;
    int idx = 0;  // inter: 0-based index into poset.intersections; else 1-based state
    auto operator<=>(const BarLabel&) const = default;
};

/// Display text: "D1^D3" for intersections (via the lower/upper clique
/// pair), "a_i" / "b_j" otherwise.
std::string bar_label_text(const BarLabel& l, const CliquePoset& poset);

/// The leveled (h+1)-block design matrix of a 2-way model with rational MLE,
/// together with the coded tuple each original column maps to.
struct ReparamMatrix {
    IndexSet source;
    CliquePoset poset;
    LevelSets sets;
    MultipartitionMatrix matrix;                      // blocks B_0..B_h, columns as in the 2-way matrix
    std::vector<std::vector<BarLabel>> block_labels;  // block -> row -> identity
    std::vector<Tuple> bar_tuples;  // per column: coded (h+1)-tuple, states 1-based per block

    int h() const { return poset.h; }
};

/// Builds the leveled matrix. Verifies on the way out: multipartition
/// validity, no empty rows, and exact rowspan equality with the plain
/// design matrix (both throw construction_error on failure).
/// Requires a doubly chordal bipartite model (not_doubly_chordal otherwise).
ReparamMatrix build_bar_matrix(const IndexSet& s);

/// The (h+1)-way index set realized by the coded tuples.
IndexSet bar_index_set(const ReparamMatrix& rep);

/// Swap-criterion verification along every internal coordinate of the coded
/// tuples (coordinates 2..h, 1-based).  The model factors there by
/// construction; a false entry means a broken invariant, not a user error.
struct InternalCtfpReport {
    std::vector<int> coordinates;  // 1-based coordinate checked
    std::vector<bool> passed;
    bool all_passed = true;
};

InternalCtfpReport verify_internal_ctfp(const ReparamMatrix& rep);

/// Index of one part in a decomposition step: a surviving row (a_i), a
/// finished column (b_j), or a maximal clique (D_q).
struct PartLabel {
    enum class Kind { row, col, clique };
    Kind kind = Kind::row;
    int idx = 0;  // row/col: 1-based state; clique: 0-based index into poset.cliques
    auto operator<=>(const PartLabel&) const = default;
};

std::string part_label_text(const PartLabel& l);

struct DecompositionPart {
    PartLabel x;
    std::vector<int> g;                            // indices into LinearDecompositionStep::t
    std::vector<std::pair<BarLabel, int>> h;       // next-block labels with multiplicity
};

/// One step of the peel-off-one-block decomposition: T is the set of
/// distinct truncations after position r, tprime the multiset of next-block
/// labels, and parts the G/H assignment that reassembles the next
/// truncation level.
struct LinearDecompositionStep {
    int r = 0;
    std::vector<Tuple> t;                          // coded, lex sorted
    std::vector<std::pair<BarLabel, int>> tprime;  // in block r+1 row order
    std::vector<DecompositionPart> parts;          // sorted by part label
};

/// Runs steps r = 0..h-1 and verifies each one exactly: G partitions T, H
/// partitions T', concatenation reproduces the truncation multiset, both
/// part families are homogeneous (indicator vectors lie in the respective
/// rowspans), and the next block's kernel lattice is generated by
/// differences of equal-label unit vectors.  Any failure throws
/// decomposition_invariant_failure.
std::vector<LinearDecompositionStep> linear_decomposition(const ReparamMatrix& rep);

}  // namespace quasitoric

#endif
