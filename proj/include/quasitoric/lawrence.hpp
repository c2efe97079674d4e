#ifndef QUASITORIC_LAWRENCE_HPP
#define QUASITORIC_LAWRENCE_HPP

#include <vector>

#include "quasitoric/chordal.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/index_set.hpp"
#include "quasitoric/multipartition.hpp"

namespace quasitoric {

/// The stacked doubling [T|0; 0|T; I|I] of an integer matrix T.
std::vector<std::vector<int>> lawrence_lift(const std::vector<std::vector<int>>& t);

/// Modified lift of a 2-way model with tuples (a_t, b_t), t = 1..n in
/// lexicographic order: the 3-way set on [2m] x [2n'] x [n] holding
/// (a_t, b_t, t) and (a_t + m, b_t + n', t), plus its design matrix, whose
/// blocks realize (A|0; 0|A), (B|0; 0|B), (I|I).
struct LawrenceLift {
    IndexSet source;
    IndexSet sprime;
    MultipartitionMatrix lambda_prime;  // = build_a_matrix(sprime)
};

/// Builds the lift and verifies two invariants on the way out
/// (verification_error on failure): the design matrix of the lifted set
/// equals the direct block assembly entrywise, and its rowspan equals the
/// rowspan of the plain stacked doubling of the source design matrix.
LawrenceLift modified_lawrence_lift(const IndexSet& s);

enum class StarSide { none, left, right, either };

/// left/right/either when every component of g is a star with all centers
/// in that partite set (single edges are stars with either center; "either"
/// means both orientations work everywhere); none otherwise.  Centers on
/// the left <=> every right vertex has degree <= 1, and dually.
StarSide star_forest_side(const BipartiteGraph& g);

inline bool is_star_forest_same_side(const BipartiteGraph& g) {
    return star_forest_side(g) != StarSide::none;
}

/// Whether the modified lift of s factors along a coordinate.  Decided by
/// the star criterion, then cross-checked against exhaustive split search
/// on the lifted set; disagreement, or any successful split along the third
/// coordinate, throws verification_error (theorem tripwires).
bool lift_is_ctfp(const IndexSet& s);

/// Spanning trees of the (multi)graph by deletion-contraction.  Exact
/// integer counting, guarded to at most 12 edges.
long long spanning_tree_count(const BipartiteGraph& g);

/// Predicted ML-degree of the lifted model: 1 when the graph is a forest
/// (connected or not), the spanning-tree count when it is connected, and
/// refused (precondition_error) for disconnected non-forests, where the
/// prediction's scope is unclear.
long long lift_ml_degree_prediction(const IndexSet& s);

}  // namespace quasitoric

#endif
