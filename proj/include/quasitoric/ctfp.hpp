#ifndef QUASITORIC_CTFP_HPP
#define QUASITORIC_CTFP_HPP

#include <map>
#include <optional>
#include <vector>

#include "quasitoric/index_set.hpp"

namespace quasitoric {

/// A coordinate split: shared axis j, axes of the first factor inA (which
/// must contain j, at least one other axis, and not every axis).  1-based.
struct SplitSpec {
    int j = 0;
    std::vector<int> in_a;  // sorted ascending

    std::vector<int> in_b(int k) const;  // complementary factor axes (incl. j)
    bool operator==(const SplitSpec&) const = default;
};

void validate_split(const IndexSet& s, const SplitSpec& spec);

using TupleMultiset = std::map<Tuple, int>;

/// Projections of S onto the two factor axis sets, with multiplicity.
struct SplitProjections {
    TupleMultiset s1, s2;
    int j_pos_1 = 0, j_pos_2 = 0;  // position of the shared axis inside each factor
};

SplitProjections split(const IndexSet& s, const SplitSpec& spec);

/// Frequency form of the cTFP criterion: every element of S^1 with shared
/// state i occurs exactly as often as there are distinct elements of S^2
/// with shared state i, and symmetrically.  Equivalent to the swap form.
bool check_frequency_condition(const IndexSet& s, const SplitSpec& spec);

/// Two tuples sharing the j-state whose cross-concatenation leaves S.
struct SwapWitness {
    Tuple s1, s2, missing;
};

/// nullopt iff S is a cTFP along the split: for all s1,s2 in S with equal
/// j-state, both cross-concatenations stay in S.  Deterministic first
/// witness (lexicographic pair scan) otherwise.
std::optional<SwapWitness> check_swap_condition(const IndexSet& s, const SplitSpec& spec);

/// A successful factorization: deduplicated projections as index sets, with
/// the provenance needed to reassemble S by gluing.
struct CtfpFactorization {
    SplitSpec spec;
    IndexSet s1, s2;
    int j1 = 0, j2 = 0;  // 0-based position of the shared axis in s1/s2
    std::vector<int> axes_1, axes_2;  // original axes (0-based) per factor position
};

/// Throws condition_failed (with the swap witness) if the split fails.
/// On success the reassembly invariant glue(s1, s2) == S is re-verified.
CtfpFactorization factorize(const IndexSet& s, const SplitSpec& spec);

struct GlueResult {
    IndexSet glued;
    int shared_pos = 0;  // 0-based axis of the shared coordinate in `glued`
};

/// Toric fiber product of index sets: all concatenations of tuples agreeing
/// on the shared axis (j1 in s1, j2 in s2; 0-based).  Result axes are
/// (s1 axes except j1, shared axis, s2 axes except j2), in order.
GlueResult glue(const IndexSet& s1, int j1, const IndexSet& s2, int j2);

/// Glue the factors and permute axes back into S's original order.
IndexSet reassemble(const CtfpFactorization& f);

/// All canonical splits of a k-way set (j ascending, then inA lexicographic;
/// of each complementary pair only the one whose non-shared part contains the
/// smallest non-shared axis is listed).
std::vector<SplitSpec> enumerate_canonical_splits(int k);

/// Every canonical split under which S is a cTFP, factorized.  Requires k >= 3.
std::vector<CtfpFactorization> find_ctfp(const IndexSet& s);

/// ML-degree multiplicativity hook: when both factors are 2-way and both
/// have rational MLEs, the glued model does too (prediction 1).  nullopt
/// when the factors are out of that regime.
std::optional<long long> predicted_ml_degree(const CtfpFactorization& f);

}  // namespace quasitoric

#endif
