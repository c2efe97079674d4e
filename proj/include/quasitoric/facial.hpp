#ifndef QUASITORIC_FACIAL_HPP
#define QUASITORIC_FACIAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasitoric/chordal.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/index_set.hpp"

namespace quasitoric {

/// The 2-way model cut out of a k-way model by fixing every axis except two:
/// (s,t) is kept exactly when the full tuple with s at axis a, t at axis b,
/// and the fixed states elsewhere belongs to S.  The raw pair list may skip
/// states (trim before structural tests); empty slices are legal.
struct Slice {
    int a = 0, b = 0;  // 1-based distinct axes, a < b
    Tuple fixed;       // states of the remaining axes, ascending axis order
    int na = 0, nb = 0;
    std::vector<std::pair<int, int>> pairs;  // sorted lexicographically

    bool empty() const { return pairs.empty(); }
};

Slice slice(const IndexSet& s, int a, int b, const Tuple& fixed);

/// The slice's pairs as a standalone 2-way index set with unused states
/// dropped and the rest renumbered.  Requires a nonempty slice.
IndexSet slice_index_set(const Slice& sl);

/// Certifies the slice as a face of the model polytope: the 0/1 functional
/// that ignores axes a,b and marks the fixed states elsewhere must evaluate
/// to k-2 exactly on the slice's columns of the design matrix and to less
/// everywhere else.  Forced by construction; kept as an evaluated tripwire.
bool face_functional_check(const IndexSet& s, const Slice& sl);

struct SliceRecord {
    int a = 0, b = 0;  // 1-based axes
    Tuple fixed;
    int size = 0;
    bool empty = false;
    bool rational_mle = true;  // vacuous true for empty slices
    std::optional<ChordalityWitness> witness;  // on the trimmed slice graph
};

/// Scan of every 2-way slice (axis pairs a < b in lexicographic order, fixed
/// states in lexicographic order).  passed is true iff every nonempty slice
/// has a rational MLE — a necessary condition for the full model, not a
/// sufficient one (`note` records that caveat on success).
struct SliceScanReport {
    bool passed = true;
    int slices_checked = 0;
    int empty_slices = 0;
    std::vector<SliceRecord> records;
    std::optional<int> first_failing;  // index into records
    std::string note;
};

SliceScanReport slices_necessary_condition(const IndexSet& s);

}  // namespace quasitoric

#endif
