#ifndef QUASITORIC_EXACT_LINALG_HPP
#define QUASITORIC_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include "quasitoric/multipartition.hpp"
#include "quasitoric/rational.hpp"

namespace quasitoric {

using RatMatrix = std::vector<RatVec>;               // row-major
using IntMatrix = std::vector<std::vector<Int>>;

RatMatrix to_rat_matrix(const std::vector<std::vector<int>>& m);
RatMatrix to_rat_matrix(const MultipartitionMatrix& m);

/// Coefficients c with sum_i c_i * row_i(M) = v, or nullopt if v is outside
/// the row span.  Deterministic: Gaussian elimination with leftmost pivots,
/// free coefficients set to zero — so the certificate is canonical.
std::optional<RatVec> rowspan_certificate(const RatMatrix& M, const RatVec& v);

inline bool rowspan_contains(const RatMatrix& M, const RatVec& v) {
    return rowspan_certificate(M, v).has_value();
}

/// True iff every row of G lies in the row span of M.
bool is_homogeneous_wrt(const RatMatrix& M, const RatMatrix& G);

/// True iff the row spans coincide (mutual containment).
bool rowspan_equal(const RatMatrix& A, const RatMatrix& B);

/// A lattice basis of { x integer : M x = 0 }, computed by integer row
/// reduction (so the basis generates the full integer kernel, not merely a
/// rational basis cleared of denominators).  Normalized: every vector is
/// primitive with its first nonzero entry positive, and the basis is sorted
/// lexicographically.
std::vector<IntVec> integer_kernel_basis(const std::vector<std::vector<int>>& M);

/// Membership of w in the lattice spanned by basis (rows).  Exact.
bool lattice_contains(const std::vector<IntVec>& basis, const IntVec& w);

/// The binomial x^u - x^v lies in the toric ideal of M iff M u = M v.
bool binomial_in_ideal(const std::vector<std::vector<int>>& M,
                       const std::vector<int>& u, const std::vector<int>& v);

}  // namespace quasitoric

#endif
