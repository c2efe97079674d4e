#ifndef QUASITORIC_MLE_IPS_HPP
#define QUASITORIC_MLE_IPS_HPP

#include <vector>

#include "quasitoric/ctfp.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/multipartition.hpp"
#include "quasitoric/rational.hpp"

namespace quasitoric {

struct IPSConfig {
    int max_cycles = 10000;
    double tolerance = 1e-10;  // scaled by the total count in the stop rule
};

/// Outcome of the float IPS path.
struct MLEResult {
    std::vector<double> p;
    int cycles = 0;
    double residual_max_abs = 0.0;
    bool converged = false;
};

/// Sum of u_s * log(p_s); -infinity when some u_s > 0 pairs with p_s = 0
/// (terms with u_s = 0 contribute nothing regardless of p_s).
double log_likelihood(const std::vector<double>& p, const std::vector<double>& u);

/// The moment-matching defect M*u - u_+ * (M*p), one entry per matrix row.
/// A distribution in the model is the MLE exactly when this vanishes.
RatVec birch_residual(const MultipartitionMatrix& M, const RatVec& u, const RatVec& p);
std::vector<double> birch_residual(const MultipartitionMatrix& M, const std::vector<double>& u,
                                   const std::vector<double>& p);

Rat max_abs(const RatVec& v);
double max_abs(const std::vector<double>& v);

/// One full cycle of iterative proportional scaling in exact arithmetic:
/// start uniform, then for each block in order (marginals taken at the start
/// of that block's update) scale p_s by (u_r/u_+)/p_r at the covering row r.
/// Counts may be rational; they must be nonnegative with positive total.
/// Throws precondition_error when a block marginal of the iterate vanishes
/// (possible with zero counts), naming the offending row.
RatVec ips_one_cycle(const MultipartitionMatrix& M, const RatVec& u);

/// Float IPS to convergence: the same update, cycled until the Birch
/// residual max-norm drops below tolerance * u_+ or max_cycles is reached.
/// At least one full cycle always runs.  Zero counts are best-effort: rows
/// whose iterate marginal vanishes are skipped, and non-convergence is
/// reported in the result rather than thrown.
MLEResult ips_run(const MultipartitionMatrix& M, const std::vector<double>& u,
                  const IPSConfig& config = {});

/// The multiplicative MLE of a glued model from its factor MLEs:
/// p(t) = pb(t|factor1) * pc(t|factor2) / d_i, where i is t's shared state
/// and d_i the shared-state marginal of pb.  Both factors must put the same
/// marginal on every shared state (exactly on the rational path, within
/// `tol` on the float path); precondition_error otherwise, and on zero
/// marginals.  Output order follows the glued set's lexicographic tuples.
RatVec tfp_mle_combine(const RatVec& pb, const RatVec& pc, const CtfpFactorization& fact);
std::vector<double> tfp_mle_combine(const std::vector<double>& pb,
                                    const std::vector<double>& pc,
                                    const CtfpFactorization& fact, double tol = 1e-8);

/// The leveled design matrix of a glued model, assembled from the factors'
/// leveled matrices: factor 1's blocks B_0..B_h1 followed by factor 2's
/// B_1..B_h2 (factor 2's block 0 would duplicate the shared block).  Both
/// factors must be 2-way with rational MLEs.  Columns follow the glued
/// set's lexicographic tuple order; the rowspan is verified to equal the
/// glued design matrix's (construction_error otherwise).
MultipartitionMatrix build_glued_bar_matrix(const CtfpFactorization& fact);

}  // namespace quasitoric

#endif
