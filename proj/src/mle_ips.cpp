#include "quasitoric/mle_ips.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quasitoric/exact_linalg.hpp"
#include "quasitoric/reparam.hpp"

namespace quasitoric {

namespace {

void check_lengths(const MultipartitionMatrix& M, size_t u_len, size_t p_len) {
    if (static_cast<int>(u_len) != M.n_cols() || static_cast<int>(p_len) != M.n_cols())
        throw input_error("count/distribution length does not match the matrix columns");
}

int tuple_index(const IndexSet& s, const Tuple& t) {
    auto it = std::lower_bound(s.tuples.begin(), s.tuples.end(), t);
    if (it == s.tuples.end() || *it != t)
        throw verification_error("glued tuple projects outside a factor: " + tuple_to_string(t));
    return static_cast<int>(it - s.tuples.begin());
}

}  // namespace

double log_likelihood(const std::vector<double>& p, const std::vector<double>& u) {
    if (p.size() != u.size())
        throw input_error("distribution and counts have different lengths");
    double acc = 0.0;
    for (size_t s = 0; s < p.size(); ++s) {
        if (u[s] == 0.0) continue;
        if (p[s] <= 0.0) return -std::numeric_limits<double>::infinity();
        acc += u[s] * std::log(p[s]);
    }
    return acc;
}

RatVec birch_residual(const MultipartitionMatrix& M, const RatVec& u, const RatVec& p) {
    check_lengths(M, u.size(), p.size());
    Rat uplus(0);
    for (const Rat& x : u) uplus += x;
    RatVec out;
    for (const MatrixBlock& block : M.blocks)
        for (const MatrixRow& row : block.rows) {
            Rat mu(0), mp(0);
            for (int c = 0; c < M.n_cols(); ++c)
                if (row.entries[c]) {
                    mu += u[c];
                    mp += p[c];
                }
            out.push_back(mu - uplus * mp);
        }
    return out;
}

std::vector<double> birch_residual(const MultipartitionMatrix& M, const std::vector<double>& u,
                                   const std::vector<double>& p) {
    check_lengths(M, u.size(), p.size());
    double uplus = 0.0;
    for (double x : u) uplus += x;
    std::vector<double> out;
    for (const MatrixBlock& block : M.blocks)
        for (const MatrixRow& row : block.rows) {
            double mu = 0.0, mp = 0.0;
            for (int c = 0; c < M.n_cols(); ++c)
                if (row.entries[c]) {
                    mu += u[c];
                    mp += p[c];
                }
            out.push_back(mu - uplus * mp);
        }
    return out;
}

Rat max_abs(const RatVec& v) {
    Rat best(0);
    for (const Rat& x : v) {
        Rat a = abs(x);
        if (a > best) best = a;
    }
    return best;
}

double max_abs(const std::vector<double>& v) {
    double best = 0.0;
    for (double x : v) best = std::max(best, std::fabs(x));
    return best;
}

RatVec ips_one_cycle(const MultipartitionMatrix& M, const RatVec& u) {
    const int ncols = M.n_cols();
    check_lengths(M, u.size(), u.size());
    Rat uplus(0);
    for (const Rat& x : u) {
        if (x < 0) throw precondition_error("counts must be nonnegative");
        uplus += x;
    }
    if (uplus <= 0) throw precondition_error("counts must have positive total");

    RatVec p(ncols, Rat(1, ncols));
    for (int b = 0; b < M.n_blocks(); ++b) {
        const MatrixBlock& block = M.blocks[b];
        const int nrows = static_cast<int>(block.rows.size());
        RatVec mu(nrows, Rat(0)), mp(nrows, Rat(0));
        for (int r = 0; r < nrows; ++r)
            for (int c = 0; c < ncols; ++c)
                if (block.rows[r].entries[c]) {
                    mu[r] += u[c];
                    mp[r] += p[c];
                }
        for (int c = 0; c < ncols; ++c) {
            int r = M.covering_row(b, c);
            if (r < 0) throw input_error("matrix column lacks a covering row in some block");
            if (mp[r] == 0)
                throw precondition_error("iterate marginal vanished at row '" +
                                         block.rows[r].label +
                                         "'; the exact update is undefined (zero counts)");
            p[c] *= (mu[r] / uplus) / mp[r];
        }
    }
    return p;
}

MLEResult ips_run(const MultipartitionMatrix& M, const std::vector<double>& u,
                  const IPSConfig& config) {
    const int ncols = M.n_cols();
    check_lengths(M, u.size(), u.size());
    if (config.tolerance <= 0) throw input_error("tolerance must be positive");
    if (config.max_cycles < 1) throw input_error("max_cycles must be at least 1");
    double uplus = 0.0;
    for (double x : u) {
        if (x < 0) throw precondition_error("counts must be nonnegative");
        uplus += x;
    }
    if (uplus <= 0) throw precondition_error("counts must have positive total");

    MLEResult res;
    res.p.assign(ncols, 1.0 / ncols);
    do {
        for (int b = 0; b < M.n_blocks(); ++b) {
            const MatrixBlock& block = M.blocks[b];
            const int nrows = static_cast<int>(block.rows.size());
            std::vector<double> mu(nrows, 0.0), mp(nrows, 0.0);
            for (int r = 0; r < nrows; ++r)
                for (int c = 0; c < ncols; ++c)
                    if (block.rows[r].entries[c]) {
                        mu[r] += u[c];
                        mp[r] += res.p[c];
                    }
            for (int c = 0; c < ncols; ++c) {
                int r = M.covering_row(b, c);
                if (r < 0) throw input_error("matrix column lacks a covering row in some block");
                if (mp[r] > 0.0) res.p[c] *= (mu[r] / uplus) / mp[r];
                // mp[r] == 0 forces p to stay 0 on that row's columns.
            }
        }
        ++res.cycles;
        res.residual_max_abs = max_abs(birch_residual(M, u, res.p));
        res.converged = res.residual_max_abs < config.tolerance * uplus;
    } while (!res.converged && res.cycles < config.max_cycles);
    return res;
}

namespace {

// Shared scaffolding for both combine paths: factor projections and the
// column index of each glued tuple inside each factor.
struct CombinePlan {
    IndexSet glued;
    std::vector<int> c1, c2;     // per glued column: factor column index
    std::vector<int> shared;     // per glued column: shared state
};

CombinePlan make_plan(const CtfpFactorization& fact) {
    CombinePlan plan;
    plan.glued = reassemble(fact);
    for (const Tuple& t : plan.glued.tuples) {
        Tuple t1(fact.axes_1.size()), t2(fact.axes_2.size());
        for (size_t p = 0; p < fact.axes_1.size(); ++p) t1[p] = t[fact.axes_1[p]];
        for (size_t p = 0; p < fact.axes_2.size(); ++p) t2[p] = t[fact.axes_2[p]];
        plan.c1.push_back(tuple_index(fact.s1, t1));
        plan.c2.push_back(tuple_index(fact.s2, t2));
        plan.shared.push_back(t1[fact.j1]);
    }
    return plan;
}

}  // namespace

RatVec tfp_mle_combine(const RatVec& pb, const RatVec& pc, const CtfpFactorization& fact) {
    if (static_cast<int>(pb.size()) != fact.s1.size() ||
        static_cast<int>(pc.size()) != fact.s2.size())
        throw input_error("factor distribution lengths do not match the factorization");
    const int nshared = fact.s1.dims[fact.j1];
    RatVec d1(nshared + 1, Rat(0)), d2(nshared + 1, Rat(0));
    for (int c = 0; c < fact.s1.size(); ++c) d1[fact.s1.tuples[c][fact.j1]] += pb[c];
    for (int c = 0; c < fact.s2.size(); ++c) d2[fact.s2.tuples[c][fact.j2]] += pc[c];
    for (int i = 1; i <= nshared; ++i)
        if (d1[i] != d2[i])
            throw precondition_error("factor marginals disagree at shared state " +
                                     std::to_string(i));

    CombinePlan plan = make_plan(fact);
    RatVec out;
    for (size_t c = 0; c < plan.glued.tuples.size(); ++c) {
        const Rat& di = d1[plan.shared[c]];
        if (di == 0)
            throw precondition_error("zero marginal at shared state " +
                                     std::to_string(plan.shared[c]));
        out.push_back(pb[plan.c1[c]] * pc[plan.c2[c]] / di);
    }
    return out;
}

std::vector<double> tfp_mle_combine(const std::vector<double>& pb, const std::vector<double>& pc,
                                    const CtfpFactorization& fact, double tol) {
    if (static_cast<int>(pb.size()) != fact.s1.size() ||
        static_cast<int>(pc.size()) != fact.s2.size())
        throw input_error("factor distribution lengths do not match the factorization");
    const int nshared = fact.s1.dims[fact.j1];
    std::vector<double> d1(nshared + 1, 0.0), d2(nshared + 1, 0.0);
    for (int c = 0; c < fact.s1.size(); ++c) d1[fact.s1.tuples[c][fact.j1]] += pb[c];
    for (int c = 0; c < fact.s2.size(); ++c) d2[fact.s2.tuples[c][fact.j2]] += pc[c];
    for (int i = 1; i <= nshared; ++i)
        if (std::fabs(d1[i] - d2[i]) > tol)
            throw precondition_error("factor marginals disagree at shared state " +
                                     std::to_string(i));

    CombinePlan plan = make_plan(fact);
    std::vector<double> out;
    for (size_t c = 0; c < plan.glued.tuples.size(); ++c) {
        double di = d1[plan.shared[c]];
        if (di == 0.0)
            throw precondition_error("zero marginal at shared state " +
                                     std::to_string(plan.shared[c]));
        out.push_back(pb[plan.c1[c]] * pc[plan.c2[c]] / di);
    }
    return out;
}

MultipartitionMatrix build_glued_bar_matrix(const CtfpFactorization& fact) {
    if (fact.s1.k() != 2 || fact.s2.k() != 2)
        throw precondition_error("the glued leveled matrix needs 2-way factors");

    // Orient the chain so the shared axis is the column axis of factor 1 and
    // the row axis of factor 2; then factor 2's block 0 is the duplicate.
    const bool flip1 = (fact.j1 == 0), flip2 = (fact.j2 == 1);
    IndexSet t1 = flip1 ? permute_axes(fact.s1, {1, 0}) : fact.s1;
    IndexSet t2 = flip2 ? permute_axes(fact.s2, {1, 0}) : fact.s2;
    std::vector<int> ax1 = fact.axes_1, ax2 = fact.axes_2;
    if (flip1) std::swap(ax1[0], ax1[1]);
    if (flip2) std::swap(ax2[0], ax2[1]);

    ReparamMatrix r1 = build_bar_matrix(t1);
    ReparamMatrix r2 = build_bar_matrix(t2);
    IndexSet glued = reassemble(fact);
    const int ncols = glued.size();

    std::vector<int> c1(ncols), c2(ncols);
    for (int c = 0; c < ncols; ++c) {
        Tuple p1{glued.tuples[c][ax1[0]], glued.tuples[c][ax1[1]]};
        Tuple p2{glued.tuples[c][ax2[0]], glued.tuples[c][ax2[1]]};
        c1[c] = tuple_index(t1, p1);
        c2[c] = tuple_index(t2, p2);
    }

    MultipartitionMatrix out;
    out.columns = glued.tuples;
    auto append_blocks = [&](const ReparamMatrix& rep, const std::vector<int>& colmap,
                             const std::vector<int>& axes, bool second) {
        for (int b = (second ? 1 : 0); b <= rep.h(); ++b) {
            MatrixBlock block;
            for (int row = 0; row < static_cast<int>(rep.matrix.blocks[b].rows.size()); ++row) {
                const BarLabel& l = rep.block_labels[b][row];
                std::string label;
                switch (l.kind) {
                    case BarLabel::Kind::row:
                        label = axis_row_label(axes[0], l.idx);
                        break;
                    case BarLabel::Kind::col:
                        label = axis_row_label(axes[1], l.idx);
                        break;
                    case BarLabel::Kind::inter: {
                        const auto& [d, e] = rep.poset.intersections[l.idx].cover_pair;
                        const char* tick = second ? "'" : "";
                        label = "D" + std::to_string(d + 1) + tick + "^D" +
                                std::to_string(e + 1) + tick;
                        break;
                    }
                }
                std::vector<int> entries(ncols);
                for (int c = 0; c < ncols; ++c)
                    entries[c] = rep.matrix.blocks[b].rows[row].entries[colmap[c]];
                block.rows.push_back({std::move(label), std::move(entries)});
            }
            out.blocks.push_back(std::move(block));
        }
    };
    append_blocks(r1, c1, ax1, false);
    append_blocks(r2, c2, ax2, true);

    ValidationReport vr = validate_multipartition(out);
    if (!vr.ok)
        throw construction_error("glued leveled matrix is not a multipartition matrix: " +
                                 vr.problems.front());
    if (!rowspan_equal(to_rat_matrix(build_a_matrix(glued)), to_rat_matrix(out)))
        throw construction_error("glued leveled matrix changed the design rowspan");
    return out;
}

}  // namespace quasitoric
