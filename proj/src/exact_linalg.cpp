#include "quasitoric/exact_linalg.hpp"

#include <algorithm>

#include "quasitoric/errors.hpp"

namespace quasitoric {

RatMatrix to_rat_matrix(const std::vector<std::vector<int>>& m) {
    RatMatrix out(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (int e : m[i]) out[i].emplace_back(e);
    }
    return out;
}

RatMatrix to_rat_matrix(const MultipartitionMatrix& m) {
    return to_rat_matrix(m.dense());
}

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
// Pivot choice is deterministic: columns scanned left to right, first row
// with a nonzero entry below the current rank wins.
std::vector<int> rref(RatMatrix& A) {
    std::vector<int> pivot_cols;
    if (A.empty()) return pivot_cols;
    const int nr = static_cast<int>(A.size());
    const int nc = static_cast<int>(A[0].size());
    int rank = 0;
    for (int col = 0; col < nc && rank < nr; ++col) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (A[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(A[rank], A[piv]);
        Rat inv = A[rank][col];
        for (int c = col; c < nc; ++c) A[rank][c] /= inv;
        for (int r = 0; r < nr; ++r) {
            if (r == rank || A[r][col] == 0) continue;
            Rat f = A[r][col];
            for (int c = col; c < nc; ++c) A[r][c] -= f * A[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    return pivot_cols;
}

}  // namespace

std::optional<RatVec> rowspan_certificate(const RatMatrix& M, const RatVec& v) {
    const int nrows = static_cast<int>(M.size());
    const int ncols = nrows ? static_cast<int>(M[0].size()) : 0;
    if (static_cast<int>(v.size()) != ncols)
        throw precondition_error("vector length does not match matrix width");
    // Solve M^T c = v: augmented system, one row per matrix column.
    RatMatrix aug(ncols, RatVec(nrows + 1));
    for (int c = 0; c < ncols; ++c) {
        for (int r = 0; r < nrows; ++r) aug[c][r] = M[r][c];
        aug[c][nrows] = v[c];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == nrows) return std::nullopt;  // pivot in rhs
    RatVec cert(nrows, Rat(0));
    for (size_t pr = 0; pr < pivots.size(); ++pr) cert[pivots[pr]] = aug[pr][nrows];
    return cert;
}

bool is_homogeneous_wrt(const RatMatrix& M, const RatMatrix& G) {
    for (const RatVec& g : G)
        if (!rowspan_contains(M, g)) return false;
    return true;
}

bool rowspan_equal(const RatMatrix& A, const RatMatrix& B) {
    return is_homogeneous_wrt(A, B) && is_homogeneous_wrt(B, A);
}

namespace {

bool int_vec_lex_less(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

void normalize_primitive(IntVec& v) {
    Int g = 0;
    for (const Int& e : v) g = gcd(g, e);
    if (g > 1)
        for (Int& e : v) e /= g;
    for (const Int& e : v) {
        if (e == 0) continue;
        if (e < 0)
            for (Int& x : v) x = -x;
        break;
    }
}

}  // namespace

std::vector<IntVec> integer_kernel_basis(const std::vector<std::vector<int>>& M) {
    const int nrows = static_cast<int>(M.size());
    const int ncols = nrows ? static_cast<int>(M[0].size()) : 0;
    if (ncols == 0) return {};
    // Augmented [M^T | I]; unimodular row reduction of the M^T part to echelon
    // form.  Rows whose M^T part vanishes carry a lattice basis of ker M in
    // their identity part.
    const int w = nrows + ncols;
    IntMatrix B(ncols, IntVec(w, 0));
    for (int c = 0; c < ncols; ++c) {
        for (int r = 0; r < nrows; ++r) B[c][r] = M[r][c];
        B[c][nrows + c] = 1;
    }
    int top = 0;
    for (int col = 0; col < nrows && top < ncols; ++col) {
        // Euclidean elimination below `top` in this column.
        while (true) {
            int best = -1;
            for (int r = top; r < ncols; ++r) {
                if (B[r][col] == 0) continue;
                if (best < 0 || cmp(abs(B[r][col]), abs(B[best][col])) < 0) best = r;
            }
            if (best < 0) break;
            std::swap(B[top], B[best]);
            bool clean = true;
            for (int r = top + 1; r < ncols; ++r) {
                if (B[r][col] == 0) continue;
                Int q = B[r][col] / B[top][col];  // truncated division is fine here
                if (q != 0)
                    for (int c2 = 0; c2 < w; ++c2) B[r][c2] -= q * B[top][c2];
                if (B[r][col] != 0) clean = false;
            }
            if (clean) { ++top; break; }
        }
    }
    std::vector<IntVec> basis;
    for (int r = top; r < ncols; ++r) {
        IntVec v(B[r].begin() + nrows, B[r].end());
        normalize_primitive(v);
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(), int_vec_lex_less);
    return basis;
}

bool lattice_contains(const std::vector<IntVec>& basis, const IntVec& w) {
    if (basis.empty()) {
        for (const Int& e : w)
            if (e != 0) return false;
        return true;
    }
    // Solve x * basis = w over the rationals (basis rows are independent),
    // then check integrality.
    const int nb = static_cast<int>(basis.size());
    const int n = static_cast<int>(basis[0].size());
    if (static_cast<int>(w.size()) != n)
        throw precondition_error("lattice vector length mismatch");
    RatMatrix aug(n, RatVec(nb + 1));
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < nb; ++r) aug[c][r] = Rat(basis[r][c]);
        aug[c][nb] = Rat(w[c]);
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == nb) return false;  // inconsistent
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
        const Rat& x = aug[pr][nb];
        if (x.get_den() != 1) return false;
    }
    return true;
}

bool binomial_in_ideal(const std::vector<std::vector<int>>& M,
                       const std::vector<int>& u, const std::vector<int>& v) {
    const int nrows = static_cast<int>(M.size());
    const int ncols = nrows ? static_cast<int>(M[0].size()) : 0;
    if (static_cast<int>(u.size()) != ncols || static_cast<int>(v.size()) != ncols)
        throw precondition_error("exponent vector length mismatch");
    for (int x : u)
        if (x < 0) throw precondition_error("exponents must be nonnegative");
    for (int x : v)
        if (x < 0) throw precondition_error("exponents must be nonnegative");
    for (int r = 0; r < nrows; ++r) {
        Int lhs = 0, rhs = 0;
        for (int c = 0; c < ncols; ++c) {
            lhs += Int(M[r][c]) * u[c];
            rhs += Int(M[r][c]) * v[c];
        }
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace quasitoric
