#include "quasitoric/reparam.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "quasitoric/chordal.hpp"
#include "quasitoric/ctfp.hpp"
#include "quasitoric/exact_linalg.hpp"

namespace quasitoric {

namespace {

std::vector<int> col_support(const IndexSet& s, int row) {
    std::vector<int> out;
    for (const Tuple& t : s.tuples)
        if (t[0] == row) out.push_back(t[1]);
    return out;
}

std::vector<int> inter_cols(const MaxIntersection& mi) {
    std::vector<int> cols;
    for (const Cell& c : mi.cells) cols.push_back(c.second);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    return cols;
}

int clique_index(const CliquePoset& poset, const Clique& q) {
    for (int i = 0; i < static_cast<int>(poset.cliques.size()); ++i)
        if (poset.cliques[i] == q) return i;
    throw verification_error("clique not found in the maximal clique list");
}

}  // namespace

LevelSets level_sets(const IndexSet& s, const CliquePoset& poset) {
    const int m = s.dims[0], n = s.dims[1], h = poset.h;
    LevelSets ls;
    ls.x.assign(h + 1, {});
    ls.rows.assign(h + 1, {});
    ls.cols.assign(h + 1, {});

    for (int i = 0; i < static_cast<int>(poset.intersections.size()); ++i) {
        int lev = poset.intersections[i].level;
        if (lev < 1 || lev > h)
            throw construction_error("maximal intersection without a valid level");
        ls.x[lev].push_back(i);
    }
    if (!ls.x[0].empty() || (h >= 1 && !ls.x[h].empty()))
        throw construction_error("levels 0 and h must carry no maximal intersections");

    // Rows and columns touched by cliques of each level.
    std::vector<std::set<int>> level_rows(h + 1), level_cols(h + 1);
    for (int q = 0; q < static_cast<int>(poset.cliques.size()); ++q) {
        int lev = poset.levels[q];
        level_rows[lev].insert(poset.cliques[q].rows.begin(), poset.cliques[q].rows.end());
        level_cols[lev].insert(poset.cliques[q].cols.begin(), poset.cliques[q].cols.end());
    }

    for (int i = 1; i <= m; ++i) ls.rows[0].push_back(i);
    for (int r = 1; r <= h; ++r)
        for (int i : ls.rows[r - 1])
            if (!level_rows[r].count(i)) ls.rows[r].push_back(i);

    for (int r = 1; r <= h; ++r) {
        std::set<int> next(ls.cols[r - 1].begin(), ls.cols[r - 1].end());
        for (int j : level_cols[r])
            if (r == h || !level_cols[r + 1].count(j)) next.insert(j);
        ls.cols[r].assign(next.begin(), next.end());
    }

    if (!ls.rows[h].empty())
        throw construction_error("rows must be exhausted at the top level");
    if (static_cast<int>(ls.cols[h].size()) != n)
        throw construction_error("columns must all be finished at the top level");
    return ls;
}

std::string bar_label_text(const BarLabel& l, const CliquePoset& poset) {
    switch (l.kind) {
        case BarLabel::Kind::row:
            return axis_row_label(0, l.idx);
        case BarLabel::Kind::col:
            return axis_row_label(1, l.idx);
        case BarLabel::Kind::inter: {
            const auto& [d, e] = poset.intersections[l.idx].cover_pair;
            return "D" + std::to_string(d + 1) + "^D" + std::to_string(e + 1);
        }
    }
    return {};
}

ReparamMatrix build_bar_matrix(const IndexSet& s) {
    if (s.k() != 2) throw precondition_error("the leveled matrix needs a 2-way index set");
    BipartiteGraph g = build_graph(s);
    if (auto w = find_chordality_violation(g))
        throw not_doubly_chordal("model does not have a rational MLE (witness kind: " +
                                 std::string(w->kind == ChordalityWitness::Kind::InducedCycle
                                                 ? "induced cycle"
                                                 : "double square") +
                                 ")");

    ReparamMatrix rep;
    rep.source = s;
    rep.poset = build_poset(s);
    rep.sets = level_sets(s, rep.poset);
    const int h = rep.poset.h, ncols = s.size();

    MultipartitionMatrix base = build_a_matrix(s);
    auto a_row = [&](int i) { return base.blocks[0].rows[i - 1].entries; };
    auto b_row = [&](int j) { return base.blocks[1].rows[j - 1].entries; };

    rep.matrix.columns = base.columns;
    for (int r = 0; r <= h; ++r) {
        MatrixBlock block;
        std::vector<BarLabel> labels;
        for (int mi : rep.sets.x[r]) {
            std::set<Cell> cells(rep.poset.intersections[mi].cells.begin(),
                                 rep.poset.intersections[mi].cells.end());
            std::vector<int> row(ncols, 0);
            for (int c = 0; c < ncols; ++c)
                if (cells.count({s.tuples[c][0], s.tuples[c][1]})) row[c] = 1;
            BarLabel l{BarLabel::Kind::inter, mi};
            block.rows.push_back({bar_label_text(l, rep.poset), std::move(row)});
            labels.push_back(l);
        }
        for (int i : rep.sets.rows[r]) {
            BarLabel l{BarLabel::Kind::row, i};
            block.rows.push_back({bar_label_text(l, rep.poset), a_row(i)});
            labels.push_back(l);
        }
        for (int j : rep.sets.cols[r]) {
            BarLabel l{BarLabel::Kind::col, j};
            block.rows.push_back({bar_label_text(l, rep.poset), b_row(j)});
            labels.push_back(l);
        }
        rep.matrix.blocks.push_back(std::move(block));
        rep.block_labels.push_back(std::move(labels));
    }

    ValidationReport vr = validate_multipartition(rep.matrix);
    if (!vr.ok)
        throw construction_error("leveled matrix is not a multipartition matrix: " +
                                 vr.problems.front());

    for (int c = 0; c < ncols; ++c) {
        Tuple coded(h + 1);
        for (int r = 0; r <= h; ++r) coded[r] = rep.matrix.covering_row(r, c) + 1;
        rep.bar_tuples.push_back(std::move(coded));
    }

    for (int r = 0; r <= h; ++r)
        for (int row = 0; row < static_cast<int>(rep.matrix.blocks[r].rows.size()); ++row) {
            const auto& entries = rep.matrix.blocks[r].rows[row].entries;
            if (std::find(entries.begin(), entries.end(), 1) == entries.end())
                throw construction_error("block " + std::to_string(r) + " row " +
                                         rep.matrix.blocks[r].rows[row].label +
                                         " covers no column");
        }

    if (!rowspan_equal(to_rat_matrix(base), to_rat_matrix(rep.matrix)))
        throw construction_error("leveled matrix changed the rowspan of the design matrix");
    return rep;
}

IndexSet bar_index_set(const ReparamMatrix& rep) {
    std::vector<int> dims;
    for (const auto& block : rep.matrix.blocks)
        dims.push_back(static_cast<int>(block.rows.size()));
    return make_index_set(dims, rep.bar_tuples);
}

InternalCtfpReport verify_internal_ctfp(const ReparamMatrix& rep) {
    InternalCtfpReport report;
    const int h = rep.h();
    if (h < 2) return report;  // no internal coordinates
    IndexSet coded = bar_index_set(rep);
    for (int r = 1; r <= h - 1; ++r) {
        SplitSpec spec;
        spec.j = r + 1;  // 1-based coordinate
        for (int a = 1; a <= r + 1; ++a) spec.in_a.push_back(a);
        bool ok = !check_swap_condition(coded, spec).has_value();
        report.coordinates.push_back(r + 1);
        report.passed.push_back(ok);
        report.all_passed = report.all_passed && ok;
    }
    return report;
}

std::string part_label_text(const PartLabel& l) {
    switch (l.kind) {
        case PartLabel::Kind::row:
            return axis_row_label(0, l.idx);
        case PartLabel::Kind::col:
            return axis_row_label(1, l.idx);
        case PartLabel::Kind::clique:
            return "D" + std::to_string(l.idx + 1);
    }
    return {};
}

namespace {

// Part-assignment context for one step.
struct StepContext {
    const ReparamMatrix& rep;
    int r;
    std::set<int> r_next;   // R_{r+1}
    std::set<int> c_cur;    // C_r
    std::set<int> c_next;   // C_{r+1}
    std::set<int> y_next;   // level-(r+1) clique indices

    explicit StepContext(const ReparamMatrix& rep_, int r_) : rep(rep_), r(r_) {
        r_next.insert(rep.sets.rows[r + 1].begin(), rep.sets.rows[r + 1].end());
        c_cur.insert(rep.sets.cols[r].begin(), rep.sets.cols[r].end());
        c_next.insert(rep.sets.cols[r + 1].begin(), rep.sets.cols[r + 1].end());
        for (int q = 0; q < static_cast<int>(rep.poset.cliques.size()); ++q)
            if (rep.poset.levels[q] == r + 1) y_next.insert(q);
    }

    bool valid_part(const PartLabel& p) const {
        switch (p.kind) {
            case PartLabel::Kind::row:
                return r_next.count(p.idx) > 0;
            case PartLabel::Kind::col:
                return c_cur.count(p.idx) > 0;
            case PartLabel::Kind::clique:
                return y_next.count(p.idx) > 0;
        }
        return false;
    }

    PartLabel assign_g(const BarLabel& last) const {
        switch (last.kind) {
            case BarLabel::Kind::row: {
                int i = last.idx;
                if (r_next.count(i)) return {PartLabel::Kind::row, i};
                // i leaves the row pool at level r+1, so its minimal clique
                // sits exactly one level up.
                Clique ei = e_clique_row(rep.source, i);
                int q = clique_index(rep.poset, ei);
                if (rep.poset.levels[q] != r + 1)
                    throw decomposition_invariant_failure(
                        "row " + std::to_string(i) + " retired at step " + std::to_string(r) +
                        " but its minimal clique has level " +
                        std::to_string(rep.poset.levels[q]));
                return {PartLabel::Kind::clique, q};
            }
            case BarLabel::Kind::col:
                return {PartLabel::Kind::col, last.idx};
            case BarLabel::Kind::inter: {
                const auto& [lo, hi] = rep.poset.intersections[last.idx].cover_pair;
                (void)lo;
                return {PartLabel::Kind::clique, hi};
            }
        }
        throw decomposition_invariant_failure("unhandled label kind");
    }

    PartLabel assign_h(const BarLabel& label) const {
        switch (label.kind) {
            case BarLabel::Kind::row:
                return {PartLabel::Kind::row, label.idx};
            case BarLabel::Kind::inter: {
                const auto& [lo, hi] = rep.poset.intersections[label.idx].cover_pair;
                (void)hi;
                return {PartLabel::Kind::clique, lo};
            }
            case BarLabel::Kind::col: {
                int j = label.idx;
                if (c_cur.count(j)) return {PartLabel::Kind::col, j};
                Clique ej = e_clique_col(rep.source, j);
                int q = clique_index(rep.poset, ej);
                if (rep.poset.levels[q] == r + 1) return {PartLabel::Kind::clique, q};
                // Fallback: the maximal clique of j is minimal in the poset,
                // so it is the minimal clique of one of its rows.
                for (int i : rep.sets.rows[r])
                    if (e_clique_row(rep.source, i) == ej) return {PartLabel::Kind::row, i};
                throw decomposition_invariant_failure(
                    "column " + std::to_string(j) + " finished at step " + std::to_string(r) +
                    " with no assignable part");
            }
        }
        throw decomposition_invariant_failure("unhandled label kind");
    }
};

std::map<Tuple, int> truncation_multiset(const ReparamMatrix& rep, int len) {
    std::map<Tuple, int> out;
    for (const Tuple& bt : rep.bar_tuples) {
        Tuple head(bt.begin(), bt.begin() + len);
        ++out[head];
    }
    return out;
}

}  // namespace

std::vector<LinearDecompositionStep> linear_decomposition(const ReparamMatrix& rep) {
    const IndexSet& s = rep.source;
    const int h = rep.h();
    std::vector<LinearDecompositionStep> steps;

    for (int r = 0; r <= h - 1; ++r) {
        StepContext ctx(rep, r);
        LinearDecompositionStep step;
        step.r = r;

        std::map<Tuple, int> trunc = truncation_multiset(rep, r + 1);
        for (const auto& [head, mult] : trunc) step.t.push_back(head);

        const auto& next_labels = rep.block_labels[r + 1];
        for (const BarLabel& label : next_labels) {
            int mult = 0;
            switch (label.kind) {
                case BarLabel::Kind::row:
                    mult = static_cast<int>(col_support(s, label.idx).size());
                    break;
                case BarLabel::Kind::inter:
                    mult = static_cast<int>(inter_cols(rep.poset.intersections[label.idx]).size());
                    break;
                case BarLabel::Kind::col:
                    mult = 1;
                    break;
            }
            step.tprime.push_back({label, mult});
        }

        std::map<PartLabel, DecompositionPart> parts;
        for (int idx = 0; idx < static_cast<int>(step.t.size()); ++idx) {
            const BarLabel& last = rep.block_labels[r][step.t[idx][r] - 1];
            PartLabel x = ctx.assign_g(last);
            if (!ctx.valid_part(x))
                throw decomposition_invariant_failure(
                    "step " + std::to_string(r) + ": truncation assigned to " +
                    part_label_text(x) + ", which is outside the part index set");
            auto& part = parts[x];
            part.x = x;
            part.g.push_back(idx);
        }
        for (const auto& [label, mult] : step.tprime) {
            PartLabel x = ctx.assign_h(label);
            if (!ctx.valid_part(x))
                throw decomposition_invariant_failure(
                    "step " + std::to_string(r) + ": next-block label assigned to " +
                    part_label_text(x) + ", which is outside the part index set");
            auto& part = parts[x];
            part.x = x;
            part.h.push_back({label, mult});
        }
        for (auto& [x, part] : parts) step.parts.push_back(std::move(part));

        // --- Verification: reassembly reproduces the next truncation level.
        std::map<Tuple, int> rebuilt;
        std::map<BarLabel, int> next_state;
        for (int row = 0; row < static_cast<int>(next_labels.size()); ++row)
            next_state[next_labels[row]] = row + 1;
        for (const DecompositionPart& part : step.parts)
            for (int gi : part.g)
                for (const auto& [label, mult] : part.h) {
                    Tuple glued = step.t[gi];
                    glued.push_back(next_state.at(label));
                    rebuilt[glued] += mult;
                }
        if (rebuilt != truncation_multiset(rep, r + 2))
            throw decomposition_invariant_failure(
                "step " + std::to_string(r) +
                ": reassembled multiset differs from the next truncation level");

        // --- Verification: homogeneity of both part families.
        std::vector<std::vector<std::string>> t_alphabet;
        for (int p = 0; p <= r; ++p) {
            std::vector<std::string> names;
            for (const BarLabel& l : rep.block_labels[p]) names.push_back(bar_label_text(l, rep.poset));
            t_alphabet.push_back(std::move(names));
        }
        MultipartitionMatrix t_matrix = build_matrix_from_coded_tuples(step.t, t_alphabet);
        RatMatrix t_rat = to_rat_matrix(t_matrix);
        for (const DecompositionPart& part : step.parts) {
            RatVec ind(step.t.size(), Rat(0));
            for (int gi : part.g) ind[gi] = 1;
            if (!rowspan_contains(t_rat, ind))
                throw decomposition_invariant_failure(
                    "step " + std::to_string(r) + ": part " + part_label_text(part.x) +
                    " is not homogeneous for the truncated model");
        }

        std::vector<Tuple> tp_cols;
        std::vector<int> tp_col_part;  // part index per expanded column
        for (int pi = 0; pi < static_cast<int>(step.parts.size()); ++pi)
            for (const auto& [label, mult] : step.parts[pi].h)
                for (int c = 0; c < mult; ++c) {
                    tp_cols.push_back({next_state.at(label)});
                    tp_col_part.push_back(pi);
                }
        std::vector<std::vector<std::string>> tp_alphabet(1);
        for (const BarLabel& l : next_labels)
            tp_alphabet[0].push_back(bar_label_text(l, rep.poset));
        MultipartitionMatrix tp_matrix = build_matrix_from_coded_tuples(tp_cols, tp_alphabet);
        RatMatrix tp_rat = to_rat_matrix(tp_matrix);
        for (int pi = 0; pi < static_cast<int>(step.parts.size()); ++pi) {
            RatVec ind(tp_cols.size(), Rat(0));
            for (int c = 0; c < static_cast<int>(tp_cols.size()); ++c)
                if (tp_col_part[c] == pi) ind[c] = 1;
            if (!rowspan_contains(tp_rat, ind))
                throw decomposition_invariant_failure(
                    "step " + std::to_string(r) + ": part " + part_label_text(step.parts[pi].x) +
                    " is not homogeneous for the appended block");
        }

        // --- Verification: the appended block generates a linear ideal — its
        // kernel lattice is spanned by differences of equal-label columns.
        std::vector<IntVec> kernel = integer_kernel_basis(tp_matrix.dense());
        for (const IntVec& v : kernel) {
            int plus = -1, minus = -1;
            bool clean = true;
            for (int c = 0; c < static_cast<int>(v.size()); ++c) {
                if (v[c] == 0) continue;
                if (v[c] == 1 && plus < 0) plus = c;
                else if (v[c] == -1 && minus < 0) minus = c;
                else { clean = false; break; }
            }
            if (!clean || plus < 0 || minus < 0 || tp_cols[plus] != tp_cols[minus])
                throw decomposition_invariant_failure(
                    "step " + std::to_string(r) +
                    ": appended block kernel is not generated by equal-label differences");
        }

        steps.push_back(std::move(step));
    }
    return steps;
}

}  // namespace quasitoric
