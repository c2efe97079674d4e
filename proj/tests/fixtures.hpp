#ifndef QUASITORIC_TESTS_FIXTURES_HPP
#define QUASITORIC_TESTS_FIXTURES_HPP

// Shared fixture index sets and golden matrices used across the test suite.
// Names follow the worked examples: the 3x3 staircase, the 9-triple glued
// model and its two factors, the 4-triple non-factoring set, the 5x5 running
// example, the hexagon, the lifted path, and the encoded no-3-way model.

#include <vector>

#include "quasitoric/ctfp.hpp"
#include "quasitoric/index_set.hpp"

namespace fixtures {

using quasitoric::IndexSet;
using quasitoric::Tuple;
using quasitoric::TupleMultiset;

inline IndexSet staircase_3x3() {  // three-step staircase
    return quasitoric::make_index_set({3, 3}, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}});
}

inline IndexSet glued_triples() {  // cTFP of the two factors below along axis 2
    return quasitoric::make_index_set({3, 3, 3}, {{1, 1, 1},
                                                  {1, 1, 3},
                                                  {1, 3, 2},
                                                  {1, 3, 3},
                                                  {2, 1, 1},
                                                  {2, 1, 3},
                                                  {2, 2, 1},
                                                  {3, 3, 2},
                                                  {3, 3, 3}});
}

inline IndexSet factor_one() {  // first glue factor (shares its axis 2)
    return quasitoric::make_index_set({3, 3}, {{1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 3}});
}

inline IndexSet factor_two() {  // second glue factor (shares its axis 1)
    return quasitoric::make_index_set({3, 3}, {{1, 1}, {1, 3}, {2, 1}, {3, 2}, {3, 3}});
}

inline IndexSet no_split_triples() {  // not a cTFP under any split
    return quasitoric::make_index_set({2, 2, 2}, {{1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 2, 2}});
}

inline IndexSet hexagon() {  // its graph is a chordless 6-cycle
    return quasitoric::make_index_set({3, 3}, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 1}});
}

inline IndexSet running_5x5() {  // the five-clique running example
    return quasitoric::make_index_set({5, 5}, {{1, 1},
                                               {1, 2},
                                               {1, 3},
                                               {2, 1},
                                               {2, 2},
                                               {2, 4},
                                               {2, 5},
                                               {3, 1},
                                               {3, 2},
                                               {4, 4},
                                               {4, 5},
                                               {5, 5}});
}

inline IndexSet lifted_path_source() {  // a 6-vertex path graph (a tree)
    return quasitoric::make_index_set({3, 2}, {{1, 1}, {2, 1}, {2, 2}, {3, 1}});
}

inline IndexSet no3way_encoded() {  // binary no-3-way model, pairs coded 2(i-1)+j
    return quasitoric::make_index_set({4, 4, 4}, {{1, 1, 1},
                                                  {1, 2, 2},
                                                  {2, 1, 3},
                                                  {2, 2, 4},
                                                  {3, 3, 1},
                                                  {3, 4, 2},
                                                  {4, 3, 3},
                                                  {4, 4, 4}});
}

// ---------------------------------------------------------------------------
// Golden dense matrices (row-major 0/1), in lexicographic column order.

// Design matrix of the 3x3 staircase; columns (1,1),(1,2),(1,3),(2,1),(2,2),(3,1).
inline std::vector<std::vector<int>> golden_staircase_matrix() {
    return {
        {1, 1, 1, 0, 0, 0},  // a_1
        {0, 0, 0, 1, 1, 0},  // a_2
        {0, 0, 0, 0, 0, 1},  // a_3
        {1, 0, 0, 1, 0, 1},  // b_1
        {0, 1, 0, 0, 1, 0},  // b_2
        {0, 0, 1, 0, 0, 0},  // b_3
    };
}

// Design matrix of the 5x5 running example; columns
// 11,12,13,21,22,24,25,31,32,44,45,55.
inline std::vector<std::vector<int>> golden_running_matrix() {
    return {
        {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},  // a_1
        {0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0},  // a_2
        {0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0},  // a_3
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0},  // a_4
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},  // a_5
        {1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0},  // b_1
        {0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0},  // b_2
        {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},  // b_3
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0},  // b_4
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1},  // b_5
    };
}

// The leveled 23x12 matrix of the running example in this library's row
// normalization (indicator rows, then surviving a_i ascending, then finished
// b_j ascending, per block).  Block sizes 5,7,6,5.
struct GoldenLeveledRow {
    int block;
    const char* label;
    std::vector<int> entries;
};

inline std::vector<GoldenLeveledRow> golden_leveled_running() {
    const std::vector<int> a1{1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    const std::vector<int> a2{0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0};
    const std::vector<int> a3{0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0};
    const std::vector<int> a4{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0};
    const std::vector<int> a5{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1};
    const std::vector<int> b1{1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0};
    const std::vector<int> b2{0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0};
    const std::vector<int> b3{0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    const std::vector<int> b4{0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0};
    const std::vector<int> b5{0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1};
    return {
        {0, "a_1", a1},
        {0, "a_2", a2},
        {0, "a_3", a3},
        {0, "a_4", a4},
        {0, "a_5", a5},
        {1, "D1^D2", {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
        {1, "D3^D2", {0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0}},
        {1, "D3^D4", {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0}},
        {1, "a_3", a3},
        {1, "a_4", a4},
        {1, "a_5", a5},
        {1, "b_3", b3},
        {2, "D4^D5", {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0}},
        {2, "a_5", a5},
        {2, "b_1", b1},
        {2, "b_2", b2},
        {2, "b_3", b3},
        {2, "b_4", b4},
        {3, "b_1", b1},
        {3, "b_2", b2},
        {3, "b_3", b3},
        {3, "b_4", b4},
        {3, "b_5", b5},
    };
}

// The lifted set of the path example, dims [6,4,4].
inline IndexSet golden_lifted_path() {
    return quasitoric::make_index_set({6, 4, 4}, {{1, 1, 1},
                                                  {2, 1, 2},
                                                  {2, 2, 3},
                                                  {3, 1, 4},
                                                  {4, 3, 1},
                                                  {5, 3, 2},
                                                  {5, 4, 3},
                                                  {6, 3, 4}});
}

// The 14x8 doubled design matrix of the path example, blocks 6/4/4.
inline std::vector<std::vector<int>> golden_lifted_path_matrix() {
    return {
        {1, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 1, 0},
        {0, 0, 0, 0, 0, 0, 0, 1},
        {1, 1, 0, 1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 1, 0, 1},
        {0, 0, 0, 0, 0, 0, 1, 0},
        {1, 0, 0, 0, 1, 0, 0, 0},
        {0, 1, 0, 0, 0, 1, 0, 0},
        {0, 0, 1, 0, 0, 0, 1, 0},
        {0, 0, 0, 1, 0, 0, 0, 1},
    };
}

// Hierarchical design matrix of the binary no-3-way model: pairwise-margin
// indicator rows for (x1,x2), (x1,x3), (x2,x3) over the 8 cells in
// lexicographic (x1,x2,x3) order.
inline std::vector<std::vector<int>> golden_no3way_design() {
    return {
        {1, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 1},
        {1, 0, 1, 0, 0, 0, 0, 0},
        {0, 1, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 1, 0},
        {0, 0, 0, 0, 0, 1, 0, 1},
        {1, 0, 0, 0, 1, 0, 0, 0},
        {0, 1, 0, 0, 0, 1, 0, 0},
        {0, 0, 1, 0, 0, 0, 1, 0},
        {0, 0, 0, 1, 0, 0, 0, 1},
    };
}

// ---------------------------------------------------------------------------
// Golden split multisets of the 9-triple model.

// Split along axis 2 keeping axes {1,2} / {2,3}.
inline TupleMultiset golden_split2_first() {
    return {{{1, 1}, 2}, {{1, 3}, 2}, {{2, 1}, 2}, {{2, 2}, 1}, {{3, 3}, 2}};
}
inline TupleMultiset golden_split2_second() {
    return {{{1, 1}, 2}, {{1, 3}, 2}, {{2, 1}, 1}, {{3, 2}, 2}, {{3, 3}, 2}};
}

// Split along axis 1 keeping axes {1,2} / {1,3}.
inline TupleMultiset golden_split1_first() {
    return {{{1, 1}, 2}, {{1, 3}, 2}, {{2, 1}, 2}, {{2, 2}, 1}, {{3, 3}, 2}};
}
inline TupleMultiset golden_split1_second() {
    return {{{1, 1}, 1}, {{1, 2}, 1}, {{1, 3}, 2}, {{2, 1}, 2}, {{2, 3}, 1}, {{3, 2}, 1}, {{3, 3}, 1}};
}

}  // namespace fixtures

#endif
