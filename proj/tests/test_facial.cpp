#include <random>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/facial.hpp"

using namespace quasitoric;

namespace {

using Pairs = std::vector<std::pair<int, int>>;

// The hexagon placed at layer `layer` of a [3,3,depth] model whose other
// layers carry the full 3x3 grid.
IndexSet planted_hexagon(int depth, int layer) {
    std::vector<Tuple> tuples;
    for (int f = 1; f <= depth; ++f) {
        if (f == layer) {
            for (const Tuple& t : fixtures::hexagon().tuples)
                tuples.push_back({t[0], t[1], f});
        } else {
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) tuples.push_back({i, j, f});
        }
    }
    return make_index_set({3, 3, depth}, tuples);
}

}  // namespace

TEST_SUITE_BEGIN("facial");

TEST_CASE("slicing the encoded no-3-way model") {
    IndexSet s = fixtures::no3way_encoded();

    Slice sl = slice(s, 1, 2, {1});
    CHECK(sl.a == 1);
    CHECK(sl.b == 2);
    CHECK(sl.fixed == Tuple{1});
    CHECK(sl.na == 4);
    CHECK(sl.nb == 4);
    CHECK(sl.pairs == Pairs{{1, 1}, {3, 3}});
    CHECK_FALSE(sl.empty());

    // axes arrive in either order
    Slice swapped = slice(s, 2, 1, {1});
    CHECK(swapped.a == 1);
    CHECK(swapped.b == 2);
    CHECK(swapped.pairs == sl.pairs);

    // the slice as a standalone model drops the unused states
    IndexSet flat = slice_index_set(sl);
    CHECK(flat.dims == std::vector<int>{2, 2});
    CHECK(flat.tuples == std::vector<Tuple>{{1, 1}, {2, 2}});

    CHECK(face_functional_check(s, sl));
    CHECK(face_functional_check(s, slice(s, 1, 3, {2})));
    CHECK(face_functional_check(s, slice(s, 2, 3, {4})));
}

TEST_CASE("slicing the glued model") {
    IndexSet s = fixtures::glued_triples();

    CHECK(slice(s, 2, 3, {1}).pairs == Pairs{{1, 1}, {1, 3}, {3, 2}, {3, 3}});
    CHECK(slice(s, 1, 3, {2}).pairs == Pairs{{2, 1}});
    CHECK(slice(s, 1, 2, {3}).pairs == Pairs{{1, 1}, {1, 3}, {2, 1}, {3, 3}});
    for (int axis_state = 1; axis_state <= 3; ++axis_state)
        CHECK(face_functional_check(s, slice(s, 1, 2, {axis_state})));
}

TEST_CASE("slice input validation") {
    IndexSet s = fixtures::glued_triples();
    CHECK_THROWS_AS((void)slice(fixtures::staircase_3x3(), 1, 2, {}), precondition_error);
    CHECK_THROWS_AS((void)slice(s, 1, 1, {1}), input_error);
    CHECK_THROWS_AS((void)slice(s, 0, 2, {1}), input_error);
    CHECK_THROWS_AS((void)slice(s, 1, 4, {1}), input_error);
    CHECK_THROWS_AS((void)slice(s, 1, 2, {}), input_error);
    CHECK_THROWS_AS((void)slice(s, 1, 2, {1, 1}), input_error);
    CHECK_THROWS_AS((void)slice(s, 1, 2, {4}), input_error);
    CHECK_THROWS_AS((void)slice(s, 1, 2, {0}), input_error);
}

TEST_CASE("empty slices are legal and vacuously fine") {
    IndexSet s = make_index_set(
        {2, 2, 2, 2}, {{1, 1, 1, 1}, {2, 2, 2, 2}, {1, 2, 2, 1}});
    Slice sl = slice(s, 1, 2, {1, 2});  // no tuple has axes (3,4) = (1,2)
    CHECK(sl.empty());
    CHECK(sl.pairs.empty());
    CHECK_THROWS_AS((void)slice_index_set(sl), precondition_error);

    SliceScanReport report = slices_necessary_condition(s);
    CHECK(report.passed);
    CHECK(report.slices_checked == 24);  // 6 axis pairs x 4 fixed combinations
    CHECK(report.empty_slices > 0);
    for (const SliceRecord& rec : report.records) {
        if (rec.a == 1 && rec.b == 2 && rec.fixed == Tuple{1, 2}) {
            CHECK(rec.empty);
            CHECK(rec.size == 0);
            CHECK(rec.rational_mle);  // vacuous
            CHECK_FALSE(rec.witness.has_value());
        }
    }
}

TEST_CASE("the scan passes on the glued model") {
    SliceScanReport report = slices_necessary_condition(fixtures::glued_triples());
    CHECK(report.passed);
    CHECK(report.slices_checked == 9);
    CHECK(report.empty_slices == 0);
    CHECK_FALSE(report.first_failing.has_value());
    CHECK(report.records.size() == 9);
    for (const SliceRecord& rec : report.records) CHECK(rec.rational_mle);
    CHECK(report.note.find("no-three-way-interaction") != std::string::npos);
    CHECK(report.note.find("NOT sufficient") != std::string::npos);
}

TEST_CASE("the scan passes on the encoded no-3-way model itself") {
    // the very model showing the condition is not sufficient: every slice
    // is fine although its own ML degree is 3
    SliceScanReport report = slices_necessary_condition(fixtures::no3way_encoded());
    CHECK(report.passed);
    CHECK(report.slices_checked == 12);
    CHECK(report.empty_slices == 0);
    for (const SliceRecord& rec : report.records) {
        CHECK(rec.size == 2);
        CHECK(rec.rational_mle);
    }
    CHECK(report.note.find("ML degree 3") != std::string::npos);
}

TEST_CASE("a planted chordless cycle fails the scan") {
    IndexSet s = planted_hexagon(1, 1);
    SliceScanReport report = slices_necessary_condition(s);
    CHECK_FALSE(report.passed);
    REQUIRE(report.first_failing.has_value());
    CHECK(*report.first_failing == 0);
    const SliceRecord& rec = report.records[0];
    CHECK(rec.a == 1);
    CHECK(rec.b == 2);
    CHECK(rec.fixed == Tuple{1});
    CHECK(rec.size == 6);
    CHECK_FALSE(rec.rational_mle);
    REQUIRE(rec.witness.has_value());
    CHECK(rec.witness->kind == ChordalityWitness::Kind::InducedCycle);
    CHECK(rec.witness->vertices.size() == 6);
    CHECK(report.note.empty());
}

TEST_CASE("the failing layer is found wherever it hides") {
    std::mt19937 rng(1105u);
    for (int trial = 0; trial < 10; ++trial) {
        int layer = 1 + static_cast<int>(rng() % 3);
        SliceScanReport report = slices_necessary_condition(planted_hexagon(3, layer));
        CHECK_FALSE(report.passed);
        REQUIRE(report.first_failing.has_value());
        // pair (1,2) is scanned first, its fixed states in order, and the
        // full-grid layers are all fine
        CHECK(*report.first_failing == layer - 1);
        CHECK(report.records[static_cast<size_t>(*report.first_failing)].fixed ==
              Tuple{layer});
    }
}

TEST_CASE("witnesses use the trimmed slice coordinates") {
    // hexagon on rows {1,2,4} / all states used elsewhere via a full layer
    std::vector<Tuple> tuples;
    const int remap[4] = {0, 1, 2, 4};
    for (const Tuple& t : fixtures::hexagon().tuples)
        tuples.push_back({remap[t[0]], t[1], 1});
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) tuples.push_back({i, j, 2});
    IndexSet s = make_index_set({4, 4, 2}, tuples);

    SliceScanReport report = slices_necessary_condition(s);
    CHECK_FALSE(report.passed);
    REQUIRE(report.first_failing.has_value());
    const SliceRecord& rec = report.records[static_cast<size_t>(*report.first_failing)];
    CHECK(rec.fixed == Tuple{1});
    REQUIRE(rec.witness.has_value());
    for (const GraphVertex& v : rec.witness->vertices) CHECK(v.idx < 3);
}

TEST_CASE("the scan refuses 2-way input") {
    CHECK_THROWS_AS((void)slices_necessary_condition(fixtures::staircase_3x3()),
                    precondition_error);
}

TEST_SUITE_END();
