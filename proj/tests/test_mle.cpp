#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "quasitoric/ctfp.hpp"
#include "quasitoric/errors.hpp"
#include "quasitoric/exact_linalg.hpp"
#include "quasitoric/mle_ips.hpp"
#include "quasitoric/reparam.hpp"

using namespace quasitoric;

namespace {

IndexSet independence_2x2() {
    return make_index_set({2, 2}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
}

RatVec rat_counts(const std::vector<int>& v) {
    RatVec out;
    for (int x : v) out.emplace_back(x);
    return out;
}

std::vector<double> dbl_counts(const std::vector<int>& v) {
    return std::vector<double>(v.begin(), v.end());
}

std::vector<double> to_doubles(const RatVec& v) {
    std::vector<double> out;
    for (const Rat& x : v) out.push_back(rat_to_double(x));
    return out;
}

// Counts used throughout for the five-by-five model's 12 cells.
std::vector<int> running_counts() { return {3, 1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8}; }

// A generic model point: normalized exp(A^T theta) for random theta.
std::vector<double> random_model_point(const MultipartitionMatrix& M, std::mt19937& rng) {
    std::uniform_real_distribution<double> theta(-2.0, 2.0);
    std::vector<std::vector<int>> dense = M.dense();
    std::vector<double> coef(dense.size());
    for (double& t : coef) t = theta(rng);
    std::vector<double> q(static_cast<size_t>(M.n_cols()), 0.0);
    for (size_t c = 0; c < q.size(); ++c) {
        double log_q = 0.0;
        for (size_t r = 0; r < dense.size(); ++r) log_q += coef[r] * dense[r][c];
        q[c] = std::exp(log_q);
    }
    double total = 0.0;
    for (double x : q) total += x;
    for (double& x : q) x /= total;
    return q;
}

// Factor counts induced by glued counts: each glued cell's count lands on
// both of its projections.
std::pair<RatVec, RatVec> project_counts(const CtfpFactorization& fact, const IndexSet& glued,
                                         const RatVec& u) {
    auto index_of = [](const IndexSet& s, const Tuple& t) {
        for (int c = 0; c < s.size(); ++c)
            if (s.tuples[static_cast<size_t>(c)] == t) return c;
        FAIL("projection fell outside a factor");
        return -1;
    };
    RatVec u1(static_cast<size_t>(fact.s1.size()), Rat(0));
    RatVec u2(static_cast<size_t>(fact.s2.size()), Rat(0));
    for (size_t c = 0; c < glued.tuples.size(); ++c) {
        Tuple t1, t2;
        for (int a : fact.axes_1) t1.push_back(glued.tuples[c][static_cast<size_t>(a)]);
        for (int a : fact.axes_2) t2.push_back(glued.tuples[c][static_cast<size_t>(a)]);
        u1[static_cast<size_t>(index_of(fact.s1, t1))] += u[c];
        u2[static_cast<size_t>(index_of(fact.s2, t2))] += u[c];
    }
    return {u1, u2};
}

}  // namespace

TEST_SUITE_BEGIN("mle_ips");

TEST_CASE("log likelihood") {
    // 2*log(1/2) + log(1/4) + log(1/4) = -6 log 2
    CHECK(log_likelihood({0.5, 0.25, 0.25}, {2, 1, 1}) ==
          doctest::Approx(-6.0 * std::log(2.0)));
    // zero counts contribute nothing, even on zero probability
    CHECK(log_likelihood({1.0, 0.0}, {3.0, 0.0}) == doctest::Approx(0.0));
    // positive count on zero probability sinks to -infinity
    CHECK(log_likelihood({0.0, 1.0}, {1.0, 1.0}) ==
          -std::numeric_limits<double>::infinity());
    CHECK_THROWS_AS((void)log_likelihood({0.5, 0.5}, {1.0}), input_error);
}

TEST_CASE("moment defect of the uniform start") {
    MultipartitionMatrix M = build_a_matrix(independence_2x2());
    RatVec u = rat_counts({1, 2, 3, 4});
    RatVec p(4, Rat(1, 4));
    RatVec res = birch_residual(M, u, p);
    CHECK(res == RatVec{Rat(-2), Rat(2), Rat(-1), Rat(1)});
    CHECK(max_abs(res) == Rat(2));

    std::vector<double> fres = birch_residual(M, dbl_counts({1, 2, 3, 4}),
                                              std::vector<double>(4, 0.25));
    REQUIRE(fres.size() == 4);
    CHECK(fres[0] == doctest::Approx(-2.0));
    CHECK(fres[3] == doctest::Approx(1.0));
    CHECK(max_abs(fres) == doctest::Approx(2.0));

    CHECK_THROWS_AS((void)birch_residual(M, u, RatVec(3, Rat(1, 3))), input_error);
}

TEST_CASE("one exact cycle solves the independence model") {
    MultipartitionMatrix M = build_a_matrix(independence_2x2());
    RatVec u = rat_counts({1, 2, 3, 4});
    RatVec p = ips_one_cycle(M, u);
    CHECK(p == RatVec{Rat(3, 25), Rat(9, 50), Rat(7, 25), Rat(21, 50)});
    Rat total(0);
    for (const Rat& x : p) total += x;
    CHECK(total == 1);
    CHECK(max_abs(birch_residual(M, u, p)) == 0);
}

TEST_CASE("exact cycle validates its inputs") {
    MultipartitionMatrix M = build_a_matrix(independence_2x2());
    CHECK_THROWS_AS((void)ips_one_cycle(M, rat_counts({1, 2, 3})), input_error);
    CHECK_THROWS_AS((void)ips_one_cycle(M, RatVec{Rat(1), Rat(-1), Rat(1), Rat(1)}),
                    precondition_error);
    CHECK_THROWS_AS((void)ips_one_cycle(M, RatVec(4, Rat(0))), precondition_error);
}

TEST_CASE("zero counts can make the exact update undefined") {
    // wiping out row 1 empties column 3, whose update then divides by zero
    MultipartitionMatrix M = build_a_matrix(fixtures::staircase_3x3());
    RatVec u = rat_counts({0, 0, 0, 1, 1, 1});
    CHECK_THROWS_WITH_AS((void)ips_one_cycle(M, u),
                         doctest::Contains("b_3"), precondition_error);

    // the float path skips the dead row and converges on the face instead
    MLEResult res = ips_run(M, dbl_counts({0, 0, 0, 1, 1, 1}));
    CHECK(res.converged);
    CHECK(res.p[0] == 0.0);
    CHECK(res.p[1] == 0.0);
    CHECK(res.p[2] == 0.0);
}

TEST_CASE("one leveled cycle is exact on the five-by-five model") {
    IndexSet s = fixtures::running_5x5();
    ReparamMatrix rep = build_bar_matrix(s);
    RatVec u = rat_counts(running_counts());
    RatVec p = ips_one_cycle(rep.matrix, u);

    Rat total(0);
    for (const Rat& x : p) total += x;
    CHECK(total == 1);
    CHECK(max_abs(birch_residual(rep.matrix, u, p)) == 0);
    // the defect also vanishes against the plain design matrix
    CHECK(max_abs(birch_residual(build_a_matrix(s), u, p)) == 0);

    // one cycle under the standard parametrization is NOT exact
    RatVec q = ips_one_cycle(build_a_matrix(s), u);
    CHECK(max_abs(birch_residual(build_a_matrix(s), u, q)) != 0);

    // the float run on the leveled matrix stops after its first cycle
    MLEResult res = ips_run(rep.matrix, dbl_counts(running_counts()));
    CHECK(res.cycles == 1);
    CHECK(res.converged);
    for (size_t c = 0; c < p.size(); ++c)
        CHECK(res.p[c] == doctest::Approx(rat_to_double(p[c])).epsilon(1e-9));
}

TEST_CASE("one leveled cycle is exact on the staircase model") {
    IndexSet s = fixtures::staircase_3x3();
    ReparamMatrix rep = build_bar_matrix(s);
    RatVec u = rat_counts({1, 2, 3, 4, 5, 6});
    RatVec p = ips_one_cycle(rep.matrix, u);
    CHECK(max_abs(birch_residual(build_a_matrix(s), u, p)) == 0);

    RatVec q = ips_one_cycle(build_a_matrix(s), u);
    CHECK(max_abs(birch_residual(build_a_matrix(s), u, q)) != 0);
}

TEST_CASE("one leveled cycle is exact on the glued factors") {
    for (IndexSet s : {fixtures::factor_one(), fixtures::factor_two()}) {
        ReparamMatrix rep = build_bar_matrix(s);
        RatVec u = rat_counts({7, 3, 2, 5, 4});
        RatVec p = ips_one_cycle(rep.matrix, u);
        CHECK(max_abs(birch_residual(build_a_matrix(s), u, p)) == 0);
    }
}

TEST_CASE("scaling the counts leaves the exact cycle unchanged") {
    ReparamMatrix rep = build_bar_matrix(fixtures::running_5x5());
    RatVec u = rat_counts(running_counts());
    RatVec u7;
    for (const Rat& x : u) u7.push_back(Rat(7) * x);
    CHECK(ips_one_cycle(rep.matrix, u) == ips_one_cycle(rep.matrix, u7));
}

TEST_CASE("iterative scaling on a model without rational MLE") {
    IndexSet s = fixtures::no3way_encoded();
    MultipartitionMatrix M = build_a_matrix(s);
    RatVec u = rat_counts({1, 2, 3, 4, 5, 6, 7, 8});

    // one exact cycle does not solve it
    RatVec p1 = ips_one_cycle(M, u);
    CHECK(max_abs(birch_residual(M, u, p1)) != 0);

    // the float run needs several cycles but converges
    std::vector<double> uf = dbl_counts({1, 2, 3, 4, 5, 6, 7, 8});
    MLEResult res = ips_run(M, uf);
    CHECK(res.converged);
    CHECK(res.cycles > 1);
    CHECK(res.residual_max_abs < 1e-10 * 36.0);
    double total = 0.0;
    for (double x : res.p) total += x;
    CHECK(total == doctest::Approx(1.0));

    // capping the cycle budget reports non-convergence instead of throwing
    MLEResult capped = ips_run(M, uf, IPSConfig{1, 1e-10});
    CHECK(capped.cycles == 1);
    CHECK_FALSE(capped.converged);

    CHECK_THROWS_AS((void)ips_run(M, uf, IPSConfig{0, 1e-10}), input_error);
    CHECK_THROWS_AS((void)ips_run(M, uf, IPSConfig{10, 0.0}), input_error);
}

TEST_CASE("the float run always performs at least one cycle") {
    MultipartitionMatrix M = build_a_matrix(independence_2x2());
    // uniform counts: the uniform start already is the MLE
    MLEResult res = ips_run(M, std::vector<double>(4, 1.0));
    CHECK(res.cycles == 1);
    CHECK(res.converged);
    for (double x : res.p) CHECK(x == doctest::Approx(0.25));
}

TEST_CASE("the computed point maximizes the likelihood over the model") {
    IndexSet s = fixtures::running_5x5();
    ReparamMatrix rep = build_bar_matrix(s);
    MultipartitionMatrix A = build_a_matrix(s);
    RatVec u = rat_counts(running_counts());
    std::vector<double> uf = dbl_counts(running_counts());
    std::vector<double> p = to_doubles(ips_one_cycle(rep.matrix, u));
    double best = log_likelihood(p, uf);

    std::mt19937 rng(2718u);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> q = random_model_point(A, rng);
        REQUIRE(log_likelihood(q, uf) <= best + 1e-9);
    }
}

TEST_CASE("factor MLEs combine to the glued MLE") {
    IndexSet glued = fixtures::glued_triples();
    std::vector<CtfpFactorization> facts = find_ctfp(glued);
    REQUIRE(facts.size() == 1);
    const CtfpFactorization& fact = facts[0];

    RatVec u = rat_counts({3, 1, 4, 1, 5, 9, 2, 6, 5});
    auto [u1, u2] = project_counts(fact, glued, u);

    RatVec p1 = ips_one_cycle(build_bar_matrix(fact.s1).matrix, u1);
    RatVec p2 = ips_one_cycle(build_bar_matrix(fact.s2).matrix, u2);
    RatVec p = tfp_mle_combine(p1, p2, fact);

    REQUIRE(static_cast<int>(p.size()) == glued.size());
    Rat total(0);
    for (const Rat& x : p) total += x;
    CHECK(total == 1);
    CHECK(max_abs(birch_residual(build_a_matrix(glued), u, p)) == 0);

    SUBCASE("the float path agrees") {
        std::vector<double> pf =
            tfp_mle_combine(to_doubles(p1), to_doubles(p2), fact);
        REQUIRE(pf.size() == p.size());
        for (size_t c = 0; c < p.size(); ++c)
            CHECK(pf[c] == doctest::Approx(rat_to_double(p[c])).epsilon(1e-12));
    }
}

TEST_CASE("combining rejects mismatched or degenerate marginals") {
    std::vector<CtfpFactorization> facts = find_ctfp(fixtures::glued_triples());
    REQUIRE(facts.size() == 1);
    const CtfpFactorization& fact = facts[0];

    RatVec uniform1(5, Rat(1, 5)), uniform2(5, Rat(1, 5));
    // both factors put (2/5, 1/5, 2/5) on the shared axis, so this combines
    RatVec p = tfp_mle_combine(uniform1, uniform2, fact);
    Rat total(0);
    for (const Rat& x : p) total += x;
    CHECK(total == 1);

    SUBCASE("disagreeing marginals") {
        RatVec skew{Rat(1, 2), Rat(1, 8), Rat(1, 8), Rat(1, 8), Rat(1, 8)};
        CHECK_THROWS_AS((void)tfp_mle_combine(skew, uniform2, fact), precondition_error);

        std::vector<double> f1{0.5, 0.125, 0.125, 0.125, 0.125};
        std::vector<double> f2(5, 0.2);
        CHECK_THROWS_AS((void)tfp_mle_combine(f1, f2, fact), precondition_error);
    }

    SUBCASE("a float wobble within tolerance still combines") {
        std::vector<double> f1(5, 0.2), f2(5, 0.2);
        f1[0] += 1e-12;
        std::vector<double> pf = tfp_mle_combine(f1, f2, fact, 1e-8);
        CHECK(pf.size() == 9);
        CHECK_THROWS_AS((void)tfp_mle_combine(f1, f2, fact, 1e-14), precondition_error);
    }

    SUBCASE("zero shared marginal") {
        RatVec pb{Rat(1, 2), Rat(1, 2), Rat(0), Rat(0), Rat(0)};
        RatVec pc{Rat(1, 4), Rat(1, 4), Rat(0), Rat(0), Rat(1, 2)};
        CHECK_THROWS_AS((void)tfp_mle_combine(pb, pc, fact), precondition_error);
    }

    SUBCASE("length mismatch") {
        CHECK_THROWS_AS((void)tfp_mle_combine(RatVec(4, Rat(1, 4)), uniform2, fact),
                        input_error);
    }
}

TEST_CASE("the glued leveled matrix") {
    std::vector<CtfpFactorization> facts = find_ctfp(fixtures::glued_triples());
    REQUIRE(facts.size() == 1);
    MultipartitionMatrix M = build_glued_bar_matrix(facts[0]);

    CHECK(M.n_blocks() == 5);
    CHECK(M.n_rows() == 19);
    CHECK(M.n_cols() == 9);
    CHECK(M.columns == fixtures::glued_triples().tuples);
    CHECK(validate_multipartition(M).ok);

    // second factor's intersection rows carry ticked clique names
    bool found_tick = false;
    for (const MatrixRow& row : M.blocks[3].rows)
        if (row.label == "D4'^D3'") found_tick = true;
    CHECK(found_tick);

    // one exact cycle on it solves the glued model
    RatVec u = rat_counts({3, 1, 4, 1, 5, 9, 2, 6, 5});
    RatVec p = ips_one_cycle(M, u);
    CHECK(max_abs(birch_residual(build_a_matrix(fixtures::glued_triples()), u, p)) == 0);

    // and it matches the combined factor MLE
    auto [u1, u2] = project_counts(facts[0], fixtures::glued_triples(), u);
    RatVec combined = tfp_mle_combine(ips_one_cycle(build_bar_matrix(facts[0].s1).matrix, u1),
                                      ips_one_cycle(build_bar_matrix(facts[0].s2).matrix, u2),
                                      facts[0]);
    CHECK(p == combined);

    // factors must be 2-way
    CtfpFactorization bad = facts[0];
    bad.s1 = fixtures::glued_triples();
    CHECK_THROWS_AS((void)build_glued_bar_matrix(bad), precondition_error);
}

TEST_CASE("random rational models solve in one leveled cycle") {
    std::mt19937 rng(31415u);
    std::uniform_int_distribution<int> count(1, 9);
    int seen = 0;
    for (int trial = 0; trial < 300 && seen < 25; ++trial) {
        IndexSet s = oracles::random_index_set(rng, 2, 2, 5);
        if (!ml_degree_one_2way(s)) continue;
        ++seen;
        ReparamMatrix rep = build_bar_matrix(s);
        RatVec u;
        for (int c = 0; c < s.size(); ++c) u.emplace_back(count(rng));
        RatVec p = ips_one_cycle(rep.matrix, u);
        REQUIRE(max_abs(birch_residual(build_a_matrix(s), u, p)) == 0);

        // float agreement within the advertised tolerance
        std::vector<double> uf;
        for (const Rat& x : u) uf.push_back(rat_to_double(x));
        MLEResult res = ips_run(build_a_matrix(s), uf);
        REQUIRE(res.converged);
        for (size_t c = 0; c < p.size(); ++c)
            REQUIRE(res.p[c] == doctest::Approx(rat_to_double(p[c])).epsilon(1e-7));
    }
    REQUIRE(seen == 25);
}

TEST_SUITE_END();
