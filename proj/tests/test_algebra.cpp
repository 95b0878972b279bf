#include <doctest.h>

#include "embtree/algebra.hpp"

#include <random>

using namespace embtree;

namespace {

CycleGraph G(int l, int r, const char* s) { return {l, r, StepSet::parse(s)}; }

Values random_y(std::mt19937& rng, int l, int r) {
    std::uniform_int_distribution<int> d(1, 9);
    Values y;
    for (int i = l; i <= r; ++i) y[i] = d(rng);
    return y;
}

WeightAssignment random_x(std::mt19937& rng, int l, int r, const StepSet& S) {
    std::uniform_int_distribution<int> num(1, 7), den(1, 3);
    WeightAssignment x;
    for (int i = l; i <= r; ++i)
        for (int s : S.steps()) x[{i, s}] = Rational(num(rng), den(rng));
    for (auto& [k, v] : x) v.canonicalize();
    return x;
}

}  // namespace

TEST_CASE("cycle configurations") {
    CHECK(G(0, 1, "-1,1").configuration_count() == 2);
    CHECK(G(0, 0, "0,1").configuration_count() == 2);
    CHECK(G(0, 2, "-1,1").configuration_count() == 3);
    CHECK_THROWS_AS(G(-7, 7, "-1,1").configuration_count(), BudgetExceeded);
}

TEST_CASE("descending runs are all the elementary cycles") {
    for (const char* s : {"1", "0,1", "-1,1", "-1..1", "-2,1", "-2,0,1", "-2,-1,1", "-3,-1,1", "-3..1"})
        for (int l = -3; l <= 0; ++l)
            for (int r = 0; r <= 3; ++r) {
                auto g = G(l, r, s);
                CAPTURE(s);
                CHECK(g.cycles() == g.cycles_generic());
            }
}

TEST_CASE("cycle polynomial, small cases") {
    Values y{{0, 5}, {1, 7}};
    CHECK(eval_P(G(0, 1, "-1,1"), y) == 7);
    CHECK(eval_P(G(0, 0, "0,1"), {{0, 4}}) == 1);
    CHECK(eval_P(G(0, 0, "1"), {{0, 4}}) == 0);
}

TEST_CASE("cycle polynomial identities on random points") {
    std::mt19937 rng(20111201);
    long checked = 0;
    for (const char* s : {"-1,1", "-1..1", "1", "-2,-1,1"})
        for (int l = -4; l <= 0; ++l)
            for (int r = 0; r <= 4; ++r) {
                if (l == 0 && r == 0) continue;
                StepSet S = StepSet::parse(s);
                if (S.m() != -1 && l < 0) continue;
                auto g = G(l, r, s);
                CAPTURE(s);
                CAPTURE(l);
                CAPTURE(r);
                for (int t = 0; t < 8; ++t) {
                    auto y = random_y(rng, l, r);
                    CHECK(eval_P(g, y) == eval_P_closed(g, y));
                    auto x = random_x(rng, l, r, S);
                    CHECK(eval_P_refined(g, y, x) == eval_P_refined_closed(g, y, x));
                    TypeDistribution d;
                    std::uniform_int_distribution<int> k(0, 4);
                    for (int i = l; i <= r; ++i)
                        for (int st : S.steps())
                            if (i - st >= l && i - st <= r) d.out[{i, st}] = k(rng);
                    CHECK(eval_P_out(g, d) == eval_P_out_closed(g, d));
                    ++checked;
                }
            }
    CHECK(checked >= 100);
}

TEST_CASE("identity needs its hypotheses") {
    auto g = G(-1, 1, "-2,-1,1");
    Values y{{-1, 2}, {0, 3}, {1, 5}};
    CHECK(eval_P(g, y) != eval_P_closed(g, y));
}

TEST_CASE("the (2,1) out-distribution") {
    TypeDistribution d;
    d.out[{0, -1}] = 1;
    d.out[{1, 1}] = 1;
    auto g = G(0, 1, "-1,1");
    CHECK(eval_P_out(g, d) == 1);
    CHECK(eval_P_out_closed(g, d) == 1);
}

TEST_CASE("determinant") {
    CHECK(determinant({}) == 1);
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    CHECK(determinant({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}) == 4);
    CHECK(determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("matrix-tree") {
    Profile P = Profile::parse("2;2,1");
    StepSet S({-1, 1});
    CHECK(laplacian_minor_det(P, S, {}) == 12);
    CHECK(spanning_trees_direct(P, S, {}) == 12);
    CHECK(cayley_from_spanning(P, S, {}) == 720);
    CHECK(laplacian_minor_det(Profile::parse("1"), S, {}) == 1);
    CHECK(cayley_from_spanning(Profile::parse("3"), StepSet({0, 1}), {}) == 9);
}

TEST_CASE("determinant against spanning trees and the product, n <= 6") {
    std::mt19937 rng(7);
    for (const char* s : {"1", "0,1", "-1,1", "-1..1", "-2,1", "-2..1"}) {
        StepSet S = StepSet::parse(s);
        for (int n = 1; n <= 6; ++n)
            for (auto& P : profiles_of_size(n, S.m() != -1)) {
                CAPTURE(s);
                CAPTURE(P.str());
                auto x = random_x(rng, P.ell(), P.r(), S);
                Rational det = laplacian_minor_det(P, S, x);
                CHECK(det == spanning_trees_direct(P, S, x));
                CHECK(det == laplacian_minor_closed(P, S, x));
                if (n <= 5 && !(P.ell() == 0 && P.r() == 0)) CHECK(cayley_from_spanning(P, S, x) == eval_out_gf(S, P, x));
            }
    }
}

TEST_CASE("tree in tree") {
    TargetTree path{{{1}, {0, 2}, {1}}, 1, {2, 2, 1}};
    CHECK(tree_in_tree_det(path) == 720);
    CHECK(tree_in_tree_brute(path) == 720);
    TargetTree star{{{1, 2, 3}, {0}, {0}, {0}}, 0, {2, 1, 1, 1}};
    CHECK(tree_in_tree_det(star) == count_tree_in_tree(star));
    CHECK(tree_in_tree_brute(star) == count_tree_in_tree(star));
    // one abscissa and no loop: only the single vertex embeds
    TargetTree one{{{}}, 0, {4}};
    CHECK(count_tree_in_tree(one) == 0);
    CHECK(tree_in_tree_det(one) == 0);
    CHECK(tree_in_tree_brute(one) == 0);
    one.counts = {1};
    CHECK(tree_in_tree_det(one) == 1);
    CHECK(count_tree_in_tree(one) == 1);
}
