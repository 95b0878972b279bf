#include <doctest.h>

#include "embtree/conditions.hpp"
#include "embtree/core.hpp"
#include "embtree/serialize.hpp"

using namespace embtree;

TEST_CASE("step sets") {
    StepSet S = StepSet::parse("-2..1");
    CHECK(S.steps() == std::vector<int>{-2, -1, 0, 1});
    CHECK(S.m() == -2);
    CHECK(StepSet::parse("1,-1,1").str() == "-1,1");
    CHECK_THROWS_AS(StepSet({-1, 2}), HypothesisViolation);
    CHECK_THROWS_AS(StepSet(std::vector<int>{}), HypothesisViolation);
    CHECK_THROWS_AS(StepSet::parse("a,1"), ParseError);
    CHECK(StepSet::relaxed({2, -1, 1}).M() == 2);
}

TEST_CASE("profiles") {
    Profile P = Profile::parse("2;2,1");
    CHECK(P.ell() == -1);
    CHECK(P.r() == 1);
    CHECK(P.total() == 5);
    CHECK(P.n(-1) == 2);
    CHECK(P.n(2) == 0);
    CHECK(P.str() == "2;2,1");
    CHECK(P.id(0, 1) == 2);
    CHECK(P.abscissa(4) == 1);
    CHECK(P.index(3) == 2);
    CHECK(Profile::parse("3").ell() == 0);
    CHECK_THROWS_AS(Profile::parse("1;0,1"), ParseError);
    CHECK_THROWS_AS(Profile::parse("1,1;"), ParseError);
}

TEST_CASE("profile validation by regime") {
    CHECK_NOTHROW(validate_profile_for(StepSet({-1, 1}), Profile::parse("2;2,1"), Regime::General));
    CHECK_THROWS_AS(validate_profile_for(StepSet({-2, -1, 1}), Profile::parse("1,1,1,2,1;1"), Regime::General),
                    HypothesisViolation);
    CHECK_NOTHROW(validate_profile_for(StepSet({1}), Profile::parse("1,2"), Regime::NonNeg));
    CHECK_THROWS_AS(validate_profile_for(StepSet({-1, 1}), Profile::parse("1;1"), Regime::NonNeg),
                    HypothesisViolation);
}

TEST_CASE("types of a three-vertex tree") {
    // root at 0, child at 1, grandchild at 0
    EmbeddedCayleyTree t{StepSet({-1, 1}), 0, {-1, 0, 1}, {0, 1, 0}};
    t.validate();
    auto d = type_distribution_of(t);
    CHECK(d.out == std::map<std::pair<int, int>, long>{{{1, 1}, 1}, {{0, -1}, 1}});
    CHECK(d.compatible());
    CHECK(d.rootIn == CVec{0, 0, 1});
    CHECK(t.profile() == Profile::parse("2,1"));
}

TEST_CASE("single vertex has the zero in-type") {
    EmbeddedCayleyTree t{StepSet({-1, 1}), 0, {-1}, {0}};
    auto d = type_distribution_of(t);
    CHECK(d.out.empty());
    CHECK(d.complete.empty());
    CHECK(d.in.size() == 1);
    CHECK(d.in.begin()->first == std::make_pair(0, CVec{0, 0, 0}));
}

TEST_CASE("types of a function use pre-images") {
    Profile P = Profile::parse("2,1");
    SFunction f{P, StepSet::parse("-1..1"), {-1, 2, 0}};  // 0^2 -> 1^1 -> 0^1
    f.validate();
    auto ty = vertex_types(f.image, P.abscissas(), -1);
    CHECK(ty[0].s == EPS);
    CHECK(ty[0].c == CVec{0, 0, 1});
    CHECK(ty[1].s == -1);
    CHECK(ty[2].c == CVec{1, 0, 0});
}

TEST_CASE("distribution compatibility rejects bad counts") {
    TypeDistribution d;
    d.m = -1;
    d.out[{1, 1}] = 1;
    d.in[{0, CVec{0, 0, 1}}] = 1;
    d.in[{1, CVec{0, 0, 0}}] = 1;
    CHECK(d.compatible());
    d.in[{1, CVec{0, 0, 0}}] = 2;
    CHECK_FALSE(d.compatible());
}

TEST_CASE("sary conversion and labelings") {
    EmbeddedCayleyTree t{StepSet({-1, 1}), 1, {1, -1, 1}, {-1, 0, 1}};
    CHECK(t.is_injective());
    SAryTree s = sary_of(t);
    CHECK(s.size() == 3);
    CHECK(s.steps == std::vector<int>{-1, 1});
    EmbeddedCayleyTree u{StepSet({-1, 1}), 1, {1, -1, 1}, {1, 0, 1}};
    CHECK_FALSE(u.is_injective());
    CHECK_THROWS_AS(sary_of(u), NotInjective);
}

TEST_CASE("json round trips") {
    Profile P = Profile::parse("2;2,1");
    StepSet S({-1, 1});
    SFunction f{P, S, {2, 3, -1, 4, 3}};
    f.validate();
    CHECK(sfunction_from_json(json::parse(canonical(f))) == f);

    MarkedSTree t{P, S, {2, 2, -1, 4, 2}, 2, 4};
    t.validate();
    CHECK(marked_tree_from_json(json::parse(canonical(t))) == t);

    EmbeddedCayleyTree c{S, 0, {-1, 0, 1}, {0, 1, 0}};
    CHECK(cayley_from_json(json::parse(canonical(c))) == c);
    CHECK(canonical(c) == R"({"abscissa":[0,1,0],"n":3,"parent":[0,1,2],"root":1,"steps":[-1,1]})");

    SAryTree s = sary_of(c);
    CHECK(sary_from_json(json::parse(canonical(s))) == s);

    auto d = type_distribution_of(c);
    CHECK(distribution_from_json(json::parse(canonical(d))) == d);
}

TEST_CASE("invalid trees are rejected") {
    Profile P = Profile::parse("2,1");
    MarkedSTree cyc{P, StepSet::parse("-1..1"), {-1, 2, 1}, 0, 2};
    CHECK_THROWS_AS(cyc.validate(), PreconditionViolated);
    MarkedSTree badstep{P, StepSet({1}), {-1, 0, 0}, 0, 2};
    CHECK_THROWS_AS(badstep.validate(), PreconditionViolated);
}

TEST_CASE("paths and meets") {
    std::vector<int> par{-1, 0, 0, 1, 1};
    CHECK(path_to_root(par, 3) == std::vector<int>{3, 1, 0});
    CHECK(meet(par, 3, 4) == 1);
    CHECK(meet(par, 3, 2) == 0);
    CHECK(meet(par, 3, 1) == 1);
}

TEST_CASE("condition (T) on the smallest instance") {
    Profile P = Profile::parse("1,1");
    MarkedSTree t{P, StepSet({-1, 1}), {-1, 0}, 0, 1};
    CHECK_FALSE(check_T(t).has_value());
}

TEST_CASE("exit codes") {
    CHECK(exit_code_for(ErrorKind::Internal) == 1);
    CHECK(exit_code_for(ErrorKind::Hypothesis) == 2);
    CHECK(exit_code_for(ErrorKind::Parse) == 2);
    CHECK(exit_code_for(ErrorKind::Budget) == 3);
}
