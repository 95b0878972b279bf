#include <doctest.h>

#include "embtree/formulas.hpp"

using namespace embtree;

namespace {
Profile pr(const char* s) { return Profile::parse(s); }
StepSet st(const char* s) { return StepSet::parse(s); }
}  // namespace

TEST_CASE("arithmetic conventions") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(3, -1) == 0);
    CHECK(factorial(0) == 1);
    CHECK(power(Rational(0), 0) == 1);
    CHECK(power(Rational(2), -2) == Rational(1, 4));
    CHECK_THROWS_AS(to_integer(Rational(1, 2), "x"), NonIntegerResult);
}

TEST_CASE("horizontal profiles") {
    CHECK(count_binary_horizontal({1, 2, 4, 3, 2}) == 840);
    CHECK(count_binary_horizontal({1}) == 1);
    CHECK(count_binary_horizontal({1, 2}) == 1);
    CHECK_THROWS_AS(count_binary_horizontal({2, 1}), InvalidProfile);
}

TEST_CASE("vertical profile counts") {
    CHECK(count_binary_profile(pr("2;2,1")) == 3);
    CHECK(count_binary_profile(pr("1")) == 1);
    CHECK(count_binary_profile(pr("1,1,1")) == 1);
    CHECK(count_cayley_profile(st("-1,1"), pr("2;2,1")) == 720);
    CHECK(count_cayley_profile(st("0,1"), pr("3")) == 9);
    CHECK(count_cayley_profile(st("1"), pr("1,2")) == 3);
    CHECK(count_sary_profile(st("-1,1"), pr("2;2,1")) == 3);
    CHECK(count_sary_profile(st("-1..1"), pr("1,1")) == 1);
    CHECK(count_sary_profile(st("-1..1"), pr("1,2")) == 1);
    CHECK_THROWS_AS(count_cayley_profile(st("-2,-1,1"), pr("1,1,1,2,1;1")), HypothesisViolation);
    CHECK_THROWS_AS(count_sary_profile(st("-2,-1,1"), pr("1,1,1,2,1;1")), HypothesisViolation);
}

TEST_CASE("explained counts multiply out") {
    auto fs = explain_profile_count("cayley", st("-1,1"), pr("2;2,1"));
    Rational prod = 1;
    for (auto& f : fs) prod *= f.value;
    CHECK(prod == 720);
}

TEST_CASE("out-type counts") {
    TypeDistribution d;
    d.m = -1;
    d.out[{1, 1}] = 1;
    d.out[{0, -1}] = 1;
    CHECK(count_cayley_out(st("-1,1"), d) == 6);
    CHECK(count_sary_out(st("-1,1"), d) == 1);
    TypeDistribution e;
    e.m = -1;
    CHECK(count_cayley_out(st("-1,1"), e) == 1);
    TypeDistribution big;
    big.m = -1;
    big.out[{1, 1}] = 2;  // only one vertex at 0 to hang on
    CHECK(count_sary_out(st("-1,1"), big) == 0);
}

TEST_CASE("weighted generating function") {
    WeightAssignment ones;
    CHECK(eval_out_gf(st("-1,1"), pr("2;2,1"), ones) == 720);
    WeightAssignment z{{{1, 1}, Rational(0)}};
    CHECK(eval_out_gf(st("-1,1"), pr("2;2,1"), z) == 0);
}

TEST_CASE("in-type counts") {
    // rooted Cayley trees on 3 labels with in-degrees (2,0,0)
    TypeDistribution d;
    d.m = 0;
    d.in[{0, CVec{2, 0}}] = 1;
    d.in[{0, CVec{0, 0}}] = 2;
    CHECK(count_cayley_in(st("0,1"), d) == 3);
    TypeDistribution one;
    one.m = -1;
    one.in[{0, CVec{0, 0, 0}}] = 1;
    CHECK(count_cayley_in(st("-1,1"), one) == 1);
    CHECK(count_sary_in(st("-1,1"), one) == 1);
    TypeDistribution two;
    two.m = -1;
    two.in[{0, CVec{0, 0, 2}}] = 1;
    two.in[{1, CVec{0, 0, 0}}] = 2;
    CHECK_THROWS_AS(count_sary_in(st("-1,1"), two), NotInjective);
}

TEST_CASE("complete-type count of the single vertex") {
    TypeDistribution d;
    d.m = -1;
    d.rootIn = CVec{0, 0, 0};
    CHECK(count_cayley_complete(st("-1,1"), CVec{0, 0, 0}, d) == 1);
}

TEST_CASE("function families") {
    FamilyArgs a{st("-1,1"), pr("2,1"), {}, {}};
    CHECK(count_function_family(FamilyKind::Profile, Regime::NonNeg, a) == 1);
    a.profile = pr("1,1");
    CHECK(count_function_family(FamilyKind::Profile, Regime::NonNeg, a) == 1);
}

TEST_CASE("link factors") {
    CHECK(link_factor(pr("2;2,1"), Regime::General) == Rational(60));
    CHECK(link_factor(pr("2,1"), Regime::NonNeg) == 6);
}

TEST_CASE("Bernardi-Morales special cases agree with the product formula") {
    CHECK(count_cayley_profile_ell1(st("-1,1"), pr("2;2,1")) == 720);
    CHECK(count_cayley_profile_ell1(st("-1..1"), pr("1;2,1")) == count_cayley_profile(st("-1..1"), pr("1;2,1")));
    CHECK(count_cayley_profile_ell2(st("-1,1"), pr("1,2;2,1")) == count_cayley_profile(st("-1,1"), pr("1,2;2,1")));
    CHECK_THROWS_AS(count_cayley_profile_ell1(st("-1,1"), pr("1,1;1")), HypothesisViolation);
}

TEST_CASE("tree in tree") {
    TargetTree path{{{1}, {0, 2}, {1}}, 1, {2, 2, 1}};
    CHECK(count_tree_in_tree(path) == 720);
    TargetTree bad{{{1}, {0}}, 0, {1, 0}};
    CHECK_THROWS_AS(count_tree_in_tree(bad), NonSurjectiveProfile);
}

TEST_CASE("re-rooting identity") {
    // n_ell * C(n_ell..;..n_r) = m_{-ell} * C(shifted)
    for (const char* p : {"2;2,1", "1,2;1,3", "3;1", "1;1,1,2"}) {
        Profile P = pr(p);
        std::vector<int> c = P.counts();
        Profile Q(0, c);
        CAPTURE(p);
        CHECK(BigInt(P.n(P.ell())) * count_cayley_profile(st("-1,1"), P) ==
              BigInt(Q.n(-P.ell())) * count_cayley_profile(st("-1,1"), Q));
    }
}
