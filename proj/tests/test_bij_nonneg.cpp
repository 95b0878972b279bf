#include <doctest.h>

#include "embtree/bij_nonneg.hpp"
#include "embtree/conditions.hpp"
#include "embtree/oracle.hpp"

#include <set>

using namespace embtree;

namespace {

const char* kSteps[] = {"1", "0,1", "-1,1", "-1..1", "-2,1", "-2,0,1", "-2,-1,1", "-2..1"};

std::map<std::pair<int, CVec>, long> in_census(const std::vector<VertexType>& ty) {
    std::map<std::pair<int, CVec>, long> c;
    for (auto& x : ty) c[{x.i, x.c}]++;
    return c;
}

}  // namespace

TEST_CASE("smallest instance") {
    Profile P = Profile::parse("1,1");
    SFunction f{P, StepSet({-1, 1}), {-1, 0}};
    MarkedSTree t = phi(f);
    CHECK(t.parent == std::vector<int>{-1, 0});
    CHECK(t.mark == 1);
    CHECK(phi_inverse(t) == f);
}

TEST_CASE("lower records split a path") {
    auto ps = pieces_of_path({7, 9, 5, 6, 8, 2, 0});
    REQUIRE(ps.size() == 4);
    CHECK(ps[0].path == std::vector<int>{7, 9});
    CHECK(ps[1].path == std::vector<int>{5, 6, 8});
    CHECK(ps[3].source == 0);
}

TEST_CASE("rejects inputs outside the domain") {
    Profile P = Profile::parse("2,1");
    SFunction bad{P, StepSet::parse("-1..1"), {-1, 0, 1}};  // 1^1 -> 0^2 breaks (F)
    CHECK_THROWS_AS(phi(bad), PreconditionViolated);
    MarkedSTree t{P, StepSet::parse("-1..1"), {-1, 2, 1}, 0, 2};  // 1^1 -> 0^2 -> ... not a tree
    CHECK_THROWS(phi_inverse(t));
    Profile Q = Profile::parse("2,2");
    MarkedSTree u{Q, StepSet::parse("-1..1"), {-1, 0, 0, 1}, 0, 3};  // path 1^2 0^2 0^1: (T) fails
    CHECK_THROWS_AS(phi_inverse(u), ConditionViolated);
}

TEST_CASE("exhaustive sweep, n <= 5") {
    for (const char* s : kSteps) {
        StepSet S = StepSet::parse(s);
        bool zero = S.has(0);
        for (int n = 1; n <= 5; ++n)
            for (auto& P : profiles_of_size(n, true)) {
                CAPTURE(s);
                CAPTURE(P.str());
                std::set<std::vector<int>> images;
                long nf = 0;
                bool outOk = true, inOk = true, compOk = true, rtOk = true, shapeOk = true, invOk = true;
                enumerate_sfunctions(S, P, Regime::NonNeg, [&](const SFunction& f) {
                    ++nf;
                    PhiTrace tr;
                    MarkedSTree t1 = phi1(f, &tr);
                    for (auto& pc : tr.pieces) {
                        if (P.index(pc.source) == 1) continue;
                        int i = P.abscissa(pc.source), j = P.abscissa(pc.sink);
                        bool ok = j == i + 1 || (j == i && P.index(pc.sink) >= P.index(pc.source) && zero);
                        shapeOk = shapeOk && ok;
                    }
                    MarkedSTree t = phi2(t1);
                    invOk = invOk && phi2(t) == t1;
                    if (!zero) invOk = invOk && t == t1;
                    auto tf = vertex_types(f.image, P.abscissas(), S.m());
                    auto tt = vertex_types(t.parent, P.abscissas(), S.m());
                    auto t1t = vertex_types(t1.parent, P.abscissas(), S.m());
                    for (int v = 0; v < P.total(); ++v) {
                        outOk = outOk && tf[v].s == tt[v].s;
                        if (!zero) compOk = compOk && tf[v] == tt[v] && tf[v] == t1t[v];
                    }
                    inOk = inOk && in_census(tf) == in_census(tt);
                    rtOk = rtOk && phi_inverse(t) == f && !check_T(t);
                    auto key = t.parent;
                    key.push_back(t.mark);
                    images.insert(key);
                });
                CHECK(outOk);
                CHECK(inOk);
                CHECK(compOk);
                CHECK(rtOk);
                CHECK(shapeOk);
                CHECK(invOk);
                CHECK(long(images.size()) == nf);
                long nt = 0;
                bool back = true;
                enumerate_marked_strees(S, P, Regime::NonNeg, [&](const MarkedSTree& t) {
                    ++nt;
                    back = back && phi(phi_inverse(t)) == t;
                });
                CHECK(nt == nf);
                CHECK(back);
            }
    }
}

TEST_CASE("complete types can change when 0 is a step") {
    // f(1^1) = 0^1, f(0^2) = 0^2
    Profile P = Profile::parse("2,1");
    StepSet S = StepSet::parse("0,1");
    SFunction f{P, S, {-1, 1, 0}};
    auto want = type_distribution_of(f);
    bool realized = false;
    enumerate_marked_strees(S, P, Regime::NonNeg, [&](const MarkedSTree& t) {
        auto d = type_distribution_of(t);
        realized = realized || (d.complete == want.complete && d.rootIn == want.rootIn);
    });
    CHECK_FALSE(realized);
    // out-types and in-type census still survive the bijection
    auto d = type_distribution_of(phi(f));
    CHECK(d.out == want.out);
    CHECK(d.in == want.in);
}

TEST_CASE("trace is serializable") {
    Profile P = Profile::parse("2,3");
    StepSet S = StepSet::parse("-1..1");
    SFunction f{P, S, {-1, 3, 0, 2, 1}};
    PhiTrace tr;
    phi(f, &tr);
    auto j = trace_json(P, tr);
    CHECK(j["pieces"].size() == tr.pieces.size());
    CHECK(j.contains("frustration"));
}
