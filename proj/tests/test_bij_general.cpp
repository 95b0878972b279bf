#include <doctest.h>

#include "embtree/bij_general.hpp"
#include "embtree/conditions.hpp"
#include "embtree/oracle.hpp"

#include <set>

using namespace embtree;

TEST_CASE("general: smallest instance") {
    Profile P = Profile::parse("1;1");  // -1^1, 0^1
    SFunction f{P, StepSet({-1, 1}), {1, -1}};
    CHECK(classify_case(f) == PsiCase::A3);
    MarkedSTree t = psi(f);
    CHECK(tree_case(t) == PsiCase::A3);
    CHECK(psi_inverse(t) == f);
}

TEST_CASE("general: rejects inputs outside the domain") {
    Profile P = Profile::parse("1,1");
    SFunction f{P, StepSet({-1, 1}), {-1, 0}};
    CHECK_THROWS(psi(f));
}

TEST_CASE("general: exhaustive sweep, n <= 6") {
    for (const char* s : {"-1,1", "-1..1"}) {
        StepSet S = StepSet::parse(s);
        for (int n = 2; n <= 6; ++n)
            for (auto& P : profiles_of_size(n, false)) {
                if (P.ell() >= 0) continue;
                CAPTURE(s);
                CAPTURE(P.str());
                std::set<std::vector<int>> images;
                std::map<PsiCase, long> byCase;
                long nf = 0;
                bool outOk = true, inOk = true, rtOk = true, invOk = true, caseOk = true;
                enumerate_sfunctions(S, P, Regime::General, [&](const SFunction& f) {
                    ++nf;
                    PsiCase c = classify_case(f);
                    byCase[c]++;
                    MarkedSTree t1 = psi1(f);
                    MarkedSTree t = psi2(t1);
                    caseOk = caseOk && tree_case(t) == c && tree_case(t1) == c;
                    invOk = invOk && psi2(t) == t1;
                    auto df = type_distribution_of(f), dt = type_distribution_of(t);
                    outOk = outOk && df.out == dt.out;
                    if (df.in != dt.in && inOk) MESSAGE(case_name(c), " ", to_json(f).dump());
                    inOk = inOk && df.in == dt.in;
                    rtOk = rtOk && psi_inverse(t) == f && !check_general(t);
                    auto key = t.parent;
                    key.push_back(t.mark);
                    images.insert(key);
                });
                CHECK(outOk);
                CHECK(inOk);
                CHECK(rtOk);
                CHECK(invOk);
                CHECK(caseOk);
                CHECK(long(images.size()) == nf);
                long nt = 0;
                bool back = true;
                enumerate_marked_strees(S, P, Regime::General, [&](const MarkedSTree& t) {
                    ++nt;
                    back = back && psi(psi_inverse(t)) == t;
                });
                CHECK(nt == nf);
                CHECK(back);
            }
    }
}

TEST_CASE("general: every case occurs") {
    std::set<PsiCase> seen;
    StepSet S = StepSet::parse("-1..1");
    for (auto& P : profiles_of_size(5, false))
        if (P.ell() < 0 && P.r() >= 1)
            enumerate_sfunctions(S, P, Regime::General, [&](const SFunction& f) { seen.insert(classify_case(f)); });
    CHECK(seen.size() == 4);
}

TEST_CASE("general: trace is serializable") {
    Profile P = Profile::parse("1;2,1");
    StepSet S = StepSet::parse("-1..1");
    bool any = false;
    enumerate_sfunctions(S, P, Regime::General, [&](const SFunction& f) {
        if (any) return;
        PsiTrace tr;
        psi(f, &tr);
        auto j = psi_trace_json(P, tr);
        CHECK(j["case"] == case_name(tr.kase));
        any = true;
    });
    CHECK(any);
}
