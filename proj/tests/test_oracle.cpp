#include <doctest.h>

#include "embtree/formulas.hpp"
#include "embtree/oracle.hpp"
#include "embtree/serialize.hpp"

#include <set>

using namespace embtree;

namespace {
Profile pr(const char* s) { return Profile::parse(s); }
StepSet st(const char* s) { return StepSet::parse(s); }

long count_cayley(const StepSet& S, const Profile& P) {
    long c = 0;
    enumerate_embedded_cayley(S, P, [&](const EmbeddedCayleyTree&) { ++c; });
    return c;
}
long count_sary(const StepSet& S, const Profile& P) {
    long c = 0;
    enumerate_sary(S, P, [&](const SAryTree&) { ++c; });
    return c;
}
long count_functions(const StepSet& S, const Profile& P, Regime g) {
    long c = 0;
    enumerate_sfunctions(S, P, g, [&](const SFunction&) { ++c; });
    return c;
}
long count_trees(const StepSet& S, const Profile& P, Regime g) {
    long c = 0;
    enumerate_marked_strees(S, P, g, [&](const MarkedSTree&) { ++c; });
    return c;
}
}  // namespace

TEST_CASE("small embedded Cayley counts") {
    CHECK(count_cayley(st("-1,1"), pr("2;2,1")) == 720);
    CHECK(count_cayley(st("1"), pr("1,2")) == 3);
    CHECK(count_cayley(st("0,1"), pr("3")) == 9);
    CHECK(count_cayley(st("-1,1"), pr("2,1")) == 6);
}

TEST_CASE("small S-ary counts") {
    CHECK(count_sary(st("-1,1"), pr("2;2,1")) == 3);
    CHECK(count_sary(st("-1..1"), pr("1,1")) == 1);
    CHECK(count_sary(st("-1..1"), pr("1,2")) == 1);
    long all = 0;
    enumerate_sary_size(st("-1,1"), 3, [&](const SAryTree&) { ++all; });
    CHECK(all == 5);
}

TEST_CASE("binary horizontal profile by brute force") {
    // a binary tree's horizontal profile is its per-depth census
    long hits = 0;
    EnumerationBudget b;
    b.maxSize = 12;
    std::vector<int> want{1, 2, 4, 3, 2};
    enumerate_sary_size(st("-1,1"), 12, [&](const SAryTree& t) {
        std::vector<int> h;
        std::vector<const SAryTree*> lvl{&t};
        while (!lvl.empty()) {
            h.push_back(int(lvl.size()));
            std::vector<const SAryTree*> nxt;
            for (auto* x : lvl)
                for (auto& k : x->kids) nxt.push_back(&k);
            lvl = nxt;
        }
        if (h == want) ++hits;
    }, b);
    CHECK(hits == 840);
}

TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(enumerate_embedded_cayley_size(st("-1,1"), 9, [](const EmbeddedCayleyTree&) {}),
                    BudgetExceeded);
    EnumerationBudget tiny;
    tiny.maxSteps = 10;
    CHECK_THROWS_AS(enumerate_embedded_cayley(st("-1,1"), pr("2;2,1"), [](const EmbeddedCayleyTree&) {}, tiny),
                    BudgetExceeded);
}

TEST_CASE("enumeration is duplicate free") {
    std::set<std::string> seen;
    long c = 0;
    enumerate_embedded_cayley(st("-1..1"), pr("1;2,1"), [&](const EmbeddedCayleyTree& t) {
        seen.insert(canonical(t));
        ++c;
    });
    CHECK(long(seen.size()) == c);
    std::set<std::string> s2;
    long c2 = 0;
    enumerate_sary_size(st("-1..1"), 5, [&](const SAryTree& t) {
        s2.insert(canonical(t));
        ++c2;
    });
    CHECK(long(s2.size()) == c2);
}

TEST_CASE("injective trees over n! are S-ary trees") {
    for (const char* p : {"2;2,1", "1;2,2", "1,2,1"}) {
        long inj = 0;
        enumerate_embedded_cayley(st("-1..1"), pr(p), [&](const EmbeddedCayleyTree& t) { inj += t.is_injective(); });
        CAPTURE(p);
        CHECK(BigInt(inj) == factorial(pr(p).total()) * count_sary(st("-1..1"), pr(p)));
    }
}

TEST_CASE("function and tree families have equal size") {
    CHECK(count_functions(st("-1,1"), pr("2,1"), Regime::NonNeg) == 1);
    CHECK(count_functions(st("-1,1"), pr("1"), Regime::NonNeg) == 1);
    CHECK(count_trees(st("-1,1"), pr("1,1"), Regime::NonNeg) == 1);
    for (const char* p : {"2,1", "2,2", "1,2,1", "3,1", "2,1,2"})
        for (const char* s : {"1", "0,1", "-1,1", "-1..1", "-2..1", "-2,0,1"}) {
            CAPTURE(p);
            CAPTURE(s);
            long f = count_functions(st(s), pr(p), Regime::NonNeg);
            CHECK(f == count_trees(st(s), pr(p), Regime::NonNeg));
            FamilyArgs a{st(s), pr(p), {}, {}};
            CHECK(BigInt(f) == count_function_family(FamilyKind::Profile, Regime::NonNeg, a));
        }
    for (const char* p : {"1;1", "2;2,1", "1;2,1", "1,1;2", "2;1,1"})
        for (const char* s : {"-1,1", "-1..1"}) {
            CAPTURE(p);
            CAPTURE(s);
            long f = count_functions(st(s), pr(p), Regime::General);
            CHECK(f == count_trees(st(s), pr(p), Regime::General));
            FamilyArgs a{st(s), pr(p), {}, {}};
            CHECK(BigInt(f) == count_function_family(FamilyKind::Profile, Regime::General, a));
        }
}

TEST_CASE("out census of the three-vertex trees") {
    CensusBuilder cb(Granularity::Out, -1);
    enumerate_embedded_cayley(st("-1,1"), pr("2,1"), [&](const EmbeddedCayleyTree& t) { cb(t); });
    REQUIRE(cb.result().size() == 1);
    auto& [d, n] = *cb.result().begin();
    CHECK(n == 6);
    CHECK(d.out == std::map<std::pair<int, int>, long>{{{1, 1}, 1}, {{0, -1}, 1}});
}

TEST_CASE("profile census of binary trees of size 3") {
    CensusBuilder cb(Granularity::Profile, -1);
    enumerate_sary_size(st("-1,1"), 3, [&](const SAryTree& t) { cb(t); });
    BigInt total = 0;
    for (auto& [d, n] : cb.result()) {
        total += n;
        CHECK(n == count_binary_profile(d.profile()));
    }
    CHECK(total == 5);
}

TEST_CASE("complete census of the three-vertex trees matches the formula") {
    CensusBuilder cb(Granularity::Complete, -1);
    enumerate_embedded_cayley(st("-1,1"), pr("2,1"), [&](const EmbeddedCayleyTree& t) { cb(t); });
    for (auto& [d, n] : cb.result()) CHECK(n == count_cayley_complete(st("-1,1"), d.rootIn, d));
}

TEST_CASE("Bernardi-Morales formulas against the oracle") {
    for (const char* p : {"1;2,1,1", "2;1,1,1", "1;1,2,1", "1;1,1,1,1"}) {
        CAPTURE(p);
        CHECK(BigInt(count_cayley(st("-2,-1,1"), pr(p))) == count_cayley_profile_ell1(st("-2,-1,1"), pr(p)));
    }
    for (const char* p : {"1,1;2,1", "1,1;1,1,1", "1,2;1,1", "2,1;1,1"}) {
        CAPTURE(p);
        CHECK(BigInt(count_cayley(st("-2,-1,1"), pr(p))) == count_cayley_profile_ell2(st("-2,-1,1"), pr(p)));
    }
}
