#include <doctest.h>

#include "embtree/formulas.hpp"
#include "embtree/oracle.hpp"
#include "embtree/sampler.hpp"
#include "embtree/serialize.hpp"

#include <set>

using namespace embtree;

namespace {

// draws = 200 per cell; returns the p-value, or -1 if a draw fell outside the support
template <class T, class Draw>
double uniformity(const std::vector<T>& support, Draw draw) {
    std::map<std::string, size_t> cell;
    for (auto& x : support) cell.emplace(to_json(x).dump(), cell.size());
    REQUIRE(cell.size() == support.size());
    std::vector<long> counts(support.size(), 0);
    for (size_t k = 0; k < 200 * support.size(); ++k) {
        auto it = cell.find(to_json(draw()).dump());
        if (it == cell.end()) return -1;
        counts[it->second]++;
    }
    return chi_square_uniform_pvalue(counts);
}

}  // namespace

TEST_CASE("sampling is deterministic per seed") {
    StepSet S({-1, 1});
    Profile P = Profile::parse("2;2,1");
    CHECK(sample_embedded_cayley(S, P, 42) == sample_embedded_cayley(S, P, 42));
    CHECK(sample_sary(S, P, 42) == sample_sary(S, P, 42));
    Rng a(3), b(3);
    CHECK(sample_sfunction(S, P, Regime::General, a) == sample_sfunction(S, P, Regime::General, b));
}

TEST_CASE("degenerate samples") {
    Rng rng(1);
    auto one = sample_embedded_cayley(StepSet({-1, 1}), Profile::parse("1"), rng);
    CHECK(one.size() == 1);
    SFunction f = sample_sfunction(StepSet({-1, 1}), Profile::parse("2,1"), Regime::NonNeg, rng);
    CHECK(f.image == std::vector<int>{-1, 2, 0});
    auto t = sample_sary(StepSet::parse("-1..1"), Profile::parse("1,1"), rng);
    CHECK(t.size() == 2);
    CHECK_THROWS_AS(sample_sary(StepSet({1}), Profile::parse("2,1"), rng), InfeasibleProfile);
    CHECK_THROWS_AS(sample_embedded_cayley(StepSet({-2, -1, 1}), Profile::parse("1;1"), rng), HypothesisViolation);
}

TEST_CASE("samples are uniform over the exact support") {
    Rng rng(20121001);
    struct Case {
        const char* steps;
        const char* profile;
    };
    for (auto c : {Case{"-1,1", "2;2,1"}, Case{"-1..1", "1;2,1"}, Case{"0,1", "2,2"}, Case{"-2,1", "1,2,1"}}) {
        StepSet S = StepSet::parse(c.steps);
        Profile P = Profile::parse(c.profile);
        CAPTURE(c.steps);
        CAPTURE(c.profile);
        std::vector<EmbeddedCayleyTree> trees;
        enumerate_embedded_cayley(S, P, [&](const EmbeddedCayleyTree& t) { trees.push_back(t); });
        REQUIRE(trees.size() <= 1000);
        CHECK(BigInt(long(trees.size())) == count_cayley_profile(S, P));
        double p = uniformity(trees, [&] { return sample_embedded_cayley(S, P, rng); });
        CHECK(p > 1e-3);

        std::vector<SAryTree> sary;
        enumerate_sary(S, P, [&](const SAryTree& t) { sary.push_back(t); });
        if (sary.size() >= 2) CHECK(uniformity(sary, [&] { return sample_sary(S, P, rng); }) > 1e-3);

        Regime g = P.ell() == 0 ? Regime::NonNeg : Regime::General;
        std::vector<SFunction> fs;
        enumerate_sfunctions(S, P, g, [&](const SFunction& f) { fs.push_back(f); });
        CHECK(uniformity(fs, [&] { return sample_sfunction(S, P, g, rng); }) > 1e-3);
    }
}

TEST_CASE("binary profile law") {
    auto two = profile_law(2, LawFamily::Binary);
    CHECK(two.counts.size() == 2);
    CHECK(two.probability(Profile::parse("1;1")) == Rational(1, 2));
    CHECK(two.probability(Profile::parse("1,1")) == Rational(1, 2));
    for (int n = 1; n <= 10; ++n) {
        auto law = profile_law(n, LawFamily::Binary);
        CHECK(law.sum() == 1);
        CHECK(law.total == binomial(2 * n, n) / (n + 1));
    }
    auto m = occupation_marginal(two, 0);
    CHECK(m.size() == 1);
    CHECK(m[1] == 1);
    auto three = profile_law(3, LawFamily::Binary);
    Rational s = 0;
    for (auto& [k, p] : occupation_marginal(three, 1)) s += p;
    CHECK(s == 1);
    CHECK_THROWS_AS(profile_law(9, LawFamily::Cayley), BudgetExceeded);
}

TEST_CASE("other laws") {
    auto ter = profile_law(5, LawFamily::Sary, StepSet::parse("-1..1"));
    CHECK(ter.total == binomial(15, 5) / 11);
    auto cay = profile_law(5, LawFamily::Cayley, StepSet({-1, 1}));
    CHECK(cay.total == 5 * 5 * 5 * 5 * 16);
}

TEST_CASE("probabilities are in lowest terms") {
    auto cay = profile_law(5, LawFamily::Cayley, StepSet({-1, 1}));
    CHECK(cay.sum() == 1);
    auto m = occupation_marginal(cay, 0);
    CHECK(m.at(2) == Rational(117, 250));
    Rational s = 0;
    for (auto& [k, p] : m) {
        CHECK(gcd(p.get_num(), p.get_den()) == 1);
        s += p;
    }
    CHECK(s == 1);
}
