#include "embtree/verify.hpp"

#include "embtree/algebra.hpp"
#include "embtree/bij_general.hpp"
#include "embtree/bij_nonneg.hpp"
#include "embtree/conditions.hpp"
#include "embtree/formulas.hpp"
#include "embtree/oracle.hpp"
#include "embtree/sampler.hpp"

#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace embtree {

namespace {

struct Acc {
    CheckResult r;
    explicit Acc(std::string id) { r.id = std::move(id); }
    void expect(bool ok, const std::function<std::string()>& what) {
        ++r.cases;
        if (!ok && r.pass) {
            r.pass = false;
            r.detail = what();
        }
    }
    // the formula may itself throw on a distribution it should accept
    void expect_eq(const std::function<BigInt()>& formula, const BigInt& want, const std::function<std::string()>& where) {
        try {
            BigInt got = formula();
            expect(got == want, [&] { return where() + ": formula " + got.get_str() + ", oracle " + want.get_str(); });
        } catch (const Error& e) {
            expect(false, [&] { return where() + ": " + e.what(); });
        }
    }
};

std::string at(const StepSet& S, const Profile& P) { return "S={" + S.str() + "} P=" + P.str(); }

CheckResult pin(const std::string& id, const BigInt& got, const BigInt& want) {
    return {id, got == want, 1, "got " + got.get_str() + ", expected " + want.get_str()};
}

template <class Enum>
BigInt tally(Enum e) {
    long c = 0;
    e([&](auto&&) { ++c; });
    return BigInt(c);
}

using CensusKey = std::pair<std::map<std::tuple<int, int, CVec>, long>, CVec>;
CensusKey complete_key(const TypeDistribution& d) { return {d.complete, d.rootIn}; }

}  // namespace

json report_json(const Report& r) {
    json arr = json::array();
    for (auto& c : r) arr.push_back({{"id", c.id}, {"pass", c.pass}, {"cases", c.cases}, {"detail", c.detail}});
    return {{"pass", all_pass(r)}, {"checks", arr}};
}

bool all_pass(const Report& r) {
    for (auto& c : r)
        if (!c.pass) return false;
    return true;
}

std::vector<StepSet> small_step_sets() {
    std::vector<StepSet> out;
    for (const char* s : {"1", "0,1", "-1,1", "-1..1", "-2,1", "-2,0,1", "-2,-1,1", "-2..1"}) out.push_back(StepSet::parse(s));
    return out;
}

Report verify_pinned_counts() {
    Report rep;
    rep.push_back(pin("binary (2;2,1)", count_binary_profile(Profile::parse("2;2,1")), 3));
    rep.push_back(pin("cayley {-1,1} (2;2,1)", count_cayley_profile(StepSet({-1, 1}), Profile::parse("2;2,1")), 720));
    rep.push_back(pin("cayley {0,1} (3)", count_cayley_profile(StepSet({0, 1}), Profile::parse("3")), 9));
    return rep;
}

Report verify_prime_pins() {
    Report rep;
    struct Prime {
        StepSet S;
        Profile P;
    };
    for (auto& [S, P] : {Prime{StepSet({-2, -1, 1}), Profile::parse("1,1,1,2,1;1")},
                         Prime{StepSet::relaxed({-1, 1, 2}), Profile::parse("1,1,2,1,1,1")}}) {
        rep.push_back(pin("oracle sary " + at(S, P),
                          tally([&](auto f) { enumerate_sary(S, P, [&](const SAryTree& t) { f(t); }); }), 107));
        rep.push_back(pin("oracle cayley " + at(S, P),
                          tally([&](auto f) { enumerate_embedded_cayley(S, P, [&](const EmbeddedCayleyTree& t) { f(t); }); }),
                          115560));
    }
    return rep;
}

Report verify_regression() {
    Report rep = verify_pinned_counts();
    for (auto& c : verify_prime_pins()) rep.push_back(c);
    Profile P = Profile::parse("2;2,1");
    StepSet S({-1, 1});
    rep.push_back(pin("laplacian minor (2;2,1)", to_integer(laplacian_minor_det(P, S, {}), "det"), 12));
    return rep;
}

Report verify_formulas(int maxN, const std::vector<StepSet>& sets) {
    Acc cp("cayley profile"), co("cayley out"), ci("cayley in"), cc("cayley complete"), sp("sary profile"),
        so("sary out"), si("sary in"), bp("binary profile");
    for (auto& S : sets)
        for (int n = 1; n <= maxN; ++n)
            for (auto& P : profiles_of_size(n, S.m() != -1)) {
                auto where = [&] { return at(S, P); };
                CensusBuilder out(Granularity::Out, S.m()), in(Granularity::In, S.m()), comp(Granularity::Complete, S.m());
                long total = 0;
                enumerate_embedded_cayley(S, P, [&](const EmbeddedCayleyTree& t) {
                    ++total;
                    out(t);
                    in(t);
                    comp(t);
                });
                cp.expect_eq([&] { return count_cayley_profile(S, P); }, total, where);
                for (auto& [d, c] : out.result()) co.expect_eq([&] { return count_cayley_out(S, d); }, c, where);
                for (auto& [d, c] : in.result()) ci.expect_eq([&] { return count_cayley_in(S, d); }, c, where);
                if (P.ell() == 0 && !S.has(0))
                    for (auto& [d, c] : comp.result())
                        cc.expect_eq([&] { return count_cayley_complete(S, d.rootIn, d); }, c, where);

                CensusBuilder sout(Granularity::Out, S.m()), sin(Granularity::In, S.m());
                long stotal = 0;
                enumerate_sary(S, P, [&](const SAryTree& t) {
                    ++stotal;
                    sout(t);
                    sin(t);
                });
                sp.expect_eq([&] { return count_sary_profile(S, P); }, stotal, where);
                for (auto& [d, c] : sout.result()) so.expect_eq([&] { return count_sary_out(S, d); }, c, where);
                for (auto& [d, c] : sin.result()) si.expect_eq([&] { return count_sary_in(S, d); }, c, where);
                if (S == StepSet({-1, 1})) bp.expect_eq([&] { return count_binary_profile(P); }, stotal, where);
            }
    return {cp.r, co.r, ci.r, cc.r, sp.r, so.r, si.r, bp.r};
}

Report verify_phi(int maxN, const std::vector<StepSet>& sets) {
    Acc rt("phi round trip"), sur("phi onto marked trees"), inj("phi injective"), outp("phi out-type per vertex"),
        inc("phi in-type census"), comp("phi complete types iff 0 not in S"), inv("phi2 involution");
    for (auto& S : sets) {
        bool zero = S.has(0), changed = false;
        for (int n = 1; n <= maxN; ++n)
            for (auto& P : profiles_of_size(n, true)) {
                auto where = [&] { return at(S, P); };
                std::set<std::vector<int>> images;
                long nf = 0;
                enumerate_sfunctions(S, P, Regime::NonNeg, [&](const SFunction& f) {
                    ++nf;
                    MarkedSTree t1 = phi1(f), t = phi2(t1);
                    auto tf = vertex_types(f.image, P.abscissas(), S.m());
                    auto tt = vertex_types(t.parent, P.abscissas(), S.m());
                    bool same = true, sameComplete = true;
                    for (int v = 0; v < P.total(); ++v) {
                        same = same && tf[v].s == tt[v].s;
                        sameComplete = sameComplete && tf[v] == tt[v];
                    }
                    auto df = type_distribution_of(f), dt = type_distribution_of(t);
                    outp.expect(same, where);
                    inc.expect(df.in == dt.in, where);
                    if (!zero) comp.expect(sameComplete, where);
                    changed = changed || complete_key(df) != complete_key(dt);
                    inv.expect(phi2(t) == t1, where);
                    rt.expect(phi_inverse(t) == f && !check_T(t), where);
                    auto key = t.parent;
                    key.push_back(t.mark);
                    images.insert(key);
                });
                inj.expect(long(images.size()) == nf, where);
                long nt = 0;
                enumerate_marked_strees(S, P, Regime::NonNeg, [&](const MarkedSTree& t) {
                    ++nt;
                    sur.expect(phi(phi_inverse(t)) == t, where);
                });
                sur.expect(nt == nf, [&] { return where() + ": tree and function counts differ"; });
            }
        if (zero) comp.expect(changed, [&] { return "S={" + S.str() + "}: complete types never changed"; });
    }
    return {rt.r, sur.r, inj.r, outp.r, inc.r, comp.r, inv.r};
}

Report verify_psi(int maxN, const std::vector<StepSet>& sets) {
    Acc rt("psi round trip"), sur("psi onto marked trees"), inj("psi injective"), outc("psi out-type census"),
        inc("psi in-type census"), cs("psi case correspondence"), inv("psi2 involution");
    for (auto& S : sets)
        for (int n = 2; n <= maxN; ++n)
            for (auto& P : profiles_of_size(n, false)) {
                if (P.ell() >= 0) continue;
                auto where = [&] { return at(S, P); };
                std::set<std::vector<int>> images;
                long nf = 0;
                enumerate_sfunctions(S, P, Regime::General, [&](const SFunction& f) {
                    ++nf;
                    PsiCase c = classify_case(f);
                    MarkedSTree t1 = psi1(f), t = psi2(t1);
                    auto df = type_distribution_of(f), dt = type_distribution_of(t);
                    outc.expect(df.out == dt.out, where);
                    inc.expect(df.in == dt.in, where);
                    cs.expect(tree_case(t) == c, where);
                    inv.expect(psi2(t) == t1, where);
                    rt.expect(psi_inverse(t) == f && !check_general(t), where);
                    auto key = t.parent;
                    key.push_back(t.mark);
                    images.insert(key);
                });
                inj.expect(long(images.size()) == nf, where);
                long nt = 0;
                enumerate_marked_strees(S, P, Regime::General, [&](const MarkedSTree& t) {
                    ++nt;
                    sur.expect(psi(psi_inverse(t)) == t, where);
                });
                sur.expect(nt == nf, [&] { return where() + ": tree and function counts differ"; });
            }
    return {rt.r, sur.r, inj.r, outc.r, inc.r, cs.r, inv.r};
}

Report verify_negative_controls() {
    Report rep;
    {
        // f(1^1) = 0^1, f(0^2) = 0^2
        Profile P = Profile::parse("2,1");
        StepSet S({0, 1});
        SFunction f{P, S, {-1, 1, 0}};
        auto want = complete_key(type_distribution_of(f));
        bool realized = false;
        enumerate_marked_strees(S, P, Regime::NonNeg,
                                [&](const MarkedSTree& t) { realized = realized || complete_key(type_distribution_of(t)) == want; });
        bool ok = satisfies_F(f, Regime::NonNeg) && !realized;
        rep.push_back({"function census without a tree", ok, 1, "f = " + to_json(f).dump()});
    }
    {
        Profile P = Profile::parse("2;2,1");
        CheckResult r{"tree census without a function", false, 0, "none found"};
        for (auto S : {StepSet({-1, 1}), StepSet::parse("-1..1")}) {
            std::set<CensusKey> fs;
            enumerate_sfunctions(S, P, Regime::General, [&](const SFunction& f) { fs.insert(complete_key(type_distribution_of(f))); });
            enumerate_marked_strees(S, P, Regime::General, [&](const MarkedSTree& t) {
                ++r.cases;
                if (r.pass || fs.count(complete_key(type_distribution_of(t)))) return;
                r.pass = true;
                r.detail = "tree = " + to_json(t).dump();
            });
            if (r.pass) break;
        }
        rep.push_back(r);
    }
    return rep;
}

Report verify_closure(int binaryN, int ternaryN, int cayleyN) {
    Acc b("binary sums to Catalan"), t("ternary sums to C(3n,n)/(2n+1)"), c("cayley {-1,1} sums to n^(n-1) 2^(n-1)");
    auto sum = [](int n, const std::function<BigInt(const Profile&)>& f) {
        BigInt s = 0;
        for (auto& P : profiles_of_size(n, false)) s += f(P);
        return s;
    };
    for (int n = 1; n <= binaryN; ++n) {
        BigInt got = sum(n, count_binary_profile), want = binomial(2 * n, n) / (n + 1);
        b.expect(got == want, [&] { return "n=" + std::to_string(n) + ": " + got.get_str(); });
    }
    StepSet ter = StepSet::parse("-1..1"), pm({-1, 1});
    for (int n = 1; n <= ternaryN; ++n) {
        BigInt got = sum(n, [&](const Profile& P) { return count_sary_profile(ter, P); });
        BigInt want = binomial(3 * n, n) / (2 * n + 1);
        t.expect(got == want, [&] { return "n=" + std::to_string(n) + ": " + got.get_str(); });
    }
    for (int n = 1; n <= cayleyN; ++n) {
        BigInt got = sum(n, [&](const Profile& P) { return count_cayley_profile(pm, P); });
        BigInt want;
        mpz_pow_ui(want.get_mpz_t(), BigInt(n).get_mpz_t(), n - 1);
        want <<= n - 1;
        c.expect(got == want, [&] { return "n=" + std::to_string(n) + ": " + got.get_str(); });
    }
    return {b.r, t.r, c.r};
}

Report verify_identities(int span, int points, std::uint64_t seed) {
    Acc lem("cycle lemma"), ide("out-type cycle identity"), ref("refined cycle identity");
    Rng rng(seed);
    std::uniform_int_distribution<int> yd(1, 9), kd(0, 4), num(1, 7), den(1, 3);
    for (const char* s : {"-1,1", "-1..1", "1", "-2,-1,1"}) {
        StepSet S = StepSet::parse(s);
        for (int l = -span; l <= 0; ++l)
            for (int r = 0; r <= span; ++r) {
                if (S.m() != -1 && l < 0) continue;
                CycleGraph g{l, r, S};
                auto where = [&] { return "S={" + S.str() + "} l=" + std::to_string(l) + " r=" + std::to_string(r); };
                for (int k = 0; k < points; ++k) {
                    Values y;
                    WeightAssignment x;
                    TypeDistribution d;
                    for (int i = l; i <= r; ++i) {
                        y[i] = yd(rng);
                        for (int st : S.steps()) {
                            x[{i, st}] = Rational(num(rng), den(rng));
                            x[{i, st}].canonicalize();
                            if (i - st >= l && i - st <= r) d.out[{i, st}] = kd(rng);
                        }
                    }
                    lem.expect(eval_P(g, y) == eval_P_closed(g, y), where);
                    ide.expect(eval_P_out(g, d) == eval_P_out_closed(g, d), where);
                    ref.expect(eval_P_refined(g, y, x) == eval_P_refined_closed(g, y, x), where);
                }
            }
    }
    // outside the hypotheses the lemma must fail somewhere
    CheckResult probe{"cycle lemma fails for S={-2,-1,1}, l<0", false, 0, "no counterexample found"};
    CycleGraph g{-1, 1, StepSet({-2, -1, 1})};
    for (int k = 0; k < 100 && !probe.pass; ++k) {
        Values y{{-1, yd(rng)}, {0, yd(rng)}, {1, yd(rng)}};
        ++probe.cases;
        Rational a = eval_P(g, y), b = eval_P_closed(g, y);
        if (a != b) {
            probe.pass = true;
            std::ostringstream os;
            os << "l=-1 r=1 y=(" << y[-1] << "," << y[0] << "," << y[1] << "): sum " << a << ", closed form " << b;
            probe.detail = os.str();
        }
    }
    return {lem.r, ide.r, ref.r, probe};
}

Report verify_matrix_tree(int maxN, const std::vector<StepSet>& sets, std::uint64_t seed) {
    Acc direct("determinant = spanning tree listing"), closed("determinant = product"), conv("spanning trees convert to cayley count");
    Rng rng(seed);
    std::uniform_int_distribution<int> num(1, 7), den(1, 3);
    for (auto& S : sets)
        for (int n = 1; n <= maxN; ++n)
            for (auto& P : profiles_of_size(n, S.m() != -1)) {
                auto where = [&] { return at(S, P); };
                WeightAssignment x;
                for (int i = P.ell(); i <= P.r(); ++i)
                    for (int s : S.steps()) {
                        x[{i, s}] = Rational(num(rng), den(rng));
                        x[{i, s}].canonicalize();
                    }
                Rational det = laplacian_minor_det(P, S, x);
                direct.expect(det == spanning_trees_direct(P, S, x), where);
                closed.expect(det == laplacian_minor_closed(P, S, x), where);
                conv.expect(cayley_from_spanning(P, S, {}) == Rational(count_cayley_profile(S, P)), where);
            }
    Profile P = Profile::parse("2;2,1");
    StepSet S({-1, 1});
    return {direct.r, closed.r, conv.r, pin("laplacian minor (2;2,1)", to_integer(laplacian_minor_det(P, S, {}), "det"), 12),
            pin("cayley from spanning (2;2,1)", to_integer(cayley_from_spanning(P, S, {}), "count"), 720)};
}

namespace {

template <class T, class Draw>
CheckResult chi_square(const std::string& id, const std::vector<T>& support, Draw draw) {
    std::map<std::string, size_t> cell;
    for (auto& x : support) cell.emplace(to_json(x).dump(), cell.size());
    std::vector<long> counts(cell.size(), 0);
    long draws = 200 * long(cell.size());
    for (long k = 0; k < draws; ++k) {
        auto it = cell.find(to_json(draw()).dump());
        if (it == cell.end()) return {id, false, k + 1, "draw outside the support"};
        counts[it->second]++;
    }
    double p = chi_square_uniform_pvalue(counts);
    std::ostringstream os;
    os << "support " << cell.size() << ", draws " << draws << ", p = " << p;
    return {id, p > 1e-3, draws, os.str()};
}

}  // namespace

Report verify_sampler(std::uint64_t seed) {
    Report rep;
    struct Case {
        const char* steps;
        const char* profile;
    };
    std::uint64_t k = 0;
    for (auto c : {Case{"-1,1", "2;2,1"}, Case{"-1..1", "1;2,1"}, Case{"0,1", "2,2"}, Case{"-2,1", "1,2,1"}}) {
        StepSet S = StepSet::parse(c.steps);
        Profile P = Profile::parse(c.profile);
        std::string tag = at(S, P) + " seed " + std::to_string(seed + k);
        Rng rng(seed + k++);
        std::vector<EmbeddedCayleyTree> trees;
        enumerate_embedded_cayley(S, P, [&](const EmbeddedCayleyTree& t) { trees.push_back(t); });
        rep.push_back(chi_square("cayley sampler " + tag, trees, [&] { return sample_embedded_cayley(S, P, rng); }));
        std::vector<SAryTree> sary;
        enumerate_sary(S, P, [&](const SAryTree& t) { sary.push_back(t); });
        if (sary.size() >= 2) rep.push_back(chi_square("sary sampler " + tag, sary, [&] { return sample_sary(S, P, rng); }));
        Regime g = P.ell() == 0 ? Regime::NonNeg : Regime::General;
        std::vector<SFunction> fs;
        enumerate_sfunctions(S, P, g, [&](const SFunction& f) { fs.push_back(f); });
        rep.push_back(chi_square("function sampler " + tag, fs, [&] { return sample_sfunction(S, P, g, rng); }));
    }
    return rep;
}

Report verify_law(int maxN) {
    Acc a("binary profile law sums to 1");
    for (int n = 1; n <= maxN; ++n) {
        auto law = profile_law(n, LawFamily::Binary);
        a.expect(law.sum() == 1 && law.total == binomial(2 * n, n) / (n + 1), [&] { return "n=" + std::to_string(n); });
    }
    return {a.r};
}

namespace {

std::string shape(const std::vector<std::vector<int>>& kids, int v) {
    std::vector<std::string> parts;
    for (int w : kids[v]) parts.push_back(shape(kids, w));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    return s + ")";
}

// rooted trees on k nodes up to isomorphism, root 0, parents before children
std::vector<TargetTree> rooted_shapes(int k) {
    std::map<std::string, TargetTree> seen;
    std::vector<int> par(k, -1);
    std::function<void(int)> rec = [&](int v) {
        if (v == k) {
            TargetTree T;
            T.adj.assign(k, {});
            std::vector<std::vector<int>> kids(k);
            for (int w = 1; w < k; ++w) {
                T.adj[w].push_back(par[w]);
                T.adj[par[w]].push_back(w);
                kids[par[w]].push_back(w);
            }
            seen.emplace(shape(kids, 0), T);
            return;
        }
        for (int p = 0; p < v; ++p) {
            par[v] = p;
            rec(v + 1);
        }
    };
    rec(1);
    std::vector<TargetTree> out;
    for (auto& [s, T] : seen) out.push_back(T);
    return out;
}

void compositions(int n, int k, std::vector<int>& cur, const std::function<void()>& emit) {
    if (int(cur.size()) == k - 1) {
        if (n >= 1) {
            cur.push_back(n);
            emit();
            cur.pop_back();
        }
        return;
    }
    for (int a = 1; a <= n - (k - int(cur.size()) - 1); ++a) {
        cur.push_back(a);
        compositions(n - a, k, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

Report verify_tree_in_tree(int maxAbscissas, int maxN) {
    Acc det("tree-in-tree formula = determinant"), brute("tree-in-tree formula = morphism listing");
    for (int k = 1; k <= maxAbscissas; ++k)
        for (auto T : rooted_shapes(k))
            for (int n = k; n <= maxN; ++n) {
                std::vector<int> cur;
                compositions(n, k, cur, [&] {
                    T.counts = cur;
                    auto where = [&] {
                        std::string s = "k=" + std::to_string(k) + " counts=";
                        for (int c : T.counts) s += std::to_string(c) + " ";
                        return s;
                    };
                    BigInt f = count_tree_in_tree(T);
                    det.expect(f == tree_in_tree_det(T), where);
                    brute.expect(f == tree_in_tree_brute(T), where);
                });
            }
    return {det.r, brute.r};
}

}  // namespace embtree
