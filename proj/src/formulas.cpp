#include "embtree/formulas.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace embtree {

BigInt factorial(long n) {
    if (n < 0) throw InternalError("factorial of a negative number");
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return c;
}

Rational power(const Rational& x, long e) {
    if (e == 0) return 1;
    if (e < 0) {
        if (x == 0) throw InternalError("0 raised to a negative power");
        return power(1 / x, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

BigInt to_integer(const Rational& q, const std::string& what) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() != 1) throw NonIntegerResult(what + " evaluated to non-integer " + c.get_str());
    return c.get_num();
}

int TargetTree::size() const {
    int n = 0;
    for (int c : counts) n += c;
    return n;
}

namespace {

Rational Q(long v) { return Rational(v); }

long neighbours(const StepSet& S, const Profile& P, int i) {
    long t = 0;
    for (int s : S.steps()) t += P.n(i - s);
    return t;
}

Rational extremity_prefactor(const Profile& P) {
    Rational q(P.n(0), long(P.n(P.ell())) * P.n(P.r()));
    q.canonicalize();
    return q;
}

Rational labelings(const Profile& P) {
    Rational q = Rational(factorial(P.total()));
    for (int i = P.ell(); i <= P.r(); ++i) q /= Rational(factorial(P.n(i) - 1));
    return q;
}

Profile profile_from_counts(std::map<int, long> c, const char* what) {
    c[0] += 0;
    std::vector<int> counts;
    for (int i = c.begin()->first; i <= c.rbegin()->first; ++i) {
        long x = c.count(i) ? c[i] : 0;
        if (x <= 0)
            throw IncompatibleDistribution(std::string(what) + ": abscissa " + std::to_string(i) +
                                           " would be empty");
        counts.push_back(int(x));
    }
    return Profile(c.begin()->first, counts);
}

void check_nonneg(long v, const char* what) {
    if (v < 0) throw IncompatibleDistribution(std::string(what) + ": negative count");
}

// n(i,s) from the out part, validated against S and the profile
void check_out(const StepSet& S, const Profile& P, const TypeDistribution& d) {
    for (auto& [k, v] : d.out) {
        check_nonneg(v, "out-distribution");
        if (!v) continue;
        if (!S.has(k.second)) throw IncompatibleDistribution("out-type step " + std::to_string(k.second) + " not in S");
        if (P.n(k.first - k.second) == 0)
            throw IncompatibleDistribution("out-type (" + std::to_string(k.first) + ";" + std::to_string(k.second) +
                                           ") points to an empty abscissa");
    }
}

long out_n(const TypeDistribution& d, int i, int s) {
    auto it = d.out.find({i, s});
    return it == d.out.end() ? 0 : it->second;
}

// c(i): number of vertices whose parent lies at abscissa i
std::map<int, long> image_counts(const TypeDistribution& d) {
    std::map<int, long> c;
    for (auto& [k, v] : d.out) c[k.first - k.second] += v;
    return c;
}

Rational spine_out_product(const Profile& P, const std::function<long(int, int)>& nis) {
    Rational q = 1;
    for (int i = P.ell(); i <= -1; ++i) q *= Q(nis(i, -1));
    for (int i = 1; i <= P.r(); ++i) q *= Q(nis(i, 1));
    return q;
}

void check_in_vectors(const StepSet& S, const TypeDistribution& d) {
    int w = 2 - d.m;
    if (d.m > S.m()) throw IncompatibleDistribution("c-vectors do not cover min S");
    for (auto& [k, v] : d.in) {
        check_nonneg(v, "in-distribution");
        if (int(k.second.size()) != w) throw IncompatibleDistribution("c-vector has wrong length");
        if (!v) continue;
        for (int s = d.m; s <= 1; ++s)
            if (k.second[s - d.m] && !S.has(s))
                throw IncompatibleDistribution("c-vector uses step " + std::to_string(s) + " outside S");
    }
    if (!d.compatible()) throw IncompatibleDistribution("in-distribution violates the compatibility identity");
}

// n(i,s) = sum_c c^s n(i-s,c)
long in_out_count(const TypeDistribution& d, int i, int s) {
    long t = 0;
    for (auto& [k, v] : d.in)
        if (k.first == i - s) t += long(k.second[s - d.m]) * v;
    return t;
}

// prod_{s,b} b!^{n_s(b)} over a list of (c-vector, multiplicity)
Rational child_factorials(const std::vector<std::pair<CVec, long>>& cs) {
    Rational q = 1;
    for (auto& [c, mult] : cs)
        for (int x : c) q *= power(Rational(factorial(x)), mult);
    return q;
}

}  // namespace

Profile profile_of_out(const TypeDistribution& d) {
    std::map<int, long> c;
    c[0] = 1;
    for (auto& [k, v] : d.out) c[k.first] += v;
    return profile_from_counts(c, "out-distribution");
}

Profile profile_of_in(const TypeDistribution& d) {
    std::map<int, long> c;
    for (auto& [k, v] : d.in) c[k.first] += v;
    return profile_from_counts(c, "in-distribution");
}

Profile profile_of_complete(const TypeDistribution& d) {
    std::map<int, long> c;
    c[0] = 1;
    for (auto& [k, v] : d.complete) c[std::get<0>(k)] += v;
    return profile_from_counts(c, "complete distribution");
}

BigInt count_binary_horizontal(const std::vector<int>& h) {
    if (h.empty() || h[0] != 1) throw InvalidProfile("horizontal profile must start with h_0 = 1");
    BigInt q = 1;
    for (size_t i = 0; i + 1 < h.size(); ++i) {
        if (h[i + 1] < 1) throw InvalidProfile("horizontal profile entries must be positive");
        q *= binomial(2L * h[i], h[i + 1]);
    }
    return q;
}

BigInt count_binary_profile(const Profile& P) {
    Rational q = extremity_prefactor(P) * Rational(binomial(P.n(-1) + P.n(1), P.n(0) - 1));
    for (int i = P.ell(); i <= P.r(); ++i)
        if (i != 0) q *= Rational(binomial(P.n(i - 1) + P.n(i + 1) - 1, P.n(i) - 1));
    return to_integer(q, "binary profile count");
}

BigInt count_cayley_profile(const StepSet& S, const Profile& P) {
    require_product_hypothesis(S, P);
    Rational q = extremity_prefactor(P) * labelings(P);
    for (int i = P.ell(); i <= P.r(); ++i) q *= power(Q(neighbours(S, P, i)), P.n(i) - 1);
    return to_integer(q, "Cayley profile count");
}

BigInt count_sary_profile(const StepSet& S, const Profile& P) {
    require_product_hypothesis(S, P);
    Rational q = extremity_prefactor(P) * Rational(binomial(neighbours(S, P, 0), P.n(0) - 1));
    for (int i = P.ell(); i <= P.r(); ++i)
        if (i != 0) q *= Rational(binomial(neighbours(S, P, i) - 1, P.n(i) - 1));
    return to_integer(q, "S-ary profile count");
}

std::vector<Factor> explain_profile_count(const std::string& kind, const StepSet& S0, const Profile& P) {
    StepSet S = kind == "binary" ? StepSet({-1, 1}) : S0;
    require_product_hypothesis(S, P);
    std::vector<Factor> f;
    f.push_back({"extremity prefactor n_0/(n_l n_r)", extremity_prefactor(P)});
    if (kind == "cayley") {
        f.push_back({"labelings n!/prod (n_i-1)!", labelings(P)});
        for (int i = P.ell(); i <= P.r(); ++i)
            f.push_back({"abscissa " + std::to_string(i) + ": (sum_s n_{i-s})^(n_i-1)",
                         power(Q(neighbours(S, P, i)), P.n(i) - 1)});
    } else {
        f.push_back({"abscissa 0: C(sum_s n_{-s}, n_0-1)", Rational(binomial(neighbours(S, P, 0), P.n(0) - 1))});
        for (int i = P.ell(); i <= P.r(); ++i)
            if (i != 0)
                f.push_back({"abscissa " + std::to_string(i) + ": C(sum_s n_{i-s}-1, n_i-1)",
                             Rational(binomial(neighbours(S, P, i) - 1, P.n(i) - 1))});
    }
    return f;
}

BigInt count_cayley_out(const StepSet& S, const TypeDistribution& d) {
    Profile P = profile_of_out(d);
    check_out(S, P, d);
    require_product_hypothesis(S, P);
    auto c = image_counts(d);
    Rational q = Rational(factorial(P.total()));
    for (int i = P.ell(); i <= P.r(); ++i) q *= power(Q(P.n(i)), c[i] - 1);
    q *= spine_out_product(P, [&](int i, int s) { return out_n(d, i, s); });
    for (auto& [k, v] : d.out) q /= Rational(factorial(v));
    return to_integer(q, "Cayley out-type count");
}

Rational eval_out_gf(const StepSet& S, const Profile& P, const WeightAssignment& x) {
    require_product_hypothesis(S, P);
    auto w = [&](int i, int s) {
        auto it = x.find({i, s});
        return it == x.end() ? Rational(1) : it->second;
    };
    Rational q = extremity_prefactor(P) * labelings(P);
    for (int i = P.ell(); i <= -1; ++i) q *= w(i, -1);
    for (int i = 1; i <= P.r(); ++i) q *= w(i, 1);
    for (int i = P.ell(); i <= P.r(); ++i) {
        Rational t = 0;
        for (int s : S.steps()) t += Q(P.n(i - s)) * w(i, s);
        q *= power(t, P.n(i) - 1);
    }
    return q;
}

BigInt count_sary_out(const StepSet& S, const TypeDistribution& d) {
    Profile P = profile_of_out(d);
    check_out(S, P, d);
    require_product_hypothesis(S, P);
    Rational q = spine_out_product(P, [&](int i, int s) { return out_n(d, i, s); });
    for (int i = P.ell(); i <= P.r(); ++i) q /= Q(P.n(i));
    for (auto& [k, v] : d.out) q *= Rational(binomial(P.n(k.first - k.second), v));
    return to_integer(q, "S-ary out-type count");
}

BigInt count_cayley_in(const StepSet& S, const TypeDistribution& d) {
    check_in_vectors(S, d);
    Profile P = profile_of_in(d);
    require_product_hypothesis(S, P);
    Rational q = Rational(factorial(P.total()));
    for (int i = P.ell(); i <= P.r(); ++i) q *= Rational(factorial(P.n(i) - 1));
    q *= spine_out_product(P, [&](int i, int s) { return in_out_count(d, i, s); });
    std::vector<std::pair<CVec, long>> cs;
    for (auto& [k, v] : d.in) {
        q /= Rational(factorial(v));
        cs.push_back({k.second, v});
    }
    q /= child_factorials(cs);
    return to_integer(q, "Cayley in-type count");
}

BigInt count_sary_in(const StepSet& S, const TypeDistribution& d) {
    for (auto& [k, v] : d.in)
        if (v > 0)
            for (int x : k.second)
                if (x > 1) throw NotInjective("in-type with two children at the same abscissa");
    Profile P = profile_of_in(d);
    return to_integer(Rational(count_cayley_in(S, d)) / Rational(factorial(P.total())), "S-ary in-type count");
}

namespace {

void check_complete_hypotheses(const StepSet& S, int m, const CVec& c0) {
    if (S.has(0)) throw HypothesisViolation("complete-type formula requires 0 not in S");
    if (m > S.m()) throw IncompatibleDistribution("c-vectors do not cover min S");
    if (int(c0.size()) != 2 - m) throw IncompatibleDistribution("root c-vector has wrong length");
    for (int s = m; s <= 0; ++s)
        if (c0[s - m]) throw IncompatibleDistribution("root in-type must be (0,...,0,c^1)");
}

struct CompleteStats {
    std::map<std::pair<int, int>, long> nis;   // n(i,s)
    std::map<int, long> spineChildren;         // sum_b b n_1(i,1,b)
    std::vector<std::pair<CVec, long>> cs;     // all vertices incl. root
};

CompleteStats complete_stats(const TypeDistribution& d, const CVec& c0) {
    CompleteStats st;
    st.cs.push_back({c0, 1});
    for (auto& [k, v] : d.complete) {
        auto& [i, s, c] = k;
        st.nis[{i, s}] += v;
        if (s == 1) st.spineChildren[i] += long(c[1 - d.m]) * v;
        st.cs.push_back({c, v});
    }
    return st;
}

}  // namespace

BigInt count_cayley_complete(const StepSet& S, const CVec& c0, const TypeDistribution& d) {
    check_complete_hypotheses(S, d.m, c0);
    int w = 2 - d.m;
    for (auto& [k, v] : d.complete) {
        auto& [i, s, c] = k;
        check_nonneg(v, "complete distribution");
        if (int(c.size()) != w) throw IncompatibleDistribution("c-vector has wrong length");
        if (!v) continue;
        if (i < 0) throw HypothesisViolation("complete-type formula requires ell = 0");
        if (!S.has(s)) throw IncompatibleDistribution("out-type step not in S");
        for (int t = d.m; t <= 1; ++t)
            if (c[t - d.m] && !S.has(t)) throw IncompatibleDistribution("c-vector uses a step outside S");
    }
    TypeDistribution dd = d;
    dd.rootIn = c0;
    if (!dd.complete.empty() && !dd.compatible())
        throw IncompatibleDistribution("complete distribution violates the compatibility identity");
    Profile P = profile_of_complete(d);
    if (P.r() == 0) {
        // single vertex: the c_0^1 factor is an empty product
        if (P.total() != 1 || c0[1 - d.m] != 0) throw IncompatibleDistribution("r = 0 forces a single vertex");
        return 1;
    }
    auto st = complete_stats(d, c0);
    Rational q = Q(c0[1 - d.m]) * Rational(factorial(P.total()));
    for (auto& [k, v] : st.nis) q *= Rational(factorial(v));
    for (int i = 1; i <= P.r() - 1; ++i) q *= Q(st.spineChildren[i]);
    for (auto& [k, v] : d.complete) q /= Rational(factorial(v));
    for (int i = 1; i <= P.r(); ++i) q /= Q(st.nis[{i, 1}]);
    q /= child_factorials(st.cs);
    return to_integer(q, "Cayley complete-type count");
}

Rational link_factor(const Profile& P, Regime regime) {
    Rational q = labelings(P) / Q(P.n(P.r()));
    if (regime == Regime::General) q /= Q(P.n(P.ell()));
    return q;
}

namespace {

void family_hypotheses(Regime regime, const StepSet& S, const Profile& P) {
    validate_profile_for(S, P, regime);
    if (regime == Regime::General && P.ell() >= 0) throw HypothesisViolation("general regime requires ell < 0");
}

int forced_step(Regime regime, int i) {
    if (i == 0) return EPS;
    if (i >= 1) return 1;
    return regime == Regime::General ? -1 : EPS;
}

Rational fixed_out(Regime regime, const StepSet& S, const Profile& P, const std::vector<VertexType>& ty) {
    if (int(ty.size()) != P.total()) throw IncompatibleDistribution("one type per vertex expected");
    std::map<int, long> c;
    for (int v = 0; v < P.total(); ++v) {
        int i = P.abscissa(v), s = ty[v].s;
        if (P.index(v) == 1 && forced_step(regime, i) != s) return 0;
        if (v == P.id(0, 1)) continue;
        if (s == EPS || !S.has(s) || P.n(i - s) == 0) return 0;
        c[i - s]++;
    }
    Rational q = Q(P.n(P.r()));
    if (regime == Regime::General) q *= Q(P.n(P.ell()));
    for (int i = P.ell(); i <= P.r(); ++i) q *= power(Q(P.n(i)), c[i] - 1);
    return q;
}

// n_j - chi_{j=0} = sum_s sum_{v at j-s} c_v^s for every j
bool in_vectors_consistent(const Profile& P, const std::vector<VertexType>& ty, int m) {
    std::map<int, long> arrive;
    for (int v = 0; v < P.total(); ++v)
        for (int s = m; s <= 1; ++s) arrive[P.abscissa(v) + s] += ty[v].c[s - m];
    for (auto& [j, a] : arrive)
        if (a != P.n(j) - (j == 0 ? 1 : 0)) return false;
    for (int j = P.ell(); j <= P.r(); ++j)
        if (arrive[j] != P.n(j) - (j == 0 ? 1 : 0)) return false;
    return true;
}

Rational fixed_in(Regime regime, const StepSet& S, const Profile& P, const std::vector<VertexType>& ty) {
    if (int(ty.size()) != P.total() || ty.empty()) throw IncompatibleDistribution("one type per vertex expected");
    int m = 2 - int(ty[0].c.size());
    if (regime == Regime::General && (S.m() != -1 || m > -1)) throw HypothesisViolation("requires S within [-1,1]");
    for (auto& t : ty)
        for (int s = m; s <= 1; ++s)
            if (t.c[s - m] && !S.has(s)) return 0;
    if (!in_vectors_consistent(P, ty, m)) return 0;
    Rational q = 1;
    for (int i = P.ell(); i <= P.r(); ++i) q *= Rational(factorial(P.n(i) - 1));
    std::vector<std::pair<CVec, long>> cs;
    for (auto& t : ty) cs.push_back({t.c, 1});
    q /= child_factorials(cs);
    for (int i = 0; i <= P.r() - 1; ++i) q *= Q(ty[P.id(i, 1)].c[1 - m]);
    if (regime == Regime::General) {
        q *= Q(P.n(-1));
        for (int i = P.ell() + 1; i <= -1; ++i) q *= Q(ty[P.id(i, 1)].c[-1 - m]);
    }
    return q;
}

Rational counted_in(Regime regime, const StepSet& S, const TypeDistribution& d) {
    check_in_vectors(S, d);
    Profile P = profile_of_in(d);
    if (regime == Regime::NonNeg && P.ell() != 0) throw HypothesisViolation("non-negative regime requires ell = 0");
    if (regime == Regime::General && (P.ell() >= 0 || S.m() != -1 || d.m > -1))
        throw HypothesisViolation("general regime requires ell < 0 and S within [-1,1]");
    Rational q = Q(P.n(P.r()));
    if (regime == Regime::General) q *= Q(P.n(P.ell()));
    for (int i = P.ell(); i <= P.r(); ++i) q *= power(Rational(factorial(P.n(i) - 1)), 2);
    q *= spine_out_product(P, [&](int i, int s) { return in_out_count(d, i, s); });
    std::vector<std::pair<CVec, long>> cs;
    for (auto& [k, v] : d.in) {
        q /= Rational(factorial(v));
        cs.push_back({k.second, v});
    }
    return q / child_factorials(cs);
}

Rational fixed_complete(const StepSet& S, const Profile& P, const std::vector<VertexType>& ty) {
    if (int(ty.size()) != P.total() || ty.empty()) throw IncompatibleDistribution("one type per vertex expected");
    int m = 2 - int(ty[0].c.size());
    check_complete_hypotheses(S, m, ty[P.id(0, 1)].c);
    std::map<std::pair<int, int>, long> nis, arrive;
    for (int v = 0; v < P.total(); ++v) {
        int i = P.abscissa(v), s = ty[v].s;
        if (P.index(v) == 1 && forced_step(Regime::NonNeg, i) != s) return 0;
        for (int t = m; t <= 1; ++t)
            if (ty[v].c[t - m]) {
                if (!S.has(t)) return 0;
                arrive[{i + t, t}] += ty[v].c[t - m];
            }
        if (v == P.id(0, 1)) continue;
        if (s == EPS || !S.has(s) || P.n(i - s) == 0) return 0;
        nis[{i, s}]++;
    }
    if (nis != arrive) return 0;
    Rational q = 1;
    for (auto& [k, v] : nis) q *= Rational(factorial(v));
    std::vector<std::pair<CVec, long>> cs;
    for (auto& t : ty) cs.push_back({t.c, 1});
    q /= child_factorials(cs);
    for (int i = 1; i <= P.r(); ++i) q /= Q(nis[{i, 1}]);
    for (int i = 0; i <= P.r() - 1; ++i) q *= Q(ty[P.id(i, 1)].c[1 - m]);
    return q;
}

Rational counted_complete(const StepSet& S, const TypeDistribution& d) {
    const CVec& c0 = d.rootIn;
    check_complete_hypotheses(S, d.m, c0);
    if (!d.compatible()) throw IncompatibleDistribution("complete distribution violates the compatibility identity");
    Profile P = profile_of_complete(d);
    if (P.ell() != 0) throw HypothesisViolation("complete-type lemma requires ell = 0");
    if (P.r() == 0) return 1;
    auto st = complete_stats(d, c0);
    Rational q = Q(c0[1 - d.m]) * Q(P.n(P.r()));
    for (int i = 0; i <= P.r(); ++i) q *= Rational(factorial(P.n(i) - 1));
    for (auto& [k, v] : st.nis) q *= Rational(factorial(v));
    for (int i = 1; i <= P.r() - 1; ++i) q *= Q(st.spineChildren[i]);
    for (auto& [k, v] : d.complete) q /= Rational(factorial(v));
    for (int i = 1; i <= P.r(); ++i) q /= Q(st.nis[{i, 1}]);
    return q / child_factorials(st.cs);
}

}  // namespace

BigInt count_function_family(FamilyKind kind, Regime regime, const FamilyArgs& a) {
    const StepSet& S = a.steps;
    const Profile& P = a.profile;
    Rational q;
    switch (kind) {
        case FamilyKind::Profile:
            family_hypotheses(regime, S, P);
            q = regime == Regime::General ? Q(P.n(0)) : Rational(1);
            for (int i = P.ell(); i <= P.r(); ++i) q *= power(Q(neighbours(S, P, i)), P.n(i) - 1);
            break;
        case FamilyKind::InjectiveProfile:
            family_hypotheses(regime, S, P);
            q = regime == Regime::General ? Q(P.n(0)) : Rational(1);
            q *= Rational(binomial(neighbours(S, P, 0), P.n(0) - 1));
            for (int i = P.ell(); i <= P.r(); ++i) {
                if (i != 0) q *= Rational(binomial(neighbours(S, P, i) - 1, P.n(i) - 1));
                q *= Rational(factorial(P.n(i) - 1));
            }
            break;
        case FamilyKind::OutFixed:
            family_hypotheses(regime, S, P);
            q = fixed_out(regime, S, P, a.fixed);
            break;
        case FamilyKind::OutCounted: {
            Profile Q0 = profile_of_out(a.dist);
            family_hypotheses(regime, S, Q0);
            check_out(S, Q0, a.dist);
            auto c = image_counts(a.dist);
            q = Q(Q0.n(Q0.r()));
            if (regime == Regime::General) q *= Q(Q0.n(Q0.ell()));
            for (int i = Q0.ell(); i <= Q0.r(); ++i)
                q *= Rational(factorial(Q0.n(i) - 1)) * power(Q(Q0.n(i)), c[i] - 1);
            q *= spine_out_product(Q0, [&](int i, int s) { return out_n(a.dist, i, s); });
            for (auto& [k, v] : a.dist.out) q /= Rational(factorial(v));
            break;
        }
        case FamilyKind::InFixed:
            family_hypotheses(regime, S, P);
            q = fixed_in(regime, S, P, a.fixed);
            break;
        case FamilyKind::InCounted: q = counted_in(regime, S, a.dist); break;
        case FamilyKind::CompleteFixed:
            if (regime != Regime::NonNeg) throw HypothesisViolation("complete-type lemma is non-negative only");
            family_hypotheses(regime, S, P);
            q = fixed_complete(S, P, a.fixed);
            break;
        case FamilyKind::CompleteCounted:
            if (regime != Regime::NonNeg) throw HypothesisViolation("complete-type lemma is non-negative only");
            q = counted_complete(S, a.dist);
            break;
    }
    return to_integer(q, "function family count");
}

namespace {

Rational bm_prefix(const StepSet& S, const Profile& P) {
    Rational q = Rational(factorial(P.total()));
    for (int i = P.ell(); i <= P.r(); ++i) q /= Rational(factorial(P.n(i)));
    for (int i = 0; i <= P.r() - 1; ++i) q *= Q(P.n(i));
    for (int i = P.ell(); i <= P.r(); ++i) q *= power(Q(neighbours(S, P, i)), P.n(i) - 1);
    return q;
}

// sum over s in S with s <= bound of n_{-s+shift}
long tail_sum(const StepSet& S, const Profile& P, int bound, int shift) {
    long t = 0;
    for (int s : S.steps())
        if (s <= bound) t += P.n(-s + shift);
    return t;
}

}  // namespace

BigInt count_cayley_profile_ell1(const StepSet& S, const Profile& P) {
    if (P.ell() != -1) throw HypothesisViolation("formula requires ell = -1");
    return to_integer(bm_prefix(S, P) * Q(tail_sum(S, P, -1, -1)), "ell = -1 profile count");
}

BigInt count_cayley_profile_ell2(const StepSet& S, const Profile& P) {
    if (P.ell() != -2) throw HypothesisViolation("formula requires ell = -2");
    long br = long(P.n(-2)) * tail_sum(S, P, -2, -2) + tail_sum(S, P, -1, -2) * tail_sum(S, P, -1, -1);
    return to_integer(bm_prefix(S, P) * Q(br), "ell = -2 profile count");
}

BigInt count_tree_in_tree(const TargetTree& T) {
    int k = int(T.adj.size());
    if (k == 0 || int(T.counts.size()) != k || T.root < 0 || T.root >= k)
        throw PreconditionViolated("malformed target tree");
    long edges = 0;
    for (auto& a : T.adj) edges += long(a.size());
    std::vector<char> seen(k, 0);
    std::vector<int> st{T.root};
    seen[T.root] = 1;
    while (!st.empty()) {
        int u = st.back();
        st.pop_back();
        for (int w : T.adj[u])
            if (!seen[w]) seen[w] = 1, st.push_back(w);
    }
    if (edges != 2L * (k - 1) || std::count(seen.begin(), seen.end(), 1) != k)
        throw PreconditionViolated("target is not a tree");
    for (int c : T.counts)
        if (c <= 0) throw NonSurjectiveProfile("every abscissa of the target must be used");
    Rational q = Q(T.counts[T.root]) * Rational(factorial(T.size()));
    for (int i = 0; i < k; ++i) {
        long nb = 0;
        for (int j : T.adj[i]) nb += T.counts[j];
        q /= Rational(factorial(T.counts[i]));
        q *= power(Q(nb), T.counts[i] - 1) * power(Q(T.counts[i]), long(T.adj[i].size()) - 1);
    }
    return to_integer(q, "tree-in-tree count");
}

}  // namespace embtree
