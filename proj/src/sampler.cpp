#include "embtree/sampler.hpp"

#include "embtree/bij_general.hpp"
#include "embtree/bij_nonneg.hpp"
#include "embtree/formulas.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>

namespace embtree {

namespace {

Regime regime_of(const Profile& P) { return P.ell() == 0 ? Regime::NonNeg : Regime::General; }

int uniform(Rng& rng, int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); }

// forced images; -2 marks a free vertex, -3 the general-case vertex -1^1 (any of V_0)
std::vector<int> forced(const Profile& P, Regime regime) {
    std::vector<int> img(P.total(), -2);
    img[P.id(0, 1)] = -1;
    for (int i = 1; i <= P.r(); ++i) img[P.id(i, 1)] = P.id(i - 1, 1);
    if (regime == Regime::General) {
        for (int i = P.ell(); i <= -2; ++i) img[P.id(i, 1)] = P.id(i + 1, 1);
        img[P.id(-1, 1)] = -3;
    }
    return img;
}

std::vector<int> codomain(const StepSet& S, const Profile& P, int i) {
    std::vector<int> out;
    for (int s : S.steps())
        for (int k = 1; k <= P.n(i - s); ++k) out.push_back(P.id(i - s, k));
    return out;
}

void require_regime(const StepSet& S, const Profile& P, Regime regime) {
    validate_profile_for(S, P, regime);
    if (regime == Regime::General && P.ell() >= 0) throw HypothesisViolation("general regime needs ell < 0");
}

EmbeddedCayleyTree relabel(const MarkedSTree& t, Rng& rng) {
    int n = t.profile.total();
    std::vector<int> sigma(n);
    for (int v = 0; v < n; ++v) sigma[v] = v;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    EmbeddedCayleyTree e{t.steps, sigma[t.root], std::vector<int>(n, -1), std::vector<int>(n, 0)};
    for (int v = 0; v < n; ++v) {
        e.abscissa[sigma[v]] = t.profile.abscissa(v);
        if (t.parent[v] >= 0) e.parent[sigma[v]] = sigma[t.parent[v]];
    }
    return e;
}

MarkedSTree to_tree(const SFunction& f) { return f.profile.ell() == 0 ? phi(f) : psi(f); }

}  // namespace

SFunction sample_sfunction(const StepSet& S, const Profile& P, Regime regime, Rng& rng) {
    require_regime(S, P, regime);
    SFunction f{P, S, forced(P, regime)};
    for (int v = 0; v < P.total(); ++v) {
        if (f.image[v] == -3) {
            f.image[v] = P.id(0, 1 + uniform(rng, P.n(0)));
        } else if (f.image[v] == -2) {
            auto cod = codomain(S, P, P.abscissa(v));
            if (cod.empty()) throw InfeasibleProfile("no admissible image for " + vertex_name(P, v));
            f.image[v] = cod[uniform(rng, int(cod.size()))];
        }
    }
    return f;
}

SFunction sample_injective_sfunction(const StepSet& S, const Profile& P, Regime regime, Rng& rng) {
    require_regime(S, P, regime);
    SFunction f{P, S, forced(P, regime)};
    for (int i = P.ell(); i <= P.r(); ++i) {
        auto cod = codomain(S, P, i);
        std::vector<int> taken;
        for (int k = 1; k <= P.n(i); ++k) {
            int v = P.id(i, k);
            if (f.image[v] == -3) {
                f.image[v] = P.id(0, 1 + uniform(rng, P.n(0)));
                taken.push_back(f.image[v]);
            } else if (f.image[v] >= 0) {
                taken.push_back(f.image[v]);
            }
        }
        std::vector<int> pool;
        for (int w : cod)
            if (std::find(taken.begin(), taken.end(), w) == taken.end()) pool.push_back(w);
        for (int k = 1; k <= P.n(i); ++k) {
            int v = P.id(i, k);
            if (f.image[v] != -2) continue;
            if (pool.empty()) throw InfeasibleProfile("abscissa " + std::to_string(i) + " has too few admissible images");
            int j = uniform(rng, int(pool.size()));
            f.image[v] = pool[j];
            pool.erase(pool.begin() + j);
        }
    }
    return f;
}

EmbeddedCayleyTree sample_embedded_cayley(const StepSet& S, const Profile& P, Rng& rng) {
    return relabel(to_tree(sample_sfunction(S, P, regime_of(P), rng)), rng);
}

SAryTree sample_sary(const StepSet& S, const Profile& P, Rng& rng) {
    auto e = relabel(to_tree(sample_injective_sfunction(S, P, regime_of(P), rng)), rng);
    EMBTREE_ASSERT(e.is_injective());
    return sary_of(e);
}

Rational ProfileLaw::probability(const Profile& P) const {
    for (auto& [q, c] : counts)
        if (q == P) {
            Rational p(c, total);
            p.canonicalize();
            return p;
        }
    return 0;
}

Rational ProfileLaw::sum() const {
    Rational s = 0;
    for (auto& [q, c] : counts) s += probability(q);
    return s;
}

ProfileLaw profile_law(int n, LawFamily family, const StepSet& S) {
    if (n < 1) throw PreconditionViolated("size must be positive");
    if (n > (family == LawFamily::Cayley ? 8 : 14)) throw BudgetExceeded("profile law size limit exceeded");
    ProfileLaw law{n, family, family == LawFamily::Binary ? StepSet({-1, 1}) : S, {}, 0};
    bool nonnegOnly = law.steps.m() != -1;
    if (law.steps.m() < -1) throw HypothesisViolation("no product formula when min S < -1");
    for (auto& P : profiles_of_size(n, nonnegOnly)) {
        BigInt c = family == LawFamily::Binary ? count_binary_profile(P)
                   : family == LawFamily::Sary ? count_sary_profile(law.steps, P)
                                               : count_cayley_profile(law.steps, P);
        if (c == 0) continue;
        law.counts.push_back({P, c});
        law.total += c;
    }
    return law;
}

std::map<int, Rational> occupation_marginal(const ProfileLaw& law, int i) {
    std::map<int, Rational> m;
    for (auto& [P, c] : law.counts) {
        Rational p(c, law.total);
        p.canonicalize();
        m[P.n(i)] += p;
    }
    return m;
}

double chi_square_uniform_pvalue(const std::vector<long>& counts) {
    if (counts.size() < 2) return 1.0;
    double total = 0;
    for (long c : counts) total += double(c);
    double e = total / double(counts.size()), x2 = 0;
    for (long c : counts) x2 += (double(c) - e) * (double(c) - e) / e;
    boost::math::chi_squared dist(double(counts.size() - 1));
    return boost::math::cdf(boost::math::complement(dist, x2));
}

}  // namespace embtree
