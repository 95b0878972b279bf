#pragma once

#include "embtree/core.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace embtree {

using Rng = std::mt19937_64;

// uniform over (F)-functions; the injective variant is uniform over those injective on each V_i
SFunction sample_sfunction(const StepSet& S, const Profile& P, Regime regime, Rng& rng);
SFunction sample_injective_sfunction(const StepSet& S, const Profile& P, Regime regime, Rng& rng);

// regime chosen from the profile: ell = 0 non-negative, otherwise general
EmbeddedCayleyTree sample_embedded_cayley(const StepSet& S, const Profile& P, Rng& rng);
SAryTree sample_sary(const StepSet& S, const Profile& P, Rng& rng);

inline EmbeddedCayleyTree sample_embedded_cayley(const StepSet& S, const Profile& P, std::uint64_t seed) {
    Rng rng(seed);
    return sample_embedded_cayley(S, P, rng);
}
inline SAryTree sample_sary(const StepSet& S, const Profile& P, std::uint64_t seed) {
    Rng rng(seed);
    return sample_sary(S, P, rng);
}

enum class LawFamily { Binary, Sary, Cayley };

struct ProfileLaw {
    int n = 0;
    LawFamily family = LawFamily::Binary;
    StepSet steps;
    std::vector<std::pair<Profile, BigInt>> counts;
    BigInt total;

    Rational probability(const Profile& P) const;
    Rational sum() const;
};

ProfileLaw profile_law(int n, LawFamily family, const StepSet& S = StepSet({-1, 1}));
std::map<int, Rational> occupation_marginal(const ProfileLaw& law, int i);

// p-value of Pearson's statistic against the uniform law on counts.size() cells
double chi_square_uniform_pvalue(const std::vector<long>& counts);

}  // namespace embtree
