#pragma once

#include "embtree/core.hpp"

#include <map>
#include <string>
#include <vector>

namespace embtree {

BigInt factorial(long n);
BigInt binomial(long a, long b);  // 0 unless 0 <= b <= a
Rational power(const Rational& x, long e);  // 0^0 = 1
BigInt to_integer(const Rational& q, const std::string& what);

using WeightAssignment = std::map<std::pair<int, int>, Rational>;  // (i,s) -> x_{i,s}, default 1

struct TargetTree {
    std::vector<std::vector<int>> adj;  // abscissa nodes 0..k-1
    int root = 0;
    std::vector<int> counts;
    int size() const;
};

struct Factor {
    std::string label;
    Rational value;
};

BigInt count_binary_horizontal(const std::vector<int>& h);
BigInt count_binary_profile(const Profile& P);
BigInt count_cayley_profile(const StepSet& S, const Profile& P);
BigInt count_sary_profile(const StepSet& S, const Profile& P);
std::vector<Factor> explain_profile_count(const std::string& kind, const StepSet& S, const Profile& P);

BigInt count_cayley_out(const StepSet& S, const TypeDistribution& d);
Rational eval_out_gf(const StepSet& S, const Profile& P, const WeightAssignment& x);
BigInt count_sary_out(const StepSet& S, const TypeDistribution& d);
BigInt count_cayley_in(const StepSet& S, const TypeDistribution& d);
BigInt count_sary_in(const StepSet& S, const TypeDistribution& d);
// uses d.complete; c0 is the in-type of the root
BigInt count_cayley_complete(const StepSet& S, const CVec& c0, const TypeDistribution& d);

enum class FamilyKind {
    Profile,
    InjectiveProfile,
    OutFixed,
    OutCounted,
    InFixed,
    InCounted,
    CompleteFixed,
    CompleteCounted,
};

struct FamilyArgs {
    StepSet steps;
    Profile profile;
    std::vector<VertexType> fixed;  // per vertex, for *Fixed kinds
    TypeDistribution dist;          // for *Counted kinds (complete uses dist.rootIn as c0)
};

// General InFixed counts the family where f(-1^1) is only required to be an S-image.
BigInt count_function_family(FamilyKind kind, Regime regime, const FamilyArgs& a);

// embedded trees per marked tree: n!/(n_r prod (n_i-1)!) or n!/(n_l n_r prod (n_i-1)!)
Rational link_factor(const Profile& P, Regime regime);

BigInt count_cayley_profile_ell1(const StepSet& S, const Profile& P);
BigInt count_cayley_profile_ell2(const StepSet& S, const Profile& P);

BigInt count_tree_in_tree(const TargetTree& T);

// profile implied by a distribution part
Profile profile_of_out(const TypeDistribution& d);
Profile profile_of_in(const TypeDistribution& d);
Profile profile_of_complete(const TypeDistribution& d);

}  // namespace embtree
