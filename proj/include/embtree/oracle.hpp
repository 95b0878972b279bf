#pragma once

#include "embtree/core.hpp"

#include <functional>
#include <map>
#include <optional>

namespace embtree {

// EMBTREE_MAX_STEPS overrides the built-in step limit
long long default_max_steps();
void set_default_max_steps(long long steps);

struct EnumerationBudget {
    int maxSize = 7;
    long long maxSteps = default_max_steps();
};

struct FunctionConstraint {
    enum Kind { None, Injective, FixedOut, FixedIn, FixedComplete, Counted } kind = None;
    std::vector<VertexType> fixed;  // per vertex, for the Fixed* kinds
    TypeDistribution counted;       // nonempty parts must match exactly
};

void enumerate_sfunctions(const StepSet& S, const Profile& P, Regime regime, const FunctionConstraint& c,
                          const std::function<void(const SFunction&)>& emit, const EnumerationBudget& b = {});
inline void enumerate_sfunctions(const StepSet& S, const Profile& P, Regime regime,
                                 const std::function<void(const SFunction&)>& emit) {
    enumerate_sfunctions(S, P, regime, FunctionConstraint{}, emit);
}

void enumerate_marked_strees(const StepSet& S, const Profile& P, Regime regime,
                             const std::function<void(const MarkedSTree&)>& emit, const EnumerationBudget& b = {});

// fixed profile, or every profile of the given size when P is empty
void enumerate_embedded_cayley(const StepSet& S, const Profile& P,
                               const std::function<void(const EmbeddedCayleyTree&)>& emit,
                               const EnumerationBudget& b = {});
void enumerate_embedded_cayley_size(const StepSet& S, int n,
                                    const std::function<void(const EmbeddedCayleyTree&)>& emit,
                                    const EnumerationBudget& b = {});

void enumerate_sary(const StepSet& S, const Profile& P, const std::function<void(const SAryTree&)>& emit,
                    const EnumerationBudget& b = {});
void enumerate_sary_size(const StepSet& S, int n, const std::function<void(const SAryTree&)>& emit,
                         const EnumerationBudget& b = {});

enum class Granularity { Profile, Out, In, Complete };

// Profile keys carry per-abscissa totals as in-entries with an empty c-vector.
TypeDistribution project(const TypeDistribution& d, Granularity g);

using Census = std::map<TypeDistribution, BigInt>;

class CensusBuilder {
public:
    CensusBuilder(Granularity g, int m) : g_(g), m_(m) {}
    template <class T>
    void operator()(const T& x) {
        census_[project(type_distribution_of(x, m_), g_)] += 1;
    }
    const Census& result() const { return census_; }

private:
    Granularity g_;
    int m_;
    Census census_;
};

}  // namespace embtree
