#pragma once

#include "embtree/core.hpp"
#include "embtree/formulas.hpp"

#include <functional>
#include <map>
#include <vector>

namespace embtree {

struct Cycle {
    std::vector<int> vertices;              // sorted
    std::vector<std::pair<int, int>> arcs;  // (i, s): arc i -> i - s
    bool operator==(const Cycle&) const = default;
    bool operator<(const Cycle& o) const { return arcs < o.arcs; }
};

// vertices ell..r, arc i -> j iff i - j in S
struct CycleGraph {
    int ell = 0, r = 0;
    StepSet steps;

    bool has_arc(int i, int j) const { return i != j ? steps.has(i - j) : steps.has(0); }
    std::vector<Cycle> cycles() const;          // descending runs (max S = 1)
    std::vector<Cycle> cycles_generic() const;  // any digraph; canonical order
    void for_each_configuration(const std::function<void(const std::vector<const Cycle*>&)>& emit) const;
    long configuration_count() const;
};

using Values = std::map<int, Rational>;  // abscissa -> y_i, 0 when absent

Rational eval_P(const CycleGraph& g, const Values& y);
Rational eval_P_closed(const CycleGraph& g, const Values& y);

// n_i = [i = 0] + sum_s n(i,s), read from d.out
Rational eval_P_out(const CycleGraph& g, const TypeDistribution& d);
Rational eval_P_out_closed(const CycleGraph& g, const TypeDistribution& d);

Rational eval_P_refined(const CycleGraph& g, const Values& y, const WeightAssignment& x);
Rational eval_P_refined_closed(const CycleGraph& g, const Values& y, const WeightAssignment& x);

Rational determinant(std::vector<std::vector<Rational>> m);

// spanning trees of K rooted at the last vertex of V_0, by the matrix-tree theorem
Rational laplacian_minor_det(const Profile& P, const StepSet& S, const WeightAssignment& x);
Rational laplacian_minor_closed(const Profile& P, const StepSet& S, const WeightAssignment& x);
// the same sum, by listing every spanning tree
Rational spanning_trees_direct(const Profile& P, const StepSet& S, const WeightAssignment& x);
Rational cayley_from_spanning(const Profile& P, const StepSet& S, const WeightAssignment& x);

BigInt tree_in_tree_det(const TargetTree& T);
BigInt tree_in_tree_brute(const TargetTree& T);

}  // namespace embtree
