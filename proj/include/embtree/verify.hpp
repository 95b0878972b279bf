#pragma once

#include "embtree/core.hpp"
#include "embtree/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace embtree {

struct CheckResult {
    std::string id;
    bool pass = true;
    long cases = 0;
    std::string detail;  // first mismatch, or a summary
};
using Report = std::vector<CheckResult>;

json report_json(const Report& r);
bool all_pass(const Report& r);

// the eight step sets {1} u T, T a subset of {-2,-1,0}
std::vector<StepSet> small_step_sets();

Report verify_pinned_counts();  // 3, 720, 9
Report verify_prime_pins();  // oracle 107 and 115560 on the two prime-size profiles
Report verify_regression();  // both, plus the minor determinant 12
// formula = oracle census on every profile of size <= maxN where the hypotheses hold
Report verify_formulas(int maxN, const std::vector<StepSet>& sets);
Report verify_phi(int maxN, const std::vector<StepSet>& sets);
Report verify_psi(int maxN, const std::vector<StepSet>& sets);
Report verify_negative_controls();
Report verify_closure(int binaryN, int ternaryN, int cayleyN);
Report verify_identities(int span, int points, std::uint64_t seed);
Report verify_matrix_tree(int maxN, const std::vector<StepSet>& sets, std::uint64_t seed);
Report verify_sampler(std::uint64_t seed);
Report verify_law(int maxN);
Report verify_tree_in_tree(int maxAbscissas, int maxN);

}  // namespace embtree
