#pragma once

#include "embtree/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace embtree {

// v, parent(v), ..., root
std::vector<int> path_to_root(const std::vector<int>& parent, int v);
// deepest common ancestor
int meet(const std::vector<int>& parent, int a, int b);

// a nonempty result names the failed predicate
std::optional<std::string> check_T(const MarkedSTree& t);
std::optional<std::string> check_T1(const MarkedSTree& t);
std::optional<std::string> check_T2prime(const MarkedSTree& t);
std::optional<std::string> check_T2second(const MarkedSTree& t);
// (T1) and ((T2') or (T2''))
std::optional<std::string> check_general(const MarkedSTree& t);

}  // namespace embtree
