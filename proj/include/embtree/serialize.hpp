#pragma once

#include "embtree/core.hpp"

#include <json.hpp>

namespace embtree {

using json = nlohmann::json;

json to_json(const StepSet& s);
json to_json(const SFunction& f);
json to_json(const MarkedSTree& t);
json to_json(const EmbeddedCayleyTree& t);
json to_json(const SAryTree& t);
json to_json(const TypeDistribution& d);
json vertex_json(const Profile& P, int v);

SFunction sfunction_from_json(const json& j);
MarkedSTree marked_tree_from_json(const json& j);
EmbeddedCayleyTree cayley_from_json(const json& j);
SAryTree sary_from_json(const json& j);
TypeDistribution distribution_from_json(const json& j);

// sorted keys, no whitespace
template <class T>
std::string canonical(const T& x) {
    return to_json(x).dump();
}

}  // namespace embtree
