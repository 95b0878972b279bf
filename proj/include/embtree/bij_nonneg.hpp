#pragma once

#include "embtree/core.hpp"
#include "embtree/serialize.hpp"

#include <map>
#include <vector>

namespace embtree {

struct Piece {
    int source = -1;
    int sink = -1;
    std::vector<int> path;  // source first, sink last
};

// in-neighbour abscissas of a frustrated source: in the function, and in the tree (EPS = none)
struct Frustrated {
    int vertex;
    int fIn;
    int tIn;
};

struct FrustrationRecord {
    std::map<int, std::vector<Frustrated>> byAbscissa;  // path order
    std::vector<std::pair<int, int>> pairs;
};

struct PhiTrace {
    std::vector<Piece> pieces;  // concatenation order
    FrustrationRecord frustration;
};

// split a path (mark first) before each lower record
std::vector<Piece> pieces_of_path(const std::vector<int>& path);

// frustrated sources on a distinguished path whose pieces of source i^1 are spine pieces
FrustrationRecord frustration_on_path(const Profile& P, const std::vector<int>& path);

// exchange the children of a and b that are off the given path
void swap_attached(std::vector<int>& parent, int a, int b, const std::vector<int>& path);

// pairs consecutive frustrated sources per abscissa and swaps their attached subtrees
FrustrationRecord swap_frustrated(std::vector<int>& parent, const Profile& P, const std::vector<int>& path);

MarkedSTree phi1(const SFunction& f, PhiTrace* trace = nullptr);
SFunction phi1_inverse(const MarkedSTree& t);
MarkedSTree phi2(const MarkedSTree& t, PhiTrace* trace = nullptr);
MarkedSTree phi(const SFunction& f, PhiTrace* trace = nullptr);
SFunction phi_inverse(const MarkedSTree& t, PhiTrace* trace = nullptr);

json trace_json(const Profile& P, const PhiTrace& tr);
json frustration_json(const Profile& P, const FrustrationRecord& r);

}  // namespace embtree
