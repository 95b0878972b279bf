#pragma once

#include "embtree/bij_nonneg.hpp"

#include <map>
#include <string>
#include <vector>

namespace embtree {

enum class PsiCase { A1, A2, A3, B };
std::string case_name(PsiCase c);

// by the position of v0 = f(-1^1) in the graph with the out-edges of every i^1 (i != 0) removed
PsiCase classify_case(const SFunction& f);
// by the meet of l^1 and the mark, 1^1 and w0
PsiCase tree_case(const MarkedSTree& t);

struct PsiTrace {
    PsiCase kase = PsiCase::A1;
    std::map<int, std::vector<Piece>> left, right;  // L(i), R(i) pieces in concatenation order
    std::map<std::string, int> special;             // v0, w0, u, v, x0, x-1, y-1, y0, ...
    FrustrationRecord frustration;
    std::vector<std::pair<int, int>> subtreeSwaps;  // T(0^1) <-> T(w0)
};

MarkedSTree psi1(const SFunction& f, PsiTrace* trace = nullptr);
SFunction psi1_inverse(const MarkedSTree& t, PsiTrace* trace = nullptr);
MarkedSTree psi2(const MarkedSTree& t, PsiTrace* trace = nullptr);
MarkedSTree psi(const SFunction& f, PsiTrace* trace = nullptr);
SFunction psi_inverse(const MarkedSTree& t, PsiTrace* trace = nullptr);

json psi_trace_json(const Profile& P, const PsiTrace& tr);

}  // namespace embtree
