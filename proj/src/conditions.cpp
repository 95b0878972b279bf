#include "embtree/conditions.hpp"

#include <algorithm>

namespace embtree {

std::vector<int> path_to_root(const std::vector<int>& parent, int v) {
    std::vector<int> p;
    for (; v >= 0; v = parent[v]) p.push_back(v);
    return p;
}

int meet(const std::vector<int>& parent, int a, int b) {
    auto pa = path_to_root(parent, a), pb = path_to_root(parent, b);
    int m = -1;
    auto ia = pa.rbegin(), ib = pb.rbegin();
    for (; ia != pa.rend() && ib != pb.rend() && *ia == *ib; ++ia, ++ib) m = *ia;
    return m;
}

static int position(const std::vector<int>& path, int v) {
    auto it = std::find(path.begin(), path.end(), v);
    return it == path.end() ? -1 : int(it - path.begin());
}

// first V_{i-1} vertex on the path is immediately preceded by i^1, for i in [lo,hi]
static std::optional<std::string> first_visits(const Profile& P, const std::vector<int>& path, int lo, int hi,
                                               const char* label) {
    for (int i = lo; i <= hi; ++i) {
        int j = 0;
        while (j < int(path.size()) && P.abscissa(path[j]) != i - 1) ++j;
        if (j == int(path.size()) || j == 0 || path[j - 1] != P.id(i, 1))
            return std::string(label) + ": first vertex of V_" + std::to_string(i - 1) + " not preceded by " +
                   std::to_string(i) + "^1";
    }
    return std::nullopt;
}

// last V_{i-1} vertex on the path is immediately followed by i^1, for i in [lo,hi]
static std::optional<std::string> last_visits(const Profile& P, const std::vector<int>& path, int lo, int hi,
                                              const char* label) {
    for (int i = lo; i <= hi; ++i) {
        int j = int(path.size()) - 1;
        while (j >= 0 && P.abscissa(path[j]) != i - 1) --j;
        if (j < 0 || j + 1 == int(path.size()) || path[j + 1] != P.id(i, 1))
            return std::string(label) + ": last vertex of V_" + std::to_string(i - 1) + " not followed by " +
                   std::to_string(i) + "^1";
    }
    return std::nullopt;
}

std::optional<std::string> check_T(const MarkedSTree& t) {
    const Profile& P = t.profile;
    if (P.ell() != 0) return "(T): requires ell = 0";
    if (t.root != P.id(0, 1)) return "(T): root is not 0^1";
    if (P.abscissa(t.mark) != P.r()) return "(T): mark not in V_r";
    return first_visits(P, path_to_root(t.parent, t.mark), 1, P.r(), "(T)");
}

std::optional<std::string> check_T1(const MarkedSTree& t) {
    const Profile& P = t.profile;
    if (P.abscissa(t.root) != 0) return "(T1): root not in V_0";
    if (P.abscissa(t.mark) != P.r()) return "(T1): mark not in V_r";
    return first_visits(P, path_to_root(t.parent, t.mark), 1, P.r(), "(T1)");
}

std::optional<std::string> check_T2prime(const MarkedSTree& t) {
    const Profile& P = t.profile;
    int lo = P.id(P.ell(), 1);
    int M = meet(t.parent, lo, t.mark);
    if (P.r() >= 1) {
        auto pr = path_to_root(t.parent, t.mark);
        int a = position(pr, P.id(1, 1)), b = position(pr, M);
        if (a < 0 || a >= b) return std::string("(T2'): 1^1 not strictly before the meet");
    }
    return last_visits(P, path_to_root(t.parent, lo), P.ell() + 1, 0, "(T2')");
}

std::optional<std::string> check_T2second(const MarkedSTree& t) {
    const Profile& P = t.profile;
    if (P.r() < 1) return "(T2''): requires r >= 1";
    int lo = P.id(P.ell(), 1);
    int M = meet(t.parent, lo, t.mark);
    auto pr = path_to_root(t.parent, t.mark);
    int a = position(pr, P.id(1, 1)), b = position(pr, M);
    if (a < b) return "(T2''): 1^1 not weakly after the meet";
    if (P.abscissa(M) <= 0) return "(T2''): meet not at positive abscissa";
    auto pl = path_to_root(t.parent, lo);
    pl.resize(position(pl, M) + 1);
    if (auto e = last_visits(P, pl, P.ell() + 1, -1, "(T2'')")) return e;
    int j = 0;
    while (j < int(pr.size()) && P.abscissa(pr[j]) != -1) ++j;
    if (j < int(pr.size())) {
        if (j == 0 || pr[j - 1] != P.id(0, 1)) return "(T2''): first vertex of V_-1 not preceded by 0^1";
    } else if (t.root != P.id(0, 1)) {
        return "(T2''): no V_-1 vertex on the marked path and 0^1 is not the root";
    }
    return std::nullopt;
}

std::optional<std::string> check_general(const MarkedSTree& t) {
    if (t.profile.ell() >= 0) return "general regime requires ell < 0";
    if (auto e = check_T1(t)) return e;
    auto a = check_T2prime(t);
    if (!a) return std::nullopt;
    auto b = check_T2second(t);
    if (!b) return std::nullopt;
    return "(T2): " + *a + "; " + *b;
}

}  // namespace embtree
