#include "embtree/algebra.hpp"

#include <algorithm>

namespace embtree {

namespace {

Rational at(const Values& y, int i) {
    auto it = y.find(i);
    return it == y.end() ? Rational(0) : it->second;
}

Rational weight(const WeightAssignment& x, int i, int s) {
    auto it = x.find({i, s});
    return it == x.end() ? Rational(1) : it->second;
}

// parents assigned so far, unassigned = -1; would v -> u close a cycle?
bool closes_cycle(const std::vector<int>& par, int v, int u) {
    while (u >= 0) {
        if (u == v) return true;
        u = par[u];
    }
    return false;
}

void canonical(Cycle& c) {
    std::sort(c.arcs.begin(), c.arcs.end());
    std::sort(c.vertices.begin(), c.vertices.end());
}

}  // namespace

std::vector<Cycle> CycleGraph::cycles() const {
    std::vector<Cycle> out;
    for (int s : steps.steps()) {
        if (s == 1) continue;
        EMBTREE_ASSERT(s < 1);
        // i - s, i - s - 1, ..., i, then back up by the step s
        for (int i = ell; i - s <= r; ++i) {
            Cycle c;
            for (int k = i - s; k >= i; --k) c.vertices.push_back(k);
            for (int k = i - s; k > i; --k) c.arcs.push_back({k, 1});
            c.arcs.push_back({i, s});
            canonical(c);
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cycle> CycleGraph::cycles_generic() const {
    std::vector<Cycle> out;
    for (int v = ell; v <= r; ++v) {
        std::vector<int> path{v};
        std::function<void(int)> dfs = [&](int u) {
            for (int w = v; w <= r; ++w) {
                if (!has_arc(u, w)) continue;
                if (w == v) {
                    Cycle c;
                    c.vertices = path;
                    for (size_t k = 0; k < path.size(); ++k) {
                        int a = path[k], b = k + 1 < path.size() ? path[k + 1] : v;
                        c.arcs.push_back({a, a - b});
                    }
                    canonical(c);
                    out.push_back(c);
                } else if (std::find(path.begin(), path.end(), w) == path.end()) {
                    path.push_back(w);
                    dfs(w);
                    path.pop_back();
                }
            }
        };
        dfs(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void CycleGraph::for_each_configuration(const std::function<void(const std::vector<const Cycle*>&)>& emit) const {
    if (r - ell > 12) throw BudgetExceeded("cycle configurations limited to r - l <= 12");
    auto cs = cycles();
    std::vector<const Cycle*> chosen;
    std::vector<char> used(r - ell + 1, 0);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cs.size()) {
            emit(chosen);
            return;
        }
        rec(k + 1);
        const Cycle& c = cs[k];
        for (int v : c.vertices)
            if (used[v - ell]) return;
        for (int v : c.vertices) used[v - ell] = 1;
        chosen.push_back(&c);
        rec(k + 1);
        chosen.pop_back();
        for (int v : c.vertices) used[v - ell] = 0;
    };
    rec(0);
}

long CycleGraph::configuration_count() const {
    long k = 0;
    for_each_configuration([&](const std::vector<const Cycle*>&) { ++k; });
    return k;
}

Rational eval_P_refined(const CycleGraph& g, const Values& y, const WeightAssignment& x) {
    auto yy = [&](int i) { return i < g.ell || i > g.r ? Rational(0) : at(y, i); };
    Rational total = 0;
    g.for_each_configuration([&](const std::vector<const Cycle*>& C) {
        std::vector<char> in(g.r - g.ell + 1, 0);
        Rational t = C.size() % 2 ? -1 : 1;
        for (auto* c : C) {
            for (int v : c->vertices) in[v - g.ell] = 1;
            for (auto [i, s] : c->arcs) t *= weight(x, i, s);
        }
        for (int i = g.ell; i <= g.r; ++i) {
            if (in[i - g.ell]) {
                t *= yy(i) - (i == 0 ? 1 : 0);
            } else {
                Rational sum = 0;
                for (int s : g.steps.steps()) sum += yy(i - s) * weight(x, i, s);
                t *= sum;
            }
        }
        total += t;
    });
    return total;
}

Rational eval_P(const CycleGraph& g, const Values& y) { return eval_P_refined(g, y, {}); }

Rational eval_P_refined_closed(const CycleGraph& g, const Values& y, const WeightAssignment& x) {
    if (g.ell == 0 && g.r == 0) return g.steps.has(0) ? weight(x, 0, 0) : Rational(0);
    Rational q = 1;
    for (int i = g.ell; i <= -1; ++i) q *= weight(x, i, -1);
    for (int i = 1; i <= g.r; ++i) q *= weight(x, i, 1);
    Rational sum = 0;
    for (int s : g.steps.steps())
        if (-s >= g.ell && -s <= g.r) sum += weight(x, 0, s) * at(y, -s);
    q *= sum;
    for (int i = g.ell + 1; i <= g.r - 1; ++i) q *= at(y, i);
    return q;
}

Rational eval_P_closed(const CycleGraph& g, const Values& y) { return eval_P_refined_closed(g, y, {}); }

namespace {

std::map<std::pair<int, int>, long> out_counts(const CycleGraph& g, const TypeDistribution& d) {
    std::map<std::pair<int, int>, long> n;
    for (auto& [k, v] : d.out) {
        auto [i, s] = k;
        if (i < g.ell || i > g.r || !g.steps.has(s) || i - s < g.ell || i - s > g.r || v < 0)
            throw IncompatibleDistribution("out-type (" + std::to_string(i) + ";" + std::to_string(s) + ") does not fit");
        n[k] = v;
    }
    return n;
}

}  // namespace

Rational eval_P_out(const CycleGraph& g, const TypeDistribution& d) {
    auto n = out_counts(g, d);
    auto nis = [&](int i, int s) {
        auto it = n.find({i, s});
        return Rational(it == n.end() ? 0 : it->second);
    };
    std::vector<Rational> ni(g.r - g.ell + 1);
    for (int i = g.ell; i <= g.r; ++i) {
        ni[i - g.ell] = i == 0 ? 1 : 0;
        for (int s : g.steps.steps()) ni[i - g.ell] += nis(i, s);
    }
    Rational total = 0;
    g.for_each_configuration([&](const std::vector<const Cycle*>& C) {
        std::vector<char> in(g.r - g.ell + 1, 0);
        Rational t = C.size() % 2 ? -1 : 1;
        for (auto* c : C) {
            for (int v : c->vertices) in[v - g.ell] = 1;
            for (auto [i, s] : c->arcs) t *= nis(i, s);
        }
        for (int i = g.ell; i <= g.r; ++i)
            if (!in[i - g.ell]) t *= ni[i - g.ell];
        total += t;
    });
    return total;
}

Rational eval_P_out_closed(const CycleGraph& g, const TypeDistribution& d) {
    auto n = out_counts(g, d);
    Rational q = 1;
    for (int i = g.ell; i <= -1; ++i) q *= Rational(n[{i, -1}]);
    for (int i = 1; i <= g.r; ++i) q *= Rational(n[{i, 1}]);
    return q;
}

// Bareiss elimination with row swaps; exact over the rationals
Rational determinant(std::vector<std::vector<Rational>> m) {
    size_t k = m.size();
    if (k == 0) return 1;
    Rational prev = 1;
    int sign = 1;
    for (size_t p = 0; p + 1 < k; ++p) {
        if (m[p][p] == 0) {
            size_t q = p + 1;
            while (q < k && m[q][p] == 0) ++q;
            if (q == k) return 0;
            std::swap(m[p], m[q]);
            sign = -sign;
        }
        for (size_t i = p + 1; i < k; ++i) {
            for (size_t j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
            m[i][p] = 0;
        }
        prev = m[p][p];
    }
    return sign * m[k - 1][k - 1];
}

Rational laplacian_minor_det(const Profile& P, const StepSet& S, const WeightAssignment& x) {
    int n = P.total();
    if (n > 60) throw BudgetExceeded("dense determinant limited to n <= 60");
    int root = P.id(0, P.n(0));
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != root) keep.push_back(v);
    std::vector<std::vector<Rational>> m(keep.size(), std::vector<Rational>(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a) {
        int i = P.abscissa(keep[a]);
        for (size_t b = 0; b < keep.size(); ++b) {
            int j = P.abscissa(keep[b]);
            if (a == b) {
                Rational d = 0;
                for (int s : S.steps()) d += weight(x, i, s) * Rational(P.n(i - s));
                if (S.has(0)) d -= weight(x, i, 0);
                m[a][b] = d;
            } else if (S.has(i - j)) {
                m[a][b] = -weight(x, i, i - j);
            }
        }
    }
    return determinant(m);
}

Rational laplacian_minor_closed(const Profile& P, const StepSet& S, const WeightAssignment& x) {
    auto deg = [&](int i) {
        Rational d = 0;
        for (int s : S.steps()) d += weight(x, i, s) * Rational(P.n(i - s));
        return d;
    };
    if (P.ell() == 0 && P.r() == 0) {
        int n0 = P.n(0);
        if (n0 == 1) return 1;
        return S.has(0) ? weight(x, 0, 0) * power(deg(0), n0 - 2) : Rational(0);
    }
    Rational q = 1;
    for (int i = P.ell(); i <= -1; ++i) q *= weight(x, i, -1);
    for (int i = 1; i <= P.r(); ++i) q *= weight(x, i, 1);
    for (int i = P.ell() + 1; i <= P.r() - 1; ++i) q *= Rational(P.n(i));
    for (int i = P.ell(); i <= P.r(); ++i) q *= power(deg(i), P.n(i) - 1);
    return q;
}

Rational spanning_trees_direct(const Profile& P, const StepSet& S, const WeightAssignment& x) {
    int n = P.total();
    if (n > 8) throw BudgetExceeded("spanning tree listing limited to n <= 8");
    int root = P.id(0, P.n(0));
    std::vector<std::vector<int>> opts(n);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v && S.has(P.abscissa(v) - P.abscissa(u))) opts[v].push_back(u);
    std::vector<int> par(n, -1);
    Rational total = 0;
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            Rational t = 1;
            for (int w = 0; w < n; ++w)
                if (w != root) t *= weight(x, P.abscissa(w), P.abscissa(w) - P.abscissa(par[w]));
            total += t;
            return;
        }
        if (v == root) return rec(v + 1);
        for (int u : opts[v])
            if (!closes_cycle(par, v, u)) {
                par[v] = u;
                rec(v + 1);
            }
        par[v] = -1;
    };
    rec(0);
    return total;
}

Rational cayley_from_spanning(const Profile& P, const StepSet& S, const WeightAssignment& x) {
    Rational q = Rational(P.n(0)) * Rational(factorial(P.total()));
    for (int i = P.ell(); i <= P.r(); ++i) q /= Rational(factorial(P.n(i)));
    return q * laplacian_minor_det(P, S, x);
}

namespace {

void require_target(const TargetTree& T) {
    int k = int(T.adj.size());
    if (k == 0 || int(T.counts.size()) != k || T.root < 0 || T.root >= k)
        throw PreconditionViolated("malformed target tree");
    for (int c : T.counts)
        if (c <= 0) throw NonSurjectiveProfile("every abscissa of the target must be used");
}

// copies of each abscissa node, grouped
std::vector<int> copies(const TargetTree& T) {
    std::vector<int> lab;
    for (int a = 0; a < int(T.counts.size()); ++a) lab.insert(lab.end(), T.counts[a], a);
    return lab;
}

bool adjacent(const TargetTree& T, int a, int b) {
    return std::find(T.adj[a].begin(), T.adj[a].end(), b) != T.adj[a].end();
}

Rational labelings(const TargetTree& T) {
    Rational q = Rational(factorial(T.size()));
    for (int c : T.counts) q /= Rational(factorial(c));
    return q;
}

}  // namespace

BigInt tree_in_tree_det(const TargetTree& T) {
    require_target(T);
    auto lab = copies(T);
    int n = int(lab.size());
    if (n > 60) throw BudgetExceeded("dense determinant limited to n <= 60");
    int root = int(std::find(lab.begin(), lab.end(), T.root) - lab.begin());
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != root) keep.push_back(v);
    std::vector<std::vector<Rational>> m(keep.size(), std::vector<Rational>(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a) {
        long deg = 0;
        for (int j : T.adj[lab[keep[a]]]) deg += T.counts[j];
        m[a][a] = deg;
        for (size_t b = 0; b < keep.size(); ++b)
            if (a != b && adjacent(T, lab[keep[a]], lab[keep[b]])) m[a][b] = -1;
    }
    return to_integer(Rational(T.counts[T.root]) * labelings(T) * determinant(m), "tree-in-tree determinant");
}

BigInt tree_in_tree_brute(const TargetTree& T) {
    require_target(T);
    auto lab = copies(T);
    int n = int(lab.size());
    if (n > 8) throw BudgetExceeded("morphism listing limited to n <= 8");
    std::vector<int> par(n, -1);
    long count = 0;
    std::function<void(int, int)> rec = [&](int v, int root) {
        if (v == n) {
            ++count;
            return;
        }
        if (v == root) return rec(v + 1, root);
        for (int u = 0; u < n; ++u)
            if (u != v && adjacent(T, lab[v], lab[u]) && !closes_cycle(par, v, u)) {
                par[v] = u;
                rec(v + 1, root);
            }
        par[v] = -1;
    };
    for (int root = 0; root < n; ++root)
        if (lab[root] == T.root) rec(0, root);
    return to_integer(Rational(count) * labelings(T), "tree-in-tree listing");
}

}  // namespace embtree
