#include "embtree/oracle.hpp"

#include "embtree/conditions.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace embtree {

namespace {
long long& max_steps_slot() {
    static long long v = [] {
        const char* e = std::getenv("EMBTREE_MAX_STEPS");
        if (!e || !*e) return 200000000LL;
        char* end = nullptr;
        long long x = std::strtoll(e, &end, 10);
        if (*end || x <= 0) throw ParseError(std::string("EMBTREE_MAX_STEPS is not a positive integer: ") + e);
        return x;
    }();
    return v;
}
}  // namespace

long long default_max_steps() { return max_steps_slot(); }
void set_default_max_steps(long long steps) { max_steps_slot() = steps; }


namespace {

struct StepCounter {
    const EnumerationBudget& b;
    long long steps = 0;
    void tick() {
        if (++steps > b.maxSteps) throw BudgetExceeded("enumeration exceeded " + std::to_string(b.maxSteps) + " steps");
    }
};

void check_size(int n, const EnumerationBudget& b) {
    if (n > b.maxSize)
        throw BudgetExceeded("size " + std::to_string(n) + " exceeds budget " + std::to_string(b.maxSize));
}

std::vector<int> codomain(const StepSet& S, const Profile& P, int v) {
    std::vector<int> out;
    int i = P.abscissa(v);
    for (int j = P.ell(); j <= P.r(); ++j)
        if (S.has(i - j))
            for (int k = 1; k <= P.n(j); ++k) out.push_back(P.id(j, k));
    return out;
}

bool acyclic_to(const std::vector<int>& par, int root) {
    int n = int(par.size());
    std::vector<char> st(n, 0);
    st[root] = 2;
    std::vector<int> stack;
    for (int v = 0; v < n; ++v) {
        stack.clear();
        int u = v;
        while (st[u] == 0) {
            st[u] = 1;
            stack.push_back(u);
            u = par[u];
        }
        if (st[u] == 1) return false;
        for (int w : stack) st[w] = 2;
    }
    return true;
}

bool matches_part(const TypeDistribution& want, const TypeDistribution& got) {
    if (!want.out.empty() && want.out != got.out) return false;
    if (!want.in.empty() && want.in != got.in) return false;
    if (!want.complete.empty() && (want.complete != got.complete || want.rootIn != got.rootIn)) return false;
    return true;
}

}  // namespace

void enumerate_sfunctions(const StepSet& S, const Profile& P, Regime regime, const FunctionConstraint& c,
                          const std::function<void(const SFunction&)>& emit, const EnumerationBudget& b) {
    validate_profile_for(S, P, regime);
    if (regime == Regime::General && P.ell() >= 0) throw HypothesisViolation("general regime requires ell < 0");
    int n = P.total();
    check_size(n, b);
    StepCounter sc{b};
    SFunction f{P, S, std::vector<int>(n, -2)};
    int zero = P.id(0, 1);
    f.image[zero] = -1;
    for (int i = 1; i <= P.r(); ++i) f.image[P.id(i, 1)] = P.id(i - 1, 1);
    if (regime == Regime::General)
        for (int i = P.ell(); i <= -2; ++i) f.image[P.id(i, 1)] = P.id(i + 1, 1);
    std::vector<int> freeV;
    std::vector<std::vector<int>> dom;
    for (int v = 0; v < n; ++v) {
        if (f.image[v] != -2) continue;
        freeV.push_back(v);
        if (regime == Regime::General && v == P.id(-1, 1)) {
            std::vector<int> d;
            for (int k = 1; k <= P.n(0); ++k) d.push_back(P.id(0, k));
            dom.push_back(d);
        } else {
            dom.push_back(codomain(S, P, v));
        }
    }
    bool inj = c.kind == FunctionConstraint::Injective;
    // used[u] = abscissa-class whose image set already contains u (per class bookkeeping)
    std::vector<std::vector<char>> used(P.r() - P.ell() + 1, std::vector<char>(n, 0));
    if (inj)
        for (int v = 0; v < n; ++v)
            if (f.image[v] >= 0) used[P.abscissa(v) - P.ell()][f.image[v]] = 1;

    auto accept = [&]() {
        switch (c.kind) {
            case FunctionConstraint::None:
            case FunctionConstraint::Injective: return true;
            case FunctionConstraint::Counted: return matches_part(c.counted, type_distribution_of(f, c.counted.m));
            default: break;
        }
        int m = c.fixed.empty() ? S.m() : 2 - int(c.fixed[0].c.size());
        auto ty = vertex_types(f.image, P.abscissas(), m);
        for (int v = 0; v < n; ++v) {
            bool okOut = ty[v].s == c.fixed[v].s, okIn = ty[v].c == c.fixed[v].c;
            if (c.kind == FunctionConstraint::FixedOut && !okOut) return false;
            if (c.kind == FunctionConstraint::FixedIn && !okIn) return false;
            if (c.kind == FunctionConstraint::FixedComplete && !(okOut && okIn)) return false;
        }
        return true;
    };

    std::function<void(size_t)> rec = [&](size_t j) {
        sc.tick();
        if (j == freeV.size()) {
            if (accept()) emit(f);
            return;
        }
        int v = freeV[j];
        auto& u = used[P.abscissa(v) - P.ell()];
        for (int w : dom[j]) {
            if (inj && u[w]) continue;
            f.image[v] = w;
            if (inj) u[w] = 1;
            rec(j + 1);
            if (inj) u[w] = 0;
        }
        f.image[v] = -2;
    };
    rec(0);
}

void enumerate_marked_strees(const StepSet& S, const Profile& P, Regime regime,
                             const std::function<void(const MarkedSTree&)>& emit, const EnumerationBudget& b) {
    validate_profile_for(S, P, regime);
    if (regime == Regime::General && P.ell() >= 0) throw HypothesisViolation("general regime requires ell < 0");
    int n = P.total();
    check_size(n, b);
    StepCounter sc{b};
    std::vector<int> roots;
    if (regime == Regime::NonNeg)
        roots.push_back(P.id(0, 1));
    else
        for (int k = 1; k <= P.n(0); ++k) roots.push_back(P.id(0, k));
    std::vector<std::vector<int>> dom(n);
    for (int v = 0; v < n; ++v) dom[v] = codomain(S, P, v);

    MarkedSTree t{P, S, std::vector<int>(n, -1), 0, 0};
    for (int root : roots) {
        t.root = root;
        std::function<void(int)> rec = [&](int v) {
            sc.tick();
            if (v == n) {
                if (!acyclic_to(t.parent, root)) return;
                for (int k = 1; k <= P.n(P.r()); ++k) {
                    t.mark = P.id(P.r(), k);
                    bool ok = regime == Regime::NonNeg ? !check_T(t) : !check_general(t);
                    if (ok) emit(t);
                }
                return;
            }
            if (v == root) {
                t.parent[v] = -1;
                rec(v + 1);
                return;
            }
            for (int w : dom[v]) {
                if (w == v) continue;
                t.parent[v] = w;
                rec(v + 1);
            }
        };
        rec(0);
    }
}

namespace {

// labeled rooted trees crossed with increments; target empty means any profile
void cayley_core(const StepSet& S, int n, const std::vector<int>* target, int ell,
                 const std::function<void(const EmbeddedCayleyTree&)>& emit, const EnumerationBudget& b) {
    check_size(n, b);
    StepCounter sc{b};
    EmbeddedCayleyTree t;
    t.steps = S;
    t.parent.assign(n, -1);
    t.abscissa.assign(n, 0);
    std::vector<int> order;
    std::vector<std::vector<int>> ch(n);
    const int lo = target ? ell : -n, hi = target ? ell + int(target->size()) - 1 : n;
    std::vector<int> cnt(hi - lo + 1, 0);

    std::function<void(int)> place = [&](int j) {
        sc.tick();
        if (j == n) {
            emit(t);
            return;
        }
        int v = order[j];
        int base = t.abscissa[t.parent[v]];
        for (int s : S.steps()) {
            int a = base + s;
            if (a < lo || a > hi) continue;
            if (target && cnt[a - lo] >= (*target)[a - lo]) continue;
            cnt[a - lo]++;
            t.abscissa[v] = a;
            place(j + 1);
            cnt[a - lo]--;
        }
    };

    for (int root = 0; root < n; ++root) {
        if (target && (0 < lo || 0 > hi || (*target)[0 - lo] < 1)) continue;
        // every parent sequence over the non-root vertices, rejecting non-trees
        std::vector<int> others;
        for (int v = 0; v < n; ++v)
            if (v != root) others.push_back(v);
        int m = int(others.size());
        std::vector<int> digit(m, 0);
        while (true) {
            sc.tick();
            bool selfLoop = false;
            for (int j = 0; j < m; ++j) {
                t.parent[others[j]] = digit[j];
                if (digit[j] == others[j]) selfLoop = true;
            }
            t.parent[root] = -1;
            if (!selfLoop && acyclic_to(t.parent, root)) {
                t.root = root;
                for (auto& c : ch) c.clear();
                for (int v = 0; v < n; ++v)
                    if (v != root) ch[t.parent[v]].push_back(v);
                order.assign(1, root);
                for (size_t q = 0; q < order.size(); ++q)
                    for (int c : ch[order[q]]) order.push_back(c);
                std::fill(cnt.begin(), cnt.end(), 0);
                cnt[0 - lo] = 1;
                t.abscissa[root] = 0;
                place(1);
            }
            int j = 0;
            while (j < m && ++digit[j] == n) digit[j++] = 0;
            if (j == m) break;
        }
    }
}

}  // namespace

void enumerate_embedded_cayley(const StepSet& S, const Profile& P,
                               const std::function<void(const EmbeddedCayleyTree&)>& emit,
                               const EnumerationBudget& b) {
    cayley_core(S, P.total(), &P.counts(), P.ell(), emit, b);
}

void enumerate_embedded_cayley_size(const StepSet& S, int n,
                                    const std::function<void(const EmbeddedCayleyTree&)>& emit,
                                    const EnumerationBudget& b) {
    cayley_core(S, n, nullptr, 0, emit, b);
}

namespace {

struct SlotNode {
    int abscissa, parent, step;
};

SAryTree build_sary(const std::vector<SlotNode>& nodes) {
    std::vector<std::vector<int>> ch(nodes.size());
    for (size_t v = 1; v < nodes.size(); ++v) ch[nodes[v].parent].push_back(int(v));
    std::function<SAryTree(int)> rec = [&](int v) {
        SAryTree t;
        t.abscissa = nodes[v].abscissa;
        for (int c : ch[v]) {
            t.steps.push_back(nodes[c].step);
            t.kids.push_back(rec(c));
        }
        return t;
    };
    return rec(0);
}

// breadth-first slot filling: each node in turn picks the subset of steps that carry children
void sary_core(const StepSet& S, int n, const std::vector<int>* target, int ell,
               const std::function<void(const SAryTree&)>& emit, const EnumerationBudget& b) {
    check_size(n, b);
    StepCounter sc{b};
    const int lo = target ? ell : -n, hi = target ? ell + int(target->size()) - 1 : n;
    std::vector<int> cnt(hi - lo + 1, 0);
    std::vector<SlotNode> nodes{{0, -1, 0}};
    cnt[0 - lo] = 1;
    if (target && (0 < lo || 0 > hi)) return;
    int k = S.size();
    std::function<void(size_t)> rec = [&](size_t q) {
        sc.tick();
        if (q == nodes.size()) {
            if (int(nodes.size()) == n) emit(build_sary(nodes));
            return;
        }
        int base = nodes[q].abscissa;
        for (int mask = 0; mask < (1 << k); ++mask) {
            int add = __builtin_popcount(mask);
            if (int(nodes.size()) + add > n) continue;
            bool ok = true;
            size_t before = nodes.size();
            for (int j = 0; j < k && ok; ++j) {
                if (!(mask >> j & 1)) continue;
                int a = base + S.steps()[j];
                if (a < lo || a > hi || (target && cnt[a - lo] >= (*target)[a - lo])) {
                    ok = false;
                    break;
                }
                cnt[a - lo]++;
                nodes.push_back({a, int(q), S.steps()[j]});
            }
            if (ok) rec(q + 1);
            while (nodes.size() > before) {
                cnt[nodes.back().abscissa - lo]--;
                nodes.pop_back();
            }
        }
    };
    rec(0);
}

}  // namespace

void enumerate_sary(const StepSet& S, const Profile& P, const std::function<void(const SAryTree&)>& emit,
                    const EnumerationBudget& b) {
    sary_core(S, P.total(), &P.counts(), P.ell(), emit, b);
}

void enumerate_sary_size(const StepSet& S, int n, const std::function<void(const SAryTree&)>& emit,
                         const EnumerationBudget& b) {
    sary_core(S, n, nullptr, 0, emit, b);
}

TypeDistribution project(const TypeDistribution& d, Granularity g) {
    TypeDistribution p;
    p.m = d.m;
    switch (g) {
        case Granularity::Profile:
            for (auto& [k, v] : d.in) p.in[{k.first, {}}] += v;
            break;
        case Granularity::Out: p.out = d.out; break;
        case Granularity::In: p.in = d.in; break;
        case Granularity::Complete:
            p.complete = d.complete;
            p.rootIn = d.rootIn;
            break;
    }
    return p;
}

}  // namespace embtree
