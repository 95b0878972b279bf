#include "embtree/bij_general.hpp"

#include "embtree/conditions.hpp"

#include <algorithm>

namespace embtree {

std::string case_name(PsiCase c) {
    switch (c) {
        case PsiCase::A1: return "A1";
        case PsiCase::A2: return "A2";
        case PsiCase::A3: return "A3";
        case PsiCase::B: return "B";
    }
    return "?";
}

namespace {

void require_general_F(const SFunction& f) {
    f.validate();
    validate_profile_for(f.steps, f.profile, Regime::General);
    if (f.profile.ell() >= 0) throw PreconditionViolated("general bijection requires ell < 0");
    if (!satisfies_F(f, Regime::General)) throw PreconditionViolated("function violates (F)");
}

void require_general_T(const MarkedSTree& t) {
    t.validate();
    validate_profile_for(t.steps, t.profile, Regime::General);
    if (auto e = check_general(t)) throw ConditionViolated(*e);
}

// f with the out-edges of i^1 (i != 0) removed
struct Cut {
    std::vector<int> g;
    std::vector<int> src;       // source of each vertex's component
    std::vector<char> onCycle;
    std::vector<std::vector<int>> cycles;  // each starts at its minimum, in orbit order
};

Cut cut_graph(const Profile& P, const std::vector<int>& f) {
    int n = P.total();
    Cut c{f, std::vector<int>(n, -1), std::vector<char>(n, 0), {}};
    for (int i = P.ell(); i <= P.r(); ++i) c.g[P.id(i, 1)] = -1;
    std::vector<char> st(n, 0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> stack;
        int u = v;
        while (u >= 0 && st[u] == 0) {
            st[u] = 1;
            stack.push_back(u);
            u = c.g[u];
        }
        int s;
        if (u < 0) {
            s = stack.back();  // a root i^1
        } else if (st[u] == 1) {
            auto it = std::find(stack.begin(), stack.end(), u);
            std::vector<int> cyc(it, stack.end());
            s = *std::min_element(cyc.begin(), cyc.end());
            std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), s), cyc.end());
            for (int w : cyc) c.onCycle[w] = 1;
            c.cycles.push_back(cyc);
        } else {
            s = c.src[u];
        }
        for (int w : stack) {
            c.src[w] = s;
            st[w] = 2;
        }
    }
    return c;
}

// pieces cut before the minimum, decreasing sources
std::vector<Piece> left_pieces(const Profile& P, const Cut& c, int i) {
    std::vector<Piece> ps{{P.id(i, 1), P.id(i, 1), {P.id(i, 1)}}};
    for (auto& cyc : c.cycles)
        if (P.abscissa(cyc[0]) == i) ps.push_back({cyc[0], cyc.back(), cyc});
    std::sort(ps.begin(), ps.end(), [](const Piece& a, const Piece& b) { return a.source > b.source; });
    return ps;
}

// pieces cut after the minimum (now the sink), i^1 first then increasing sinks
std::vector<Piece> right_pieces(const Profile& P, const Cut& c, int i, int skipCycleOf = -1) {
    std::vector<Piece> ps;
    for (auto& cyc : c.cycles) {
        if (P.abscissa(cyc[0]) != i) continue;
        if (skipCycleOf >= 0 && std::find(cyc.begin(), cyc.end(), skipCycleOf) != cyc.end()) continue;
        std::vector<int> path(cyc.begin() + 1, cyc.end());
        path.push_back(cyc[0]);
        ps.push_back({path.front(), path.back(), path});
    }
    std::sort(ps.begin(), ps.end(), [](const Piece& a, const Piece& b) { return a.sink < b.sink; });
    ps.insert(ps.begin(), Piece{P.id(i, 1), P.id(i, 1), {P.id(i, 1)}});
    return ps;
}

void chain(std::vector<int>& par, const std::vector<Piece>& ps) {
    for (size_t k = 0; k + 1 < ps.size(); ++k) par[ps[k].sink] = ps[k + 1].source;
}

int before_on(const std::vector<int>& path, int v) {
    auto it = std::find(path.begin(), path.end(), v);
    EMBTREE_ASSERT(it != path.end() && it != path.begin());
    return *(it - 1);
}

// the vertex following 1^1 on the marked path; the mark itself when r = 0
int w0_of(const MarkedSTree& t) {
    const Profile& P = t.profile;
    if (P.r() == 0) return t.mark;
    auto pr = path_to_root(t.parent, t.mark);
    auto it = std::find(pr.begin(), pr.end(), P.id(1, 1));
    EMBTREE_ASSERT(it != pr.end() && it + 1 != pr.end());
    return *(it + 1);
}

// children of x lying on neither distinguished path
std::vector<int> attached(const MarkedSTree& t, int x) {
    const Profile& P = t.profile;
    std::vector<char> on(P.total(), 0);
    for (int v : path_to_root(t.parent, t.mark)) on[v] = 1;
    for (int v : path_to_root(t.parent, P.id(P.ell(), 1))) on[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < P.total(); ++v)
        if (t.parent[v] == x && !on[v]) out.push_back(v);
    return out;
}

std::vector<int> prefix_to(const std::vector<int>& path, int v) {
    auto it = std::find(path.begin(), path.end(), v);
    EMBTREE_ASSERT(it != path.end());
    return std::vector<int>(path.begin(), it + 1);
}

}  // namespace

PsiCase classify_case(const SFunction& f) {
    require_general_F(f);
    const Profile& P = f.profile;
    Cut c = cut_graph(P, f.image);
    int v0 = f.image[P.id(-1, 1)];
    int s = c.src[v0];
    if (P.abscissa(s) >= 1) return PsiCase::B;
    if (s == P.id(0, 1)) return PsiCase::A3;
    if (c.onCycle[v0]) return PsiCase::A2;
    return PsiCase::A1;
}

PsiCase tree_case(const MarkedSTree& t) {
    require_general_T(t);
    if (!check_T2second(t)) return PsiCase::B;
    const Profile& P = t.profile;
    int M = meet(t.parent, P.id(P.ell(), 1), t.mark);
    int w0 = w0_of(t);
    if (M == w0) return PsiCase::A3;
    if (M == P.id(0, 1)) return PsiCase::A2;
    return PsiCase::A1;
}

MarkedSTree psi1(const SFunction& f, PsiTrace* trace) {
    PsiCase kase = classify_case(f);
    const Profile& P = f.profile;
    int n = P.total(), ell = P.ell(), r = P.r();
    int zero = P.id(0, 1);
    int v0 = f.image[P.id(-1, 1)];
    PsiTrace local;
    PsiTrace& tr = trace ? *trace : local;
    tr = PsiTrace{};
    tr.kase = kase;
    tr.special["v0"] = v0;

    std::vector<int> img = f.image;
    if (kase == PsiCase::A3 && v0 != zero) {
        // close the branch v0 -> ... -> u -> 0^1 into a cycle through v0
        Cut c0 = cut_graph(P, img);
        int u = v0;
        while (c0.g[u] != zero) u = c0.g[u];
        img[u] = v0;
        tr.special["u"] = u;
    }
    Cut c = cut_graph(P, img);
    MarkedSTree t{P, f.steps, c.g, -1, -1};

    int firstLeft = kase == PsiCase::B ? 0 : 1;
    int lastRight = kase == PsiCase::B ? -1 : 0;
    int aPrev = -1;
    for (int i = r; i >= firstLeft; --i) {
        auto ps = left_pieces(P, c, i);
        chain(t.parent, ps);
        if (i == r) t.mark = ps.front().source;
        if (aPrev >= 0) t.parent[aPrev] = ps.front().source;
        aPrev = P.id(i, 1);
        tr.left[i] = ps;
    }
    int bPrev = -1;
    for (int i = ell; i <= lastRight; ++i) {
        int skip = (kase == PsiCase::A2 && P.abscissa(c.src[v0]) == i) ? v0 : -1;
        auto ps = right_pieces(P, c, i, skip);
        chain(t.parent, ps);
        if (bPrev >= 0) t.parent[bPrev] = P.id(i, 1);
        bPrev = ps.back().sink;
        tr.right[i] = ps;
    }

    if (kase != PsiCase::B) {
        t.root = bPrev;
        t.parent[t.root] = -1;
        if (r >= 1)
            t.parent[P.id(1, 1)] = v0;
        else
            t.mark = v0;
        if (kase == PsiCase::A2) {
            // open the cycle of v0 at the edge entering v0
            int u = v0;
            while (c.g[u] != v0) u = c.g[u];
            t.parent[u] = zero;
            tr.special["u"] = u;
        }
        tr.special["w0"] = v0;
    } else {
        // v: where the branch of v0 meets the distinguished path of L(i0)
        int i0 = P.abscissa(c.src[v0]);
        std::vector<char> onL(n, 0);
        for (auto& pc : tr.left[i0])
            for (int w : pc.path) onL[w] = 1;
        std::vector<int> br{v0};
        while (!onL[br.back()]) br.push_back(c.g[br.back()]);
        int v = br.back();
        tr.special["v"] = v;
        int xm = -1, ym = -1;
        for (size_t j = 0; j < br.size(); ++j)
            if (P.abscissa(br[j]) < 0) {
                if (xm < 0) xm = int(j);
                ym = int(j);
            }
        int y0 = v0;
        t.parent[bPrev] = -1;
        if (xm >= 0) {
            EMBTREE_ASSERT(P.abscissa(br[xm]) == -1 && P.abscissa(br[ym]) == -1);
            int x0 = br[xm - 1], x1 = br[xm], y1 = br[ym];
            y0 = br[ym + 1];
            t.parent[x0] = -1;
            t.parent[y1] = v0;
            t.parent[zero] = x1;
            t.root = x0;
            tr.special["x0"] = x0;
            tr.special["x-1"] = x1;
            tr.special["y-1"] = y1;
        } else {
            t.parent[zero] = -1;
            t.root = zero;
        }
        t.parent[bPrev] = y0;
        tr.special["y0"] = y0;
        tr.special["b-1"] = bPrev;
    }
    t.validate();
    EMBTREE_ASSERT(!check_general(t));
    EMBTREE_ASSERT(tree_case(t) == kase);
    return t;
}

SFunction psi1_inverse(const MarkedSTree& t, PsiTrace* trace) {
    PsiCase kase = tree_case(t);
    const Profile& P = t.profile;
    int ell = P.ell(), r = P.r();
    int zero = P.id(0, 1), lo = P.id(ell, 1);
    PsiTrace local;
    PsiTrace& tr = trace ? *trace : local;
    tr = PsiTrace{};
    tr.kase = kase;
    SFunction f{P, t.steps, t.parent};
    auto pr = path_to_root(t.parent, t.mark);
    auto pl = path_to_root(t.parent, lo);
    int M = meet(t.parent, lo, t.mark);

    // right part: lower records seen from the far end are sinks
    auto close_right = [&](std::vector<int> seg, int target) {
        std::reverse(seg.begin(), seg.end());
        for (auto& rp : pieces_of_path(seg)) {
            int sink = rp.source, source = rp.path.back();
            if (P.index(sink) == 1) {
                EMBTREE_ASSERT(rp.path.size() == 1);
                int i = P.abscissa(sink);
                EMBTREE_ASSERT(i <= 0);
                f.image[sink] = i <= -2 ? P.id(i + 1, 1) : i == -1 ? target : -1;
            } else {
                f.image[sink] = source;
            }
            std::vector<int> path(rp.path.rbegin(), rp.path.rend());
            tr.right[P.abscissa(sink)].push_back({source, sink, path});
        }
    };
    auto close_left = [&](const std::vector<int>& seg) {
        for (auto& pc : pieces_of_path(seg)) {
            if (P.index(pc.source) == 1) {
                EMBTREE_ASSERT(pc.path.size() == 1);
                int i = P.abscissa(pc.source);
                f.image[pc.source] = i >= 1 ? P.id(i - 1, 1) : -1;
            } else {
                f.image[pc.sink] = pc.source;
            }
            tr.left[P.abscissa(pc.source)].push_back(pc);
        }
    };

    if (kase != PsiCase::B) {
        int w0 = w0_of(t);
        tr.special["w0"] = w0;
        if (r >= 1) close_left(prefix_to(pr, P.id(1, 1)));
        close_right(pl, w0);
        if (kase == PsiCase::A2) {
            int u = before_on(pr, zero);
            f.image[u] = w0;
            tr.special["u"] = u;
        } else if (kase == PsiCase::A3 && w0 != zero) {
            int u = w0;
            for (int k = 0; f.image[u] != w0; ++k) {
                EMBTREE_ASSERT(k <= P.total() && f.image[u] >= 0);
                u = f.image[u];
            }
            f.image[u] = zero;
            tr.special["u"] = u;
        }
        tr.special["v0"] = w0;
    } else {
        auto seg = prefix_to(pl, M);
        int b = -1;
        for (size_t j = 0; j < seg.size(); ++j)
            if (P.abscissa(seg[j]) < 0) b = int(j);
        EMBTREE_ASSERT(b >= 0 && b + 1 < int(seg.size()));
        int y0 = seg[b + 1];
        int v0 = y0;
        tr.special["v"] = M;
        tr.special["b-1"] = seg[b];
        tr.special["y0"] = y0;
        if (t.root != zero) {
            int x1 = t.parent[zero];
            auto above = path_to_root(t.parent, zero);
            int y1 = -1;
            size_t j = 0;
            for (size_t q = 0; q < above.size(); ++q)
                if (P.abscissa(above[q]) < 0) y1 = above[q], j = q;
            EMBTREE_ASSERT(P.abscissa(x1) == -1 && y1 >= 0 && j + 1 < above.size());
            v0 = above[j + 1];
            f.image[t.root] = x1;
            f.image[y1] = y0;
            tr.special["x0"] = t.root;
            tr.special["x-1"] = x1;
            tr.special["y-1"] = y1;
        }
        tr.special["v0"] = v0;
        close_left(prefix_to(pr, zero));
        close_right(std::vector<int>(seg.begin(), seg.begin() + b + 1), v0);
    }
    f.validate();
    EMBTREE_ASSERT(satisfies_F(f, Regime::General));
    return f;
}

MarkedSTree psi2(const MarkedSTree& t, PsiTrace* trace) {
    PsiCase kase = tree_case(t);
    const Profile& P = t.profile;
    int zero = P.id(0, 1);
    MarkedSTree out = t;
    auto pr = path_to_root(t.parent, t.mark);
    FrustrationRecord rec;
    if (kase == PsiCase::B) {
        rec = swap_frustrated(out.parent, P, prefix_to(pr, zero));
    } else {
        int w0 = w0_of(t);
        if (w0 != zero) {
            auto a = attached(t, zero), b = attached(t, w0);
            for (int v : a) out.parent[v] = w0;
            for (int v : b) out.parent[v] = zero;
            if (trace) trace->subtreeSwaps.push_back({zero, w0});
        }
        if (P.r() >= 1) rec = swap_frustrated(out.parent, P, prefix_to(pr, P.id(1, 1)));
    }
    if (trace) trace->frustration = rec;
    return out;
}

MarkedSTree psi(const SFunction& f, PsiTrace* trace) {
    MarkedSTree t = psi2(psi1(f, trace), trace);
    EMBTREE_ASSERT(!check_general(t));
    return t;
}

SFunction psi_inverse(const MarkedSTree& t, PsiTrace* trace) {
    PsiTrace sw;
    MarkedSTree u = psi2(t, &sw);
    SFunction f = psi1_inverse(u, trace);
    if (trace) {
        trace->frustration = sw.frustration;
        trace->subtreeSwaps = sw.subtreeSwaps;
    }
    return f;
}

json psi_trace_json(const Profile& P, const PsiTrace& tr) {
    auto pieces = [&](const std::map<int, std::vector<Piece>>& m) {
        json out = json::array();
        for (auto& [i, ps] : m) {
            json arr = json::array();
            for (auto& pc : ps) {
                json path = json::array();
                for (int v : pc.path) path.push_back(vertex_json(P, v));
                arr.push_back({{"source", vertex_json(P, pc.source)}, {"sink", vertex_json(P, pc.sink)}, {"path", path}});
            }
            out.push_back({{"abscissa", i}, {"pieces", arr}});
        }
        return out;
    };
    json sp = json::object();
    for (auto& [k, v] : tr.special) sp[k] = vertex_json(P, v);
    json sw = json::array();
    for (auto [a, b] : tr.subtreeSwaps) sw.push_back({vertex_json(P, a), vertex_json(P, b)});
    return {{"case", case_name(tr.kase)},
            {"left", pieces(tr.left)},
            {"right", pieces(tr.right)},
            {"special", sp},
            {"subtreeSwaps", sw},
            {"frustration", frustration_json(P, tr.frustration)}};
}

}  // namespace embtree
