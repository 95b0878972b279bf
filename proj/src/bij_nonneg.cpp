#include "embtree/bij_nonneg.hpp"

#include "embtree/conditions.hpp"

#include <algorithm>

namespace embtree {

std::vector<Piece> pieces_of_path(const std::vector<int>& path) {
    std::vector<Piece> out;
    int low = INT_MAX;
    for (int v : path) {
        if (v < low) {
            low = v;
            out.push_back({v, v, {}});
        }
        out.back().path.push_back(v);
        out.back().sink = v;
    }
    return out;
}

FrustrationRecord frustration_on_path(const Profile& P, const std::vector<int>& path) {
    FrustrationRecord rec;
    size_t pos = 0;
    for (auto& pc : pieces_of_path(path)) {
        int i = P.abscissa(pc.source);
        int fIn;
        if (P.index(pc.source) == 1) {
            EMBTREE_ASSERT(pc.path.size() == 1);
            fIn = i < P.r() ? i + 1 : EPS;
        } else {
            fIn = P.abscissa(pc.sink);
        }
        int tIn = pos == 0 ? EPS : P.abscissa(path[pos - 1]);
        if (fIn != tIn) rec.byAbscissa[i].push_back({pc.source, fIn, tIn});
        pos += pc.path.size();
    }
    for (auto& [i, vs] : rec.byAbscissa) {
        EMBTREE_ASSERT(vs.size() % 2 == 0);
        for (size_t j = 0; j < vs.size(); j += 2) {
            auto &a = vs[j], &b = vs[j + 1];
            EMBTREE_ASSERT(a.fIn == b.tIn && a.tIn == b.fIn);
            rec.pairs.push_back({a.vertex, b.vertex});
        }
    }
    return rec;
}

void swap_attached(std::vector<int>& parent, int a, int b, const std::vector<int>& path) {
    std::vector<char> onPath(parent.size(), 0);
    for (int v : path) onPath[v] = 1;
    std::vector<int> ca, cb;
    for (int v = 0; v < int(parent.size()); ++v) {
        if (onPath[v]) continue;
        if (parent[v] == a) ca.push_back(v);
        if (parent[v] == b) cb.push_back(v);
    }
    for (int v : ca) parent[v] = b;
    for (int v : cb) parent[v] = a;
}

FrustrationRecord swap_frustrated(std::vector<int>& parent, const Profile& P, const std::vector<int>& path) {
    auto rec = frustration_on_path(P, path);
    for (auto [a, b] : rec.pairs) swap_attached(parent, a, b, path);
    return rec;
}

static void require_nonneg_F(const SFunction& f) {
    f.validate();
    if (f.profile.ell() != 0) throw PreconditionViolated("non-negative bijection requires ell = 0");
    if (!satisfies_F(f, Regime::NonNeg)) throw PreconditionViolated("function violates (F)");
}

static void require_T(const MarkedSTree& t) {
    t.validate();
    if (auto e = check_T(t)) throw ConditionViolated(*e);
}

MarkedSTree phi1(const SFunction& f, PhiTrace* trace) {
    require_nonneg_F(f);
    const Profile& P = f.profile;
    int n = P.total();
    int zero = P.id(0, 1);

    // vertices whose orbit reaches 0^1 form the spine component
    std::vector<char> st(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<Piece> pieces;
    st[zero] = 2;
    for (int v = 0; v < n; ++v) {
        std::vector<int> stack;
        int u = v;
        while (st[u] == 0) {
            st[u] = 1;
            stack.push_back(u);
            u = f.image[u];
        }
        if (st[u] == 1) {
            std::vector<int> cyc(std::find(stack.begin(), stack.end(), u), stack.end());
            int s = *std::min_element(cyc.begin(), cyc.end());
            Piece pc{s, -1, {}};
            int w = s;
            do {
                pc.path.push_back(w);
                w = f.image[w];
            } while (w != s);
            pc.sink = pc.path.back();
            pieces.push_back(pc);
        }
        for (int w : stack) st[w] = 2;
    }
    for (int i = 0; i <= P.r(); ++i) {
        int s = P.id(i, 1);
        pieces.push_back({s, s, {s}});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.source > b.source; });

    MarkedSTree t{P, f.steps, f.image, zero, pieces.front().source};
    for (size_t k = 0; k + 1 < pieces.size(); ++k) t.parent[pieces[k].sink] = pieces[k + 1].source;
    EMBTREE_ASSERT(pieces.back().source == zero);
    t.parent[zero] = -1;
    if (trace) trace->pieces = pieces;
    return t;
}

SFunction phi1_inverse(const MarkedSTree& t) {
    require_T(t);
    const Profile& P = t.profile;
    SFunction f{P, t.steps, t.parent};
    for (auto& pc : pieces_of_path(path_to_root(t.parent, t.mark))) {
        if (P.index(pc.source) == 1) {
            EMBTREE_ASSERT(pc.path.size() == 1);
            int i = P.abscissa(pc.source);
            f.image[pc.source] = i >= 1 ? P.id(i - 1, 1) : -1;
        } else {
            f.image[pc.sink] = pc.source;
        }
    }
    f.validate();
    EMBTREE_ASSERT(satisfies_F(f, Regime::NonNeg));
    return f;
}

MarkedSTree phi2(const MarkedSTree& t, PhiTrace* trace) {
    require_T(t);
    MarkedSTree out = t;
    auto rec = swap_frustrated(out.parent, t.profile, path_to_root(t.parent, t.mark));
    if (trace) trace->frustration = rec;
    return out;
}

MarkedSTree phi(const SFunction& f, PhiTrace* trace) {
    MarkedSTree t = phi2(phi1(f, trace), trace);
    EMBTREE_ASSERT(!check_T(t));
    return t;
}

SFunction phi_inverse(const MarkedSTree& t, PhiTrace* trace) {
    MarkedSTree u = phi2(t, trace);
    if (trace) trace->pieces = pieces_of_path(path_to_root(u.parent, u.mark));
    return phi1_inverse(u);
}

static json in_json(int a) { return a == EPS ? json(nullptr) : json(a); }

json frustration_json(const Profile& P, const FrustrationRecord& r) {
    json by = json::array();
    for (auto& [i, vs] : r.byAbscissa) {
        json arr = json::array();
        for (auto& x : vs)
            arr.push_back({{"vertex", vertex_json(P, x.vertex)}, {"fIn", in_json(x.fIn)}, {"tIn", in_json(x.tIn)}});
        by.push_back({{"abscissa", i}, {"frustrated", arr}});
    }
    json pairs = json::array();
    for (auto [a, b] : r.pairs) pairs.push_back({vertex_json(P, a), vertex_json(P, b)});
    return {{"byAbscissa", by}, {"swaps", pairs}};
}

json trace_json(const Profile& P, const PhiTrace& tr) {
    json ps = json::array();
    for (auto& pc : tr.pieces) {
        json path = json::array();
        for (int v : pc.path) path.push_back(vertex_json(P, v));
        ps.push_back({{"source", vertex_json(P, pc.source)}, {"sink", vertex_json(P, pc.sink)}, {"path", path}});
    }
    return {{"pieces", ps}, {"frustration", frustration_json(P, tr.frustration)}};
}

}  // namespace embtree
