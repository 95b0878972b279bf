#include "embtree/core.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace embtree {

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::Internal: return 1;
        case ErrorKind::Budget: return 3;
        default: return 2;
    }
}

static int parse_int(const std::string& tok) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + tok + "'");
    }
    if (pos != tok.size()) throw ParseError("not an integer: '" + tok + "'");
    return v;
}

static std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

StepSet::StepSet(std::vector<int> steps) : steps_(std::move(steps)) {
    std::sort(steps_.begin(), steps_.end());
    steps_.erase(std::unique(steps_.begin(), steps_.end()), steps_.end());
    if (steps_.empty()) throw HypothesisViolation("step set is empty");
    if (steps_.back() != 1) throw HypothesisViolation("max S must be 1, got " + std::to_string(steps_.back()));
}

StepSet StepSet::relaxed(std::vector<int> steps) {
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
    if (steps.empty()) throw HypothesisViolation("step set is empty");
    StepSet S;
    S.steps_ = std::move(steps);
    return S;
}

static std::vector<int> parse_steps(const std::string& text) {
    auto dots = text.find("..");
    if (dots != std::string::npos) {
        int a = parse_int(text.substr(0, dots));
        int b = parse_int(text.substr(dots + 2));
        if (a > b) throw ParseError("empty step interval " + text);
        std::vector<int> v;
        for (int s = a; s <= b; ++s) v.push_back(s);
        return v;
    }
    std::vector<int> v;
    for (auto& tok : split(text, ',')) v.push_back(parse_int(tok));
    return v;
}

StepSet StepSet::parse(const std::string& text) { return StepSet(parse_steps(text)); }
StepSet StepSet::parse_relaxed(const std::string& text) { return relaxed(parse_steps(text)); }

bool StepSet::has(int s) const { return std::binary_search(steps_.begin(), steps_.end(), s); }

std::string StepSet::str() const {
    std::string out;
    for (size_t j = 0; j < steps_.size(); ++j) out += (j ? "," : "") + std::to_string(steps_[j]);
    return out;
}

Profile::Profile(int ell, std::vector<int> counts) : ell_(ell), counts_(std::move(counts)) {
    if (ell_ > 0) throw InvalidProfile("ell must be <= 0");
    if (int(counts_.size()) <= -ell_) throw InvalidProfile("profile must contain abscissa 0");
    int acc = 0;
    for (size_t j = 0; j < counts_.size(); ++j) {
        if (counts_[j] < 1) throw InvalidProfile("profile entries must be positive");
        off_.push_back(acc);
        for (int k = 0; k < counts_[j]; ++k) abs_.push_back(ell_ + int(j));
        acc += counts_[j];
    }
}

Profile Profile::parse(const std::string& text) {
    std::string negs, nonnegs = text;
    auto semi = text.find(';');
    if (semi != std::string::npos) {
        negs = text.substr(0, semi);
        nonnegs = text.substr(semi + 1);
    }
    std::vector<int> counts;
    if (semi != std::string::npos)
        for (auto& tok : split(negs, ',')) counts.push_back(parse_int(tok));
    int ell = -int(counts.size());
    for (auto& tok : split(nonnegs, ',')) counts.push_back(parse_int(tok));
    try {
        return Profile(ell, counts);
    } catch (const InvalidProfile& e) {
        throw ParseError(std::string("bad profile '") + text + "': " + e.what());
    }
}

std::string Profile::str() const {
    std::string out;
    for (int i = ell_; i <= r(); ++i) {
        if (i > ell_) out += (i == 0) ? ";" : ",";
        out += std::to_string(n(i));
    }
    return out;
}

std::vector<Profile> profiles_of_size(int n, bool nonnegOnly) {
    std::vector<Profile> out;
    if (n < 1) return out;
    for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> parts{1};
        for (int j = 0; j < n - 1; ++j) {
            if (mask >> j & 1)
                parts.push_back(1);
            else
                parts.back()++;
        }
        int k = nonnegOnly ? 1 : int(parts.size());
        for (int z = 0; z < k; ++z) out.emplace_back(-z, parts);
    }
    std::sort(out.begin(), out.end(), [](const Profile& a, const Profile& b) {
        return std::make_pair(a.ell(), a.counts()) < std::make_pair(b.ell(), b.counts());
    });
    return out;
}

void validate_profile_for(const StepSet& S, const Profile& P, Regime regime) {
    if (S.M() != 1) throw HypothesisViolation("max S = 1 fails");
    if (regime == Regime::NonNeg) {
        if (P.ell() != 0) throw HypothesisViolation("non-negative regime requires ell = 0");
    } else {
        if (S.m() != -1)
            throw HypothesisViolation("general regime requires min S = -1 (min S = " + std::to_string(S.m()) + ")");
    }
}

void require_product_hypothesis(const StepSet& S, const Profile& P) {
    if (S.m() != -1 && P.ell() != 0)
        throw HypothesisViolation("requires min S = -1 or ell = 0 (min S = " + std::to_string(S.m()) +
                                  ", ell = " + std::to_string(P.ell()) + ")");
}

std::string vertex_name(const Profile& P, int v) {
    return std::to_string(P.abscissa(v)) + "^" + std::to_string(P.index(v));
}

static void check_step(const Profile& P, const StepSet& S, int v, int u, const char* what) {
    if (u < 0 || u >= P.total()) throw PreconditionViolated(std::string(what) + " out of range");
    if (!S.has(P.abscissa(v) - P.abscissa(u)))
        throw PreconditionViolated(std::string(what) + " of " + vertex_name(P, v) + " violates the step set");
}

void SFunction::validate() const {
    if (int(image.size()) != profile.total()) throw PreconditionViolated("image size mismatch");
    int z = profile.id(0, 1);
    for (int v = 0; v < profile.total(); ++v) {
        if (v == z) {
            if (image[v] != -1) throw PreconditionViolated("0^1 must have no image");
        } else {
            check_step(profile, steps, v, image[v], "image");
        }
    }
}

bool satisfies_F(const SFunction& f, Regime regime) {
    const Profile& P = f.profile;
    for (int i = 1; i <= P.r(); ++i)
        if (f.image[P.id(i, 1)] != P.id(i - 1, 1)) return false;
    if (regime == Regime::NonNeg) return P.ell() == 0;
    if (P.ell() >= 0) return false;
    for (int i = P.ell(); i <= -2; ++i)
        if (f.image[P.id(i, 1)] != P.id(i + 1, 1)) return false;
    int v0 = f.image[P.id(-1, 1)];
    return v0 >= 0 && P.abscissa(v0) == 0;
}

static bool is_tree(const std::vector<int>& par, int root) {
    int n = int(par.size());
    if (root < 0 || root >= n || par[root] != -1) return false;
    // 0 unknown, 1 in progress, 2 reaches root
    std::vector<char> st(n, 0);
    st[root] = 2;
    for (int v = 0; v < n; ++v) {
        std::vector<int> stack;
        int u = v;
        while (st[u] == 0) {
            st[u] = 1;
            stack.push_back(u);
            u = par[u];
            if (u < 0) return false;
        }
        if (st[u] == 1) return false;
        for (int w : stack) st[w] = 2;
    }
    return true;
}

void MarkedSTree::validate() const {
    int n = profile.total();
    if (int(parent.size()) != n) throw PreconditionViolated("parent size mismatch");
    if (root < 0 || root >= n || profile.abscissa(root) != 0) throw PreconditionViolated("root must lie in V_0");
    if (mark < 0 || mark >= n || profile.abscissa(mark) != profile.r())
        throw PreconditionViolated("mark must lie in V_r");
    for (int v = 0; v < n; ++v)
        if (v != root) check_step(profile, steps, v, parent[v], "parent");
    if (!is_tree(parent, root)) throw PreconditionViolated("parent map is not a tree");
}

Profile EmbeddedCayleyTree::profile() const {
    int lo = 0, hi = 0;
    for (int a : abscissa) lo = std::min(lo, a), hi = std::max(hi, a);
    std::vector<int> c(hi - lo + 1, 0);
    for (int a : abscissa) c[a - lo]++;
    return Profile(lo, c);
}

void EmbeddedCayleyTree::validate() const {
    int n = size();
    if (int(abscissa.size()) != n) throw PreconditionViolated("abscissa size mismatch");
    if (root < 0 || root >= n || abscissa[root] != 0) throw PreconditionViolated("root abscissa must be 0");
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        int p = parent[v];
        if (p < 0 || p >= n) throw PreconditionViolated("parent out of range");
        if (!steps.has(abscissa[v] - abscissa[p])) throw PreconditionViolated("step not in S");
    }
    if (!is_tree(parent, root)) throw PreconditionViolated("parent map is not a tree");
}

bool EmbeddedCayleyTree::is_injective() const {
    std::set<std::pair<int, int>> seen;
    for (int v = 0; v < size(); ++v)
        if (v != root && !seen.insert({parent[v], abscissa[v]}).second) return false;
    return true;
}

int SAryTree::size() const {
    int s = 1;
    for (auto& k : kids) s += k.size();
    return s;
}

Profile SAryTree::profile() const {
    std::map<int, int> c;
    std::function<void(const SAryTree&)> rec = [&](const SAryTree& t) {
        c[t.abscissa]++;
        for (auto& k : t.kids) rec(k);
    };
    rec(*this);
    std::vector<int> counts;
    for (int i = c.begin()->first; i <= c.rbegin()->first; ++i) counts.push_back(c.count(i) ? c[i] : 0);
    return Profile(c.begin()->first, counts);
}

bool SAryTree::operator<(const SAryTree& o) const {
    if (abscissa != o.abscissa) return abscissa < o.abscissa;
    if (steps != o.steps) return steps < o.steps;
    return std::lexicographical_compare(kids.begin(), kids.end(), o.kids.begin(), o.kids.end());
}

SAryTree sary_of(const EmbeddedCayleyTree& t) {
    if (!t.is_injective()) throw NotInjective("embedded tree is not injective");
    std::vector<std::vector<int>> ch(t.size());
    for (int v = 0; v < t.size(); ++v)
        if (v != t.root) ch[t.parent[v]].push_back(v);
    std::function<SAryTree(int)> rec = [&](int v) {
        SAryTree node;
        node.abscissa = t.abscissa[v];
        auto kids = ch[v];
        std::sort(kids.begin(), kids.end(), [&](int a, int b) { return t.abscissa[a] < t.abscissa[b]; });
        for (int k : kids) {
            node.steps.push_back(t.abscissa[k] - t.abscissa[v]);
            node.kids.push_back(rec(k));
        }
        return node;
    };
    return rec(t.root);
}

std::vector<VertexType> vertex_types(const std::vector<int>& img, const std::vector<int>& abscissa, int m) {
    int n = int(img.size());
    int w = 2 - m;
    std::vector<VertexType> out(n);
    for (int v = 0; v < n; ++v) out[v] = {abscissa[v], EPS, CVec(w, 0)};
    for (int v = 0; v < n; ++v) {
        int u = img[v];
        if (u < 0) continue;
        int s = abscissa[v] - abscissa[u];
        if (s < m || s > 1) throw PreconditionViolated("step outside m..1");
        out[v].s = s;
        out[u].c[s - m]++;
    }
    return out;
}

TypeDistribution distribution_of_types(const std::vector<VertexType>& types, int m) {
    TypeDistribution d;
    d.m = m;
    for (auto& t : types) {
        d.in[{t.i, t.c}]++;
        if (t.s == EPS) {
            d.rootIn = t.c;
        } else {
            d.out[{t.i, t.s}]++;
            d.complete[{t.i, t.s, t.c}]++;
        }
    }
    return d;
}

TypeDistribution type_distribution_of(const SFunction& f, int m) {
    return distribution_of_types(vertex_types(f.image, f.profile.abscissas(), m), m);
}

TypeDistribution type_distribution_of(const MarkedSTree& t, int m) {
    return distribution_of_types(vertex_types(t.parent, t.profile.abscissas(), m), m);
}

TypeDistribution type_distribution_of(const EmbeddedCayleyTree& t, int m) {
    return distribution_of_types(vertex_types(t.parent, t.abscissa, m), m);
}

TypeDistribution type_distribution_of(const SAryTree& t, int m) {
    std::vector<int> par, ab;
    std::function<void(const SAryTree&, int)> rec = [&](const SAryTree& x, int p) {
        int me = int(par.size());
        par.push_back(p);
        ab.push_back(x.abscissa);
        for (auto& k : x.kids) rec(k, me);
    };
    rec(t, -1);
    return distribution_of_types(vertex_types(par, ab, m), m);
}

Profile TypeDistribution::profile() const {
    std::map<int, int> c;
    c[0] = 0;
    if (!in.empty()) {
        for (auto& [k, v] : in) c[k.first] += int(v);
    } else {
        c[0] = 1;
        for (auto& [k, v] : out) c[k.first] += int(v);
    }
    std::vector<int> counts;
    for (int i = c.begin()->first; i <= c.rbegin()->first; ++i) {
        int x = c.count(i) ? c[i] : 0;
        if (x <= 0) throw IncompatibleDistribution("distribution has an empty abscissa " + std::to_string(i));
        counts.push_back(x);
    }
    return Profile(c.begin()->first, counts);
}

bool TypeDistribution::compatible() const {
    int w = 2 - m;
    std::map<int, long> outN, inN;
    for (auto& [k, v] : out) {
        if (v < 0) return false;
        outN[k.first] += v;
    }
    for (auto& [k, v] : in) {
        if (v < 0 || int(k.second.size()) != w) return false;
        inN[k.first] += v;
    }
    if (!in.empty()) {
        // children arriving at abscissa i, plus the root
        std::map<int, long> arrivals;
        arrivals[0] += 1;
        for (auto& [k, v] : in)
            for (int s = m; s <= 1; ++s) arrivals[k.first + s] += long(k.second[s - m]) * v;
        for (auto& [i, a] : arrivals)
            if ((inN.count(i) ? inN[i] : 0) != a) return false;
        for (auto& [i, c] : inN)
            if ((arrivals.count(i) ? arrivals[i] : 0) != c) return false;
    }
    if (!out.empty() && !in.empty()) {
        for (auto& [i, c] : inN)
            if ((i == 0 ? 1 : 0) + (outN.count(i) ? outN[i] : 0) != c) return false;
        for (auto& [i, c] : outN)
            if ((inN.count(i) ? inN[i] : 0) != c + (i == 0 ? 1 : 0)) return false;
    }
    if (!complete.empty()) {
        if (int(rootIn.size()) != w) return false;
        std::map<std::pair<int, int>, long> lhs, rhs;
        for (int s = m; s <= 1; ++s)
            if (rootIn[s - m]) lhs[{s, s}] += rootIn[s - m];
        for (auto& [k, v] : complete) {
            auto& [i, t, c] = k;
            if (int(c.size()) != w) return false;
            rhs[{i, t}] += v;
            for (int s = m; s <= 1; ++s)
                if (c[s - m]) lhs[{i + s, s}] += long(c[s - m]) * v;
        }
        for (auto& [k, v] : lhs)
            if ((rhs.count(k) ? rhs[k] : 0) != v) return false;
        for (auto& [k, v] : rhs)
            if ((lhs.count(k) ? lhs[k] : 0) != v) return false;
    }
    return true;
}

bool TypeDistribution::operator<(const TypeDistribution& o) const {
    return std::tie(m, out, in, complete, rootIn) < std::tie(o.m, o.out, o.in, o.complete, o.rootIn);
}

}  // namespace embtree
