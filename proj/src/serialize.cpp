#include "embtree/serialize.hpp"

namespace embtree {

json to_json(const StepSet& s) { return json(s.steps()); }

json vertex_json(const Profile& P, int v) { return json::array({P.abscissa(v), P.index(v)}); }

static int vertex_from(const Profile& P, const json& a) {
    int i = a.at(0).get<int>(), k = a.at(1).get<int>();
    if (k < 1 || k > P.n(i)) throw ParseError("no vertex " + std::to_string(i) + "^" + std::to_string(k));
    return P.id(i, k);
}

static json arcs(const Profile& P, const std::vector<int>& img) {
    json out = json::array();
    for (int v = 0; v < int(img.size()); ++v)
        if (img[v] >= 0)
            out.push_back({P.abscissa(v), P.index(v), P.abscissa(img[v]), P.index(img[v])});
    return out;
}

static std::vector<int> arcs_from(const Profile& P, const json& a) {
    std::vector<int> img(P.total(), -1);
    for (auto& e : a) {
        int v = vertex_from(P, json::array({e.at(0), e.at(1)}));
        img[v] = vertex_from(P, json::array({e.at(2), e.at(3)}));
    }
    return img;
}

json to_json(const SFunction& f) {
    return {{"profile", f.profile.str()}, {"steps", to_json(f.steps)}, {"image", arcs(f.profile, f.image)}};
}

json to_json(const MarkedSTree& t) {
    return {{"profile", t.profile.str()},
            {"steps", to_json(t.steps)},
            {"root", vertex_json(t.profile, t.root)},
            {"mark", vertex_json(t.profile, t.mark)},
            {"parent", arcs(t.profile, t.parent)}};
}

json to_json(const EmbeddedCayleyTree& t) {
    std::vector<int> par(t.size());
    for (int v = 0; v < t.size(); ++v) par[v] = t.parent[v] + 1;
    return {{"n", t.size()}, {"root", t.root + 1}, {"parent", par}, {"abscissa", t.abscissa}, {"steps", to_json(t.steps)}};
}

json to_json(const SAryTree& t) {
    json ch = json::object();
    for (size_t j = 0; j < t.kids.size(); ++j) ch[std::to_string(t.steps[j])] = to_json(t.kids[j]);
    return {{"abscissa", t.abscissa}, {"children", ch}};
}

json to_json(const TypeDistribution& d) {
    json o = json::array(), in = json::array(), c = json::array();
    for (auto& [k, v] : d.out) o.push_back({k.first, k.second, v});
    for (auto& [k, v] : d.in) in.push_back({k.first, k.second, v});
    for (auto& [k, v] : d.complete) c.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v});
    return {{"m", d.m}, {"out", o}, {"in", in}, {"complete", c}, {"rootIn", d.rootIn}};
}

SFunction sfunction_from_json(const json& j) {
    try {
        SFunction f{Profile::parse(j.at("profile").get<std::string>()), StepSet(j.at("steps").get<std::vector<int>>()), {}};
        f.image = arcs_from(f.profile, j.at("image"));
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad function JSON: ") + e.what());
    }
}

MarkedSTree marked_tree_from_json(const json& j) {
    try {
        MarkedSTree t;
        t.profile = Profile::parse(j.at("profile").get<std::string>());
        t.steps = StepSet(j.at("steps").get<std::vector<int>>());
        t.parent = arcs_from(t.profile, j.at("parent"));
        t.root = vertex_from(t.profile, j.at("root"));
        t.mark = vertex_from(t.profile, j.at("mark"));
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad tree JSON: ") + e.what());
    }
}

EmbeddedCayleyTree cayley_from_json(const json& j) {
    try {
        EmbeddedCayleyTree t;
        int n = j.at("n").get<int>();
        auto par = j.at("parent").get<std::vector<int>>();
        t.abscissa = j.at("abscissa").get<std::vector<int>>();
        if (int(par.size()) != n || int(t.abscissa.size()) != n) throw ParseError("array length differs from n");
        t.root = j.at("root").get<int>() - 1;
        for (int p : par) t.parent.push_back(p - 1);
        if (j.contains("steps")) {
            t.steps = StepSet(j.at("steps").get<std::vector<int>>());
        } else {
            std::vector<int> used{1};
            for (int v = 0; v < n; ++v)
                if (t.parent[v] >= 0 && t.parent[v] < n) used.push_back(t.abscissa[v] - t.abscissa[t.parent[v]]);
            t.steps = StepSet(used);
        }
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad embedded tree JSON: ") + e.what());
    }
}

SAryTree sary_from_json(const json& j) {
    try {
        SAryTree t;
        t.abscissa = j.at("abscissa").get<int>();
        std::vector<std::pair<int, SAryTree>> kids;
        for (auto& [key, sub] : j.at("children").items()) kids.push_back({std::stoi(key), sary_from_json(sub)});
        std::sort(kids.begin(), kids.end(), [](auto& a, auto& b) { return a.first < b.first; });
        for (auto& [s, k] : kids) {
            t.steps.push_back(s);
            t.kids.push_back(std::move(k));
        }
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad S-ary tree JSON: ") + e.what());
    }
}

TypeDistribution distribution_from_json(const json& j) {
    try {
        TypeDistribution d;
        d.m = j.at("m").get<int>();
        if (j.contains("out"))
            for (auto& e : j.at("out")) d.out[{e.at(0).get<int>(), e.at(1).get<int>()}] = e.at(2).get<long>();
        if (j.contains("in"))
            for (auto& e : j.at("in")) d.in[{e.at(0).get<int>(), e.at(1).get<CVec>()}] = e.at(2).get<long>();
        if (j.contains("complete"))
            for (auto& e : j.at("complete"))
                d.complete[{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<CVec>()}] = e.at(3).get<long>();
        if (j.contains("rootIn")) d.rootIn = j.at("rootIn").get<CVec>();
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad distribution JSON: ") + e.what());
    }
}

}  // namespace embtree
