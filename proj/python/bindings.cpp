#include "embtree/bij_general.hpp"
#include "embtree/bij_nonneg.hpp"
#include "embtree/conditions.hpp"
#include "embtree/formulas.hpp"
#include "embtree/oracle.hpp"
#include "embtree/sampler.hpp"
#include "embtree/serialize.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace embtree;

namespace {

// counts cross the boundary as decimal strings; the Python layer turns them into int
std::string count(const std::string& kind, const std::string& steps, const std::string& profile) {
    Profile P = Profile::parse(profile);
    if (kind == "binary") return count_binary_profile(P).get_str();
    StepSet S = StepSet::parse(steps);
    if (kind == "cayley") return count_cayley_profile(S, P).get_str();
    if (kind == "sary") return count_sary_profile(S, P).get_str();
    throw ParseError("unknown kind " + kind);
}

std::string count_by(const std::string& kind, const std::string& steps, const std::string& dist, const std::string& by) {
    StepSet S = StepSet::parse(steps);
    TypeDistribution d = distribution_from_json(json::parse(dist));
    bool cayley = kind == "cayley";
    if (!cayley && kind != "sary") throw ParseError("unknown kind " + kind);
    if (by == "out") return (cayley ? count_cayley_out(S, d) : count_sary_out(S, d)).get_str();
    if (by == "in") return (cayley ? count_cayley_in(S, d) : count_sary_in(S, d)).get_str();
    if (by == "complete" && cayley) return count_cayley_complete(S, d.rootIn, d).get_str();
    throw ParseError("no " + by + "-type formula for " + kind + " trees");
}

std::string oracle_count(const std::string& kind, const std::string& steps, const std::string& profile) {
    StepSet S = StepSet::parse_relaxed(steps);
    Profile P = Profile::parse(profile);
    EnumerationBudget b;
    b.maxSize = 8;
    BigInt c = 0;
    if (kind == "cayley")
        enumerate_embedded_cayley(S, P, [&](const EmbeddedCayleyTree&) { ++c; }, b);
    else if (kind == "sary")
        enumerate_sary(S, P, [&](const SAryTree&) { ++c; }, b);
    else
        throw ParseError("unknown kind " + kind);
    return c.get_str();
}

std::vector<std::string> sample(const std::string& kind, const std::string& steps, const std::string& profile,
                                std::uint64_t seed, int n) {
    StepSet S = StepSet::parse(steps);
    Profile P = Profile::parse(profile);
    Rng rng(seed);
    std::vector<std::string> out;
    for (int k = 0; k < n; ++k) {
        if (kind == "cayley")
            out.push_back(to_json(sample_embedded_cayley(S, P, rng)).dump());
        else if (kind == "sary")
            out.push_back(to_json(sample_sary(S, P, rng)).dump());
        else if (kind == "function")
            out.push_back(to_json(sample_sfunction(S, P, P.ell() == 0 ? Regime::NonNeg : Regime::General, rng)).dump());
        else
            throw ParseError("unknown kind " + kind);
    }
    return out;
}

std::string law(const std::string& family, int n, const std::string& steps) {
    LawFamily f = family == "binary" ? LawFamily::Binary
                  : family == "sary" ? LawFamily::Sary
                  : family == "cayley" ? LawFamily::Cayley
                                       : throw ParseError("unknown family " + family);
    ProfileLaw L = profile_law(n, f, StepSet::parse(steps));
    json arr = json::array();
    for (auto& [P, c] : L.counts) arr.push_back({{"profile", P.str()}, {"count", c.get_str()}});
    return json{{"total", L.total.get_str()}, {"law", arr}}.dump();
}

std::string bijection(const std::string& fn) {
    SFunction f = sfunction_from_json(json::parse(fn));
    json out;
    MarkedSTree t;
    if (f.profile.ell() == 0) {
        PhiTrace tr;
        t = phi(f, &tr);
        out["trace"] = trace_json(f.profile, tr);
        out["valid"] = !check_T(t);
    } else {
        PsiTrace tr;
        t = psi(f, &tr);
        out["trace"] = psi_trace_json(f.profile, tr);
        out["valid"] = !check_general(t);
    }
    out["tree"] = to_json(t);
    return out.dump();
}

std::string bijection_inverse(const std::string& tree) {
    MarkedSTree t = marked_tree_from_json(json::parse(tree));
    return to_json(t.profile.ell() == 0 ? phi_inverse(t) : psi_inverse(t)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    auto base = py::register_exception<Error>(m, "EmbtreeError");
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());

    m.def("count", &count, py::arg("kind"), py::arg("steps"), py::arg("profile"));
    m.def("count_by", &count_by, py::arg("kind"), py::arg("steps"), py::arg("dist"), py::arg("by"));
    m.def("oracle_count", &oracle_count, py::arg("kind"), py::arg("steps"), py::arg("profile"),
          py::call_guard<py::gil_scoped_release>());
    m.def("sample", &sample, py::arg("kind"), py::arg("steps"), py::arg("profile"), py::arg("seed"), py::arg("n"));
    m.def("law", &law, py::arg("family"), py::arg("n"), py::arg("steps"));
    m.def("bijection", &bijection, py::arg("function"));
    m.def("bijection_inverse", &bijection_inverse, py::arg("tree"));
    m.def("set_max_steps", &set_default_max_steps, py::arg("steps"));
}
