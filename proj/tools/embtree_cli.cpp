#include "embtree/bij_general.hpp"
#include "embtree/bij_nonneg.hpp"
#include "embtree/conditions.hpp"
#include "embtree/formulas.hpp"
#include "embtree/oracle.hpp"
#include "embtree/sampler.hpp"
#include "embtree/serialize.hpp"
#include "embtree/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace embtree;

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

struct CountOpts {
    std::string kind, steps = "-1,1", profile, dist, by = "out";
    bool explain = false, asJson = false;
};

int cmd_count(const CountOpts& o) {
    StepSet S = o.kind == "binary" ? StepSet({-1, 1}) : StepSet::parse(o.steps);
    BigInt c;
    json j{{"kind", o.kind}, {"steps", to_json(S)}};
    if (!o.dist.empty()) {
        TypeDistribution d = distribution_from_json(read_json_file(o.dist));
        bool cayley = o.kind == "cayley";
        if (o.by == "out")
            c = cayley ? count_cayley_out(S, d) : count_sary_out(S, d);
        else if (o.by == "in")
            c = cayley ? count_cayley_in(S, d) : count_sary_in(S, d);
        else if (o.by == "complete" && cayley)
            c = count_cayley_complete(S, d.rootIn, d);
        else
            throw ParseError("no " + o.by + "-type formula for " + o.kind + " trees");
        j["by"] = o.by;
    } else {
        if (o.profile.empty()) throw ParseError("give --profile or --dist");
        Profile P = Profile::parse(o.profile);
        c = o.kind == "binary" ? count_binary_profile(P) : o.kind == "cayley" ? count_cayley_profile(S, P) : count_sary_profile(S, P);
        j["profile"] = P.str();
        if (o.explain) {
            json fs = json::array();
            for (auto& f : explain_profile_count(o.kind, S, P)) fs.push_back({{"factor", f.label}, {"value", rational_str(f.value)}});
            j["factors"] = fs;
        }
    }
    j["count"] = c.get_str();
    if (o.asJson) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << c.get_str() << "\n";
        if (j.contains("factors"))
            for (auto& f : j["factors"]) std::cout << "  " << f["factor"].get<std::string>() << " = " << f["value"].get<std::string>() << "\n";
    }
    return 0;
}

struct VerifyOpts {
    int maxN = 5, span = 4, points = 100;
    std::string steps;
    bool regression = false, identities = false, asJson = false;
    std::uint64_t seed = 1201;
};

int cmd_verify(const VerifyOpts& o) {
    Report rep;
    auto add = [&](const Report& r) { rep.insert(rep.end(), r.begin(), r.end()); };
    if (o.regression) add(verify_regression());
    if (o.identities) add(verify_identities(o.span, o.points, o.seed));
    if (!o.regression && !o.identities) {
        std::vector<StepSet> sets = o.steps.empty() ? small_step_sets() : std::vector<StepSet>{StepSet::parse(o.steps)};
        std::vector<StepSet> general;
        for (auto& S : sets)
            if (S.m() == -1) general.push_back(S);
        add(verify_formulas(o.maxN, sets));
        add(verify_phi(o.maxN, sets));
        add(verify_psi(o.maxN, general));
        add(verify_matrix_tree(std::min(o.maxN, 6), sets, o.seed));
    }
    std::sort(rep.begin(), rep.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    if (o.asJson) {
        std::cout << report_json(rep).dump(2) << "\n";
    } else {
        for (auto& c : rep)
            std::cout << (c.pass ? "pass " : "FAIL ") << c.id << " (" << c.cases << ")" << (c.detail.empty() ? "" : ": " + c.detail)
                      << "\n";
    }
    return all_pass(rep) ? 0 : 1;  // a mismatch is a failed assertion of the library
}

struct SampleOpts {
    std::string kind, steps = "-1,1", profile;
    std::uint64_t seed = 1;
    int count = 1;
};

int cmd_sample(const SampleOpts& o) {
    StepSet S = StepSet::parse(o.steps);
    Profile P = Profile::parse(o.profile);
    Rng rng(o.seed);
    for (int k = 0; k < o.count; ++k) {
        if (o.kind == "cayley")
            std::cout << to_json(sample_embedded_cayley(S, P, rng)).dump() << "\n";
        else if (o.kind == "sary")
            std::cout << to_json(sample_sary(S, P, rng)).dump() << "\n";
        else
            std::cout << to_json(sample_sfunction(S, P, P.ell() == 0 ? Regime::NonNeg : Regime::General, rng)).dump() << "\n";
    }
    return 0;
}

struct LawOpts {
    std::string family, steps = "-1,1";
    int n = 0;
    bool asJson = false;
    int marginal = INT_MIN;
};

int cmd_law(const LawOpts& o) {
    LawFamily f = o.family == "binary" ? LawFamily::Binary : o.family == "sary" ? LawFamily::Sary : LawFamily::Cayley;
    ProfileLaw law = profile_law(o.n, f, StepSet::parse(o.steps));
    if (o.marginal != INT_MIN) {
        auto m = occupation_marginal(law, o.marginal);
        if (o.asJson) {
            json arr = json::array();
            for (auto& [k, p] : m) arr.push_back({{"count", k}, {"numerator", p.get_num().get_str()}, {"denominator", p.get_den().get_str()}});
            std::cout << json{{"n", o.n}, {"abscissa", o.marginal}, {"marginal", arr}}.dump() << "\n";
        } else {
            std::cout << "count,numerator,denominator\n";
            for (auto& [k, p] : m) std::cout << k << "," << p.get_num().get_str() << "," << p.get_den().get_str() << "\n";
        }
        return 0;
    }
    if (o.asJson) {
        json arr = json::array();
        for (auto& [P, c] : law.counts) {
            Rational p(c, law.total);
            p.canonicalize();
            arr.push_back({{"profile", P.str()}, {"count", c.get_str()}, {"numerator", p.get_num().get_str()}, {"denominator", p.get_den().get_str()}});
        }
        std::cout << json{{"n", o.n}, {"family", o.family}, {"steps", to_json(law.steps)}, {"total", law.total.get_str()}, {"law", arr}}.dump()
                  << "\n";
    } else {
        std::cout << "profile,numerator,denominator\n";
        for (auto& [P, c] : law.counts) {
            Rational p(c, law.total);
            p.canonicalize();
            std::cout << "\"" << P.str() << "\"," << p.get_num().get_str() << "," << p.get_den().get_str() << "\n";
        }
    }
    return 0;
}

int cmd_trace(const std::string& input) {
    SFunction f = sfunction_from_json(read_json_file(input));
    json out{{"function", to_json(f)}};
    MarkedSTree t;
    if (f.profile.ell() == 0) {
        PhiTrace tr;
        t = phi(f, &tr);
        out["bijection"] = "non-negative";
        out["trace"] = trace_json(f.profile, tr);
        out["valid"] = !check_T(t);
    } else {
        PsiTrace tr;
        t = psi(f, &tr);
        out["bijection"] = "general";
        out["trace"] = psi_trace_json(f.profile, tr);
        out["valid"] = !check_general(t);
    }
    out["tree"] = to_json(t);
    std::cout << out.dump(2) << "\n";
    return out["valid"].get<bool>() ? 0 : 1;
}

int cmd_inverse(const std::string& input) {
    MarkedSTree t = marked_tree_from_json(read_json_file(input));
    SFunction f = t.profile.ell() == 0 ? phi_inverse(t) : psi_inverse(t);
    std::cout << json{{"tree", to_json(t)}, {"function", to_json(f)}}.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counting, bijections and sampling for trees embedded in the integers"};
    app.require_subcommand(1);
    long long budget = 0;
    app.add_option("--budget", budget, "enumeration step limit (default from EMBTREE_MAX_STEPS)");

    CountOpts co;
    auto* count = app.add_subcommand("count", "closed-form counts");
    count->add_option("kind", co.kind)->required()->check(CLI::IsMember({"binary", "cayley", "sary"}));
    count->add_option("--steps", co.steps, "step set, e.g. -1,1 or -2..1");
    count->add_option("--profile", co.profile, "vertical profile, e.g. \"2;2,1\"");
    count->add_option("--dist", co.dist, "type distribution JSON file");
    count->add_option("--by", co.by, "which part of --dist to count by")->check(CLI::IsMember({"out", "in", "complete"}));
    count->add_flag("--explain", co.explain);
    count->add_flag("--json", co.asJson);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "cross-check formulas, bijections and identities");
    verify->add_option("--max-n", vo.maxN, "largest size in the sweeps");
    verify->add_option("--steps", vo.steps, "restrict to one step set");
    verify->add_flag("--regression", vo.regression, "pinned values only");
    verify->add_flag("--identities", vo.identities, "cycle polynomial identities only");
    verify->add_option("--span", vo.span, "|l|, r bound for --identities");
    verify->add_option("--points", vo.points, "random points per (l, r)");
    verify->add_option("--seed", vo.seed);
    verify->add_flag("--json", vo.asJson);

    SampleOpts so;
    auto* sample = app.add_subcommand("sample", "uniform random generation, JSON lines");
    sample->add_option("kind", so.kind)->required()->check(CLI::IsMember({"cayley", "sary", "function"}));
    sample->add_option("--steps", so.steps);
    sample->add_option("--profile", so.profile)->required();
    sample->add_option("--seed", so.seed);
    sample->add_option("-n", so.count, "number of samples");

    LawOpts lo;
    auto* law = app.add_subcommand("law", "exact law of the vertical profile");
    law->add_option("family", lo.family)->required()->check(CLI::IsMember({"binary", "sary", "cayley"}));
    law->add_option("-n", lo.n, "tree size")->required();
    law->add_option("--steps", lo.steps);
    law->add_option("--marginal", lo.marginal, "law of n_i at this abscissa instead");
    law->add_flag("--json", lo.asJson);

    std::string input;
    auto* bij = app.add_subcommand("bijection", "run the function/tree bijection");
    bij->require_subcommand(1);
    auto* trace = bij->add_subcommand("trace", "function JSON to marked tree, with the staged trace");
    trace->add_option("--input", input)->required();
    auto* inverse = bij->add_subcommand("inverse", "marked tree JSON back to its function");
    inverse->add_option("--input", input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (budget > 0) set_default_max_steps(budget);
        if (*count) return cmd_count(co);
        if (*verify) return cmd_verify(vo);
        if (*sample) return cmd_sample(so);
        if (*law) return cmd_law(lo);
        if (*trace) return cmd_trace(input);
        if (*inverse) return cmd_inverse(input);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
