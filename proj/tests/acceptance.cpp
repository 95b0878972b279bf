// One line per acceptance criterion; exit status 1 if any fails.
#include "embtree/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace embtree;

namespace {

constexpr std::uint64_t kSamplerSeed = 20121001;
constexpr std::uint64_t kIdentitySeed = 1201;
constexpr std::uint64_t kMatrixSeed = 7;

Report join(std::initializer_list<Report> parts) {
    Report out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool criterion(int k, const char* title, double limitSeconds, const std::function<Report()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    std::string err;
    try {
        rep = run();
    } catch (const std::exception& e) {
        err = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    long cases = 0;
    for (auto& c : rep) cases += c.cases;
    bool ok = err.empty() && all_pass(rep) && secs < limitSeconds;
    std::string why;
    if (!err.empty()) why = " error: " + err;
    for (auto& c : rep)
        if (!c.pass) why += " [" + c.id + ": " + c.detail + "]";
    if (secs >= limitSeconds) why += " [over time limit]";
    std::printf("%s criterion %d: %s (%zu checks, %ld cases, %.1fs)%s\n", ok ? "PASS" : "FAIL", k, title, rep.size(), cases,
                secs, why.c_str());
    std::fflush(stdout);
    return ok;
}

}  // namespace

int main() {
    auto sets = small_step_sets();
    std::vector<StepSet> pm = {StepSet({-1, 1}), StepSet::parse("-1..1")};
    bool ok = true;
    ok &= criterion(1, "pinned regressions 3, 720, 9", 1.0, verify_pinned_counts);
    ok &= criterion(2, "prime-count regressions 107 and 115560", 60.0, verify_prime_pins);
    ok &= criterion(3, "formulas equal the oracle census, n <= 6", 600.0, [&] { return verify_formulas(6, sets); });
    ok &= criterion(4, "bijection suite, n <= 6", 600.0,
                    [&] { return join({verify_phi(6, sets), verify_psi(6, pm), verify_negative_controls()}); });
    ok &= criterion(5, "closure sums", 60.0, [&] { return verify_closure(10, 7, 7); });
    ok &= criterion(6, "cycle identities and matrix-tree", 300.0,
                    [&] { return join({verify_identities(4, 100, kIdentitySeed), verify_matrix_tree(6, sets, kMatrixSeed)}); });
    ok &= criterion(7, "sampler uniformity and exact profile law", 600.0,
                    [&] { return join({verify_sampler(kSamplerSeed), verify_law(10)}); });
    ok &= criterion(8, "tree-in-tree formula, determinant and listing", 600.0, [&] { return verify_tree_in_tree(4, 7); });
    return ok ? 0 : 1;
}
