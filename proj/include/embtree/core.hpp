#pragma once

#include <gmpxx.h>

#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace embtree {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
    Hypothesis,
    Parse,
    Budget,
    Internal,
    Precondition,
    Condition,
    Incompatible,
    NonInteger,
    NotInjective,
    NonSurjective,
    Infeasible,
    InvalidProfile,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

#define EMBTREE_ERROR(Name, Kind)                                              \
    struct Name : Error {                                                      \
        explicit Name(const std::string& m) : Error(ErrorKind::Kind, m) {}     \
    };
EMBTREE_ERROR(HypothesisViolation, Hypothesis)
EMBTREE_ERROR(ParseError, Parse)
EMBTREE_ERROR(BudgetExceeded, Budget)
EMBTREE_ERROR(InternalError, Internal)
EMBTREE_ERROR(PreconditionViolated, Precondition)
EMBTREE_ERROR(ConditionViolated, Condition)
EMBTREE_ERROR(IncompatibleDistribution, Incompatible)
EMBTREE_ERROR(NonIntegerResult, NonInteger)
EMBTREE_ERROR(NotInjective, NotInjective)
EMBTREE_ERROR(NonSurjectiveProfile, NonSurjective)
EMBTREE_ERROR(InfeasibleProfile, Infeasible)
EMBTREE_ERROR(InvalidProfile, InvalidProfile)
#undef EMBTREE_ERROR

// 0 ok, 1 internal, 2 hypothesis/parse/other domain error, 3 budget
int exit_code_for(ErrorKind k);

#define EMBTREE_ASSERT(cond)                                                   \
    do {                                                                       \
        if (!(cond))                                                           \
            throw ::embtree::InternalError(std::string("assertion failed: ") + \
                                           #cond + " at " + __FILE__ + ":" +   \
                                           std::to_string(__LINE__));          \
    } while (0)

// out-type step of the root
constexpr int EPS = INT_MIN;

enum class Regime { NonNeg, General };

class StepSet {
public:
    StepSet() : steps_{1} {}
    explicit StepSet(std::vector<int> steps);
    static StepSet parse(const std::string& text);
    // skips the max S = 1 check; brute-force enumeration only
    static StepSet relaxed(std::vector<int> steps);
    static StepSet parse_relaxed(const std::string& text);

    const std::vector<int>& steps() const { return steps_; }
    int m() const { return steps_.front(); }
    int M() const { return steps_.back(); }
    bool has(int s) const;
    int size() const { return int(steps_.size()); }
    std::string str() const;
    bool operator==(const StepSet&) const = default;

private:
    std::vector<int> steps_;
};

class Profile {
public:
    Profile() : Profile(0, {1}) {}
    Profile(int ell, std::vector<int> counts);
    static Profile parse(const std::string& text);

    int ell() const { return ell_; }
    int r() const { return ell_ + int(counts_.size()) - 1; }
    int n(int i) const { return (i < ell_ || i > r()) ? 0 : counts_[i - ell_]; }
    int total() const { return int(abs_.size()); }
    const std::vector<int>& counts() const { return counts_; }
    std::string str() const;
    bool operator==(const Profile& o) const { return ell_ == o.ell_ && counts_ == o.counts_; }

    // vertices are ids 0..n-1 in the total order i^k < j^p iff (i,k) < (j,p)
    int id(int i, int k) const { return off_[i - ell_] + k - 1; }
    int first(int i) const { return off_[i - ell_]; }
    int abscissa(int v) const { return abs_[v]; }
    int index(int v) const { return v - off_[abs_[v] - ell_] + 1; }
    const std::vector<int>& abscissas() const { return abs_; }

private:
    int ell_;
    std::vector<int> counts_;
    std::vector<int> off_;
    std::vector<int> abs_;
};

// every composition of n with a choice of the abscissa-0 part (only the first when nonnegOnly)
std::vector<Profile> profiles_of_size(int n, bool nonnegOnly);

// throws HypothesisViolation
void validate_profile_for(const StepSet& S, const Profile& P, Regime regime);
// hypothesis shared by the profile formulas: min S = -1 or ell = 0
void require_product_hypothesis(const StepSet& S, const Profile& P);

struct SFunction {
    Profile profile;
    StepSet steps;
    std::vector<int> image;  // -1 at 0^1

    void validate() const;
    bool operator==(const SFunction&) const = default;
};

// (F) in the given regime
bool satisfies_F(const SFunction& f, Regime regime);

struct MarkedSTree {
    Profile profile;
    StepSet steps;
    std::vector<int> parent;  // -1 at the root
    int root = 0;
    int mark = 0;

    void validate() const;
    bool operator==(const MarkedSTree&) const = default;
};

struct EmbeddedCayleyTree {
    StepSet steps;
    int root = 0;                 // 0-based label
    std::vector<int> parent;      // -1 at the root
    std::vector<int> abscissa;

    int size() const { return int(parent.size()); }
    Profile profile() const;
    void validate() const;
    bool is_injective() const;
    bool operator==(const EmbeddedCayleyTree&) const = default;
};

struct SAryTree {
    int abscissa = 0;
    std::vector<int> steps;       // increasing
    std::vector<SAryTree> kids;   // kids[j] hangs at step steps[j]

    int size() const;
    Profile profile() const;
    bool operator==(const SAryTree&) const = default;
    bool operator<(const SAryTree& o) const;
};

SAryTree sary_of(const EmbeddedCayleyTree& t);

using CVec = std::vector<int>;  // entries for steps m..1

struct VertexType {
    int i;
    int s;  // EPS for the root
    CVec c;
    bool operator==(const VertexType&) const = default;
};

struct TypeDistribution {
    int m = 1;
    std::map<std::pair<int, int>, long> out;
    std::map<std::pair<int, CVec>, long> in;
    std::map<std::tuple<int, int, CVec>, long> complete;  // non-root vertices
    CVec rootIn;

    Profile profile() const;
    bool compatible() const;
    bool operator==(const TypeDistribution&) const = default;
    bool operator<(const TypeDistribution& o) const;
};

// per-vertex types of a map given as image/parent array (-1 at the root)
std::vector<VertexType> vertex_types(const std::vector<int>& img, const std::vector<int>& abscissa, int m);
TypeDistribution distribution_of_types(const std::vector<VertexType>& types, int m);

TypeDistribution type_distribution_of(const SFunction& f, int m);
TypeDistribution type_distribution_of(const MarkedSTree& t, int m);
TypeDistribution type_distribution_of(const EmbeddedCayleyTree& t, int m);
TypeDistribution type_distribution_of(const SAryTree& t, int m);
inline TypeDistribution type_distribution_of(const SFunction& f) { return type_distribution_of(f, f.steps.m()); }
inline TypeDistribution type_distribution_of(const MarkedSTree& t) { return type_distribution_of(t, t.steps.m()); }
inline TypeDistribution type_distribution_of(const EmbeddedCayleyTree& t) { return type_distribution_of(t, t.steps.m()); }

std::string vertex_name(const Profile& P, int v);

}  // namespace embtree
