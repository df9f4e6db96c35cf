#ifndef RF_FAMILIES_HPP
#define RF_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rf/rational.hpp"

namespace rf {

// Closed integer interval {lo..hi} inside the positive integers.
struct Interval {
    std::int64_t lo = 1;
    std::int64_t hi = 0;
    std::int64_t length() const { return hi >= lo ? hi - lo + 1 : 0; }
};

// Uniformly density-regular family. Three translation-invariant variants:
// all m-element sets, arithmetic progressions of length k, and polynomial
// progressions {a+p_1(n),...,a+p_k(n)} with p_j(0)=0.
struct FamilySpec {
    enum class Variant { FixedSize, ArithmeticProgression, Polynomial };
    Variant variant = Variant::FixedSize;
    int m = 1;                                    // FixedSize
    int k = 1;                                    // ArithmeticProgression
    std::vector<std::vector<Int>> polys;          // Polynomial: coefficient lists, low to high

    static FamilySpec fixed(int m);
    static FamilySpec ap(int k);
    static FamilySpec polynomial(std::vector<std::vector<Int>> polys);

    std::string describe() const;
    bool operator==(const FamilySpec& o) const;
};

using MemberSet = std::vector<std::int64_t>;  // sorted, distinct, positive

// All members of F contained in I, each sorted, the list sorted
// lexicographically and deduplicated.
std::vector<MemberSet> members_in_interval(const FamilySpec& F, const Interval& I);

// Direct membership predicate (no enumeration), used by verifiers.
bool is_member(const FamilySpec& F, const MemberSet& candidate);

// Lexicographically least member of F inside A, if any.
std::optional<MemberSet> contains_member(const FamilySpec& F, const MemberSet& A);

// Result of the horizon-certified search for B(F, eps).
struct BExactResult {
    bool found = false;
    std::int64_t value = 0;
    std::int64_t certified_to = 0;  // checked for all n in [value, certified_to]
    bool fully_certified = false;   // closed-form variants certify all n >= value
};

struct SearchBudget {
    std::uint64_t nodes = 200'000'000;  // DFS node allowance
    std::int64_t max_interval = 64;     // interval lengths the search engine accepts
};

// Least n0 <= horizon such that every A <= {1..n} of density >= eps,
// n in [n0, horizon], contains a member. FixedSize (and AP_k, k <= 2,
// which coincides with FixedSize) is evaluated in closed form and fully
// certified; other variants run a pruned exhaustive search.
BExactResult b_exact(const FamilySpec& F, const Rat& eps, std::int64_t horizon,
                     const SearchBudget& budget = {});

// The admissible value ceil(m/eps); FixedSize only.
Int b_upper(const FamilySpec& F, const Rat& eps);

// Is there a member-free A <= {1..n} with |A| >= target? Exposed for the
// search-style tests; deterministic DFS, include-first.
bool exists_member_free_dense(const FamilySpec& F, std::int64_t n, std::int64_t target,
                              const SearchBudget& budget = {});

// B-evaluation mode shared by M, theta_2, T and V_delta.
struct BMode {
    enum class Kind { Formula, Exact };
    Kind kind = Kind::Formula;
    std::int64_t horizon = 64;       // Exact mode
    SearchBudget budget;

    static BMode formula() { return BMode{}; }
    static BMode exact(std::int64_t h) {
        BMode m;
        m.kind = Kind::Exact;
        m.horizon = h;
        return m;
    }
};

// Concrete interval length for (F, eps) under the given mode; errors if
// the formula-mode value is not an explicit integer (e.g. AP_k, k >= 3)
// or the exact search fails.
Int b_length(const FamilySpec& F, const Rat& eps, const BMode& mode);

// M(F, eta): members inside an interval of length B(F, eta); computed on
// {1..B} by translation invariance.
Int m_count(const FamilySpec& F, const Rat& eta, const BMode& mode);

} // namespace rf

#endif
