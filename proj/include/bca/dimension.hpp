#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bca/lca.hpp"

namespace bca {

inline constexpr int kDefaultDimensionCap = 3;
/// The witness search keeps |D| x |D| tables.
inline constexpr std::size_t kMaxDimensionSetSize = 4096;

/// A contact algebra, the set D the quantifiers range over, and the largest n
/// to test.
struct DimensionQuery {
    ContactStructure ca;
    /// Ascending, duplicate-free; contains 0 and 1.
    std::vector<Mask> d;
    int n_cap = kDefaultDimensionCap;

    /// D = B.
    static DimensionQuery full(const ContactStructure& ca, int n_cap = kDefaultDimensionCap);
    /// Throws InputError if 0 or 1 is missing or D is too large.
    static DimensionQuery over(const ContactStructure& ca, std::span<const Element> d,
                               int n_cap = kDefaultDimensionCap);
};

struct DimVerdict {
    bool holds = true;
    /// On failure: a cover b_i << a_i with join 1 that admits no refinement.
    /// Empty for n = -1.
    std::vector<Element> a;
    std::vector<Element> b;

    explicit operator bool() const { return holds; }
};

/// dim_a(D; ⟨B, ρ⟩) <= n. For n = -1 this holds iff B is degenerate. For
/// n >= 0: every a_1..a_{n+2}, b_1..b_{n+2} in D with b_i << a_i and ⋁b_i = 1
/// admits c_i << d_i << a_i in D with ⋁c_i = 1 and ⋀d_i = 0. The counterexample
/// is lexicographically first, comparing a-tuples before b-tuples.
DimVerdict dim_leq(const DimensionQuery& q, int n);

struct DimResult {
    /// Least n in [-1, n_cap] with dim_leq true; nullopt means "> n_cap".
    std::optional<int> value;
    int n_cap = kDefaultDimensionCap;
    /// verdicts[n + 1] = dim_leq(q, n) for n = -1 .. n_cap.
    std::vector<bool> verdicts;
    /// Pairs n < n' with dim_leq(n) true but dim_leq(n') false.
    std::vector<std::pair<int, int>> non_monotone;

    /// "0", "-1", "> 3".
    std::string to_string() const;
};

/// Evaluates every n from -1 to n_cap independently, so that a failure of
/// monotonicity in n is observed rather than assumed.
DimResult dim_a(const DimensionQuery& q);

enum class LcaDimensionMode {
    /// D = B: the dimension of the underlying contact algebra.
    all_elements,
    /// D = bounded elements plus 1. Experimental; no claim attaches to it.
    bounded_and_top,
};

DimResult dim_a(const LocalContactAlgebra& lca, int n_cap = kDefaultDimensionCap,
                LcaDimensionMode mode = LcaDimensionMode::all_elements);

/// Every a << b interpolates as a << c << b with c in D.
bool is_DV_dense(const ContactStructure& ca, std::span<const Element> d);

struct DvInvarianceResult {
    DimResult over_all;
    DimResult over_d;
    bool equal = false;
};

/// Compares dim_a over B with dim_a over D. Throws InputError unless D is
/// DV-dense and contains 0 and 1.
DvInvarianceResult check_lemma_dv_invariance(const ContactStructure& ca, std::span<const Element> d,
                                             int n_cap = kDefaultDimensionCap);

struct RelativeMonotonicityResult {
    DimResult ambient;
    DimResult relative;
    bool holds = false;
    /// The ambient dimension exceeded n_cap, so the comparison says nothing.
    bool vacuous = false;
};

/// dim_a of the relative LCA at m against dim_a of the LCA. Throws InputError
/// for m = 0 or an invalid LCA.
RelativeMonotonicityResult check_relative_monotonicity(const LocalContactAlgebra& lca, Mask m,
                                                       int n_cap = kDefaultDimensionCap);

} // namespace bca
