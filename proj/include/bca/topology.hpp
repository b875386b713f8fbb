#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bca/lca.hpp"

namespace bca {

inline constexpr int kDefaultPointCap = 5;

/// A finite topological space given by its open sets. Points are 0..n-1 and
/// subsets are bit masks. The empty set and the whole space are added if
/// missing; any other failure to be closed under union and intersection is
/// rejected. Opens are kept sorted ascending.
class FiniteSpace {
  public:
    FiniteSpace(int point_count, std::vector<Mask> opens, int point_cap = kDefaultPointCap);

    static FiniteSpace discrete(int point_count);
    static FiniteSpace indiscrete(int point_count);

    int point_count() const { return points_; }
    Mask universe() const { return low_bits(points_); }
    const std::vector<Mask>& opens() const { return opens_; }
    bool is_open(Mask s) const;
    bool is_closed(Mask s) const { return is_open(universe() & ~s); }

    Mask interior(Mask s) const;
    Mask closure(Mask s) const;

    bool is_discrete() const { return opens_.size() == (std::size_t{1} << points_); }
    /// Singletons are closed. A finite T1 space is discrete.
    bool is_t1() const;

    friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

  private:
    void require_subset(Mask s) const;

    int points_;
    std::vector<Mask> opens_;
};

/// Every topology on n labelled points (n <= 4), each as a FiniteSpace.
std::vector<FiniteSpace> enumerate_topologies(int point_count);

/// A point map that pulls opens back to opens.
class ContinuousMap {
  public:
    /// Throws InputError if the map is not total, leaves the target, or is
    /// not continuous.
    ContinuousMap(FiniteSpace source, FiniteSpace target, std::vector<int> point_map);

    static ContinuousMap identity(const FiniteSpace& space);

    const FiniteSpace& source() const { return source_; }
    const FiniteSpace& target() const { return target_; }
    const std::vector<int>& point_map() const { return map_; }
    Mask preimage(Mask s) const;
    Mask image(Mask s) const;

  private:
    FiniteSpace source_;
    FiniteSpace target_;
    std::vector<int> map_;
};

/// g ∘ f.
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);

/// Largest n such that some n + 1 members at distinct positions share a point;
/// -1 when no member has a point. Throws InputError for an empty family.
int ord(std::span<const Mask> family);

bool is_cover(const FiniteSpace& space, std::span<const Mask> family);

struct CoverReport {
    bool is_cover = false;
    /// `fine` covers and each of its members lies inside a member of `coarse`.
    bool is_refinement = false;
    /// Only defined for families of equal length.
    std::optional<bool> is_shrinking;
    std::optional<bool> is_swelling;
    /// Positions whose intersection pattern differs, when is_swelling is false
    /// for that reason.
    std::vector<int> swelling_witness;
};

/// Relations of `fine` to `coarse`: whether `fine` is a cover, a refinement,
/// a shrinking (fine_i ⊆ coarse_i) and a swelling (coarse_i ⊆ fine_i with the
/// same empty intersections).
CoverReport cover_predicates(const FiniteSpace& space, std::span<const Mask> coarse, std::span<const Mask> fine);

/// Throw InputError when the families differ in length.
bool is_shrinking(const FiniteSpace& space, std::span<const Mask> coarse, std::span<const Mask> fine);
bool is_swelling(const FiniteSpace& space, std::span<const Mask> coarse, std::span<const Mask> fine);

/// Covers by distinct nonempty opens from which no member can be dropped.
std::vector<std::vector<Mask>> irredundant_open_covers(const FiniteSpace& space);

/// Some open refinement of `cover` has order at most n.
bool has_open_refinement_of_order(const FiniteSpace& space, std::span<const Mask> cover, int n);

/// Čech–Lebesgue dimension: least n in [-1, n_cap] such that every
/// irredundant open cover has an open refinement of order <= n; nullopt means
/// "> n_cap".
std::optional<int> dim_cl(const FiniteSpace& space, int n_cap = kDefaultPointCap);

/// The same quantity with every subfamily of opens taken as a cover. Only for
/// cross-checking on small spaces.
std::optional<int> dim_cl_all_covers(const FiniteSpace& space, int n_cap = kDefaultPointCap);

/// Λ^t(X) = ⟨RC(X), ρ_X, RC(X)⟩ together with the dictionary between
/// abstract elements and regular closed sets. Atoms are the minimal nonempty
/// regular closed sets (which may overlap as point sets); each regular closed
/// set is the union of the atoms below it.
struct RcAlgebra {
    FiniteSpace space;
    LocalContactAlgebra lca;
    std::vector<Mask> atom_sets;
    /// element_sets[x] is the regular closed set of the element with mask x.
    std::vector<Mask> element_sets;

    Mask set_of(const Element& e) const;
    /// Throws InputError unless `points` is regular closed.
    Element element_of(Mask points) const;
};

RcAlgebra rc_algebra(const FiniteSpace& space);

/// ⟨RO(X), D_X⟩ and ν(U) = cl U into a given RC algebra of the same space.
/// Atoms of RO(X) are its minimal nonempty members, which are disjoint.
struct RoAlgebra {
    FiniteSpace space;
    ContactStructure ca;
    std::vector<Mask> atom_sets;
    std::vector<Mask> element_sets;
    BooleanHomomorphism nu;

    Mask set_of(const Element& e) const;
    Element element_of(Mask points) const;
};

/// Raises InternalInconsistency if ν is not a CA-isomorphism.
RoAlgebra ro_algebra(const RcAlgebra& rc);

struct RegularShrinkingReport {
    /// Every regular open cover U_1..U_{n+2} has a regular closed shrinking
    /// with empty intersection.
    bool shrinking_predicate = false;
    /// ... whose interiors also cover the space.
    bool interior_predicate = false;
    /// The space is T1 (hence discrete and normal); otherwise the predicates
    /// are evaluated outside the hypotheses of the equivalence with dim <= n.
    bool within_hypotheses = false;
};

/// Inside the hypotheses, both predicates are compared with dim_cl <= n and a
/// disagreement is raised as InternalInconsistency.
RegularShrinkingReport regular_shrinking_dim_check(const FiniteSpace& space, int n);

struct SpaceWeight {
    std::size_t cardinality = 0;
    /// Lexicographically smallest minimum family, as point sets.
    std::vector<Mask> witness;
};

/// Smallest base of the topology.
SpaceWeight weight_of_space(const FiniteSpace& space);
/// Smallest π-base: nonempty opens such that every nonempty open contains one.
SpaceWeight pi_weight_of_space(const FiniteSpace& space);

/// RO(X) is a base.
bool is_semiregular(const FiniteSpace& space);
/// Every nonempty open contains a nonempty regular open set. When true, the
/// π-weight of the space is compared with πw_a(RC(X)) and a mismatch is
/// raised as InternalInconsistency.
bool is_pi_semiregular(const FiniteSpace& space);

/// G ↦ cl(f⁻¹(int G)) from Λ^t(Y) to Λ^t(X) for f: X → Y. The RC algebras
/// must be built from f's source and target. When both spaces are discrete
/// the DHLC axioms are asserted.
LcaMorphismTable lambda_t_map(const ContinuousMap& f, const RcAlgebra& source_rc, const RcAlgebra& target_rc);

/// The discrete space on the atoms of B.
FiniteSpace stone_dual(const FiniteBooleanAlgebra& algebra);

struct CoAlgebra {
    FiniteBooleanAlgebra algebra;
    /// Minimal nonempty clopen sets; they partition the space.
    std::vector<Mask> atom_sets;
};

/// The Boolean algebra of clopen sets.
CoAlgebra co_algebra(const FiniteSpace& space);

/// No clopen set other than ∅ and X. Raises InternalInconsistency if this
/// disagrees with connectedness of the contact algebra RC(X).
bool is_connected_space(const FiniteSpace& space);

} // namespace bca
