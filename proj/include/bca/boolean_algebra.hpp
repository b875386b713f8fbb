#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bca/bits.hpp"

namespace bca {

using AlgebraId = std::uint64_t;

inline constexpr int kDefaultAtomCap = 24;
inline constexpr int kMaxAtomCap = 62;

/// An element of a finite Boolean algebra: the set of atoms below it, tagged
/// with the identity of the owning algebra.
struct Element {
    AlgebraId algebra = 0;
    Mask atoms = 0;

    friend bool operator==(const Element&, const Element&) = default;
};

/// The power-set algebra on {0, ..., atom_count - 1}. Every finite Boolean
/// algebra is isomorphic to one of these. Zero atoms is allowed and gives the
/// degenerate algebra in which 0 = 1.
///
/// Copies share identity; two separately constructed algebras never do, even
/// with equal atom counts, and operations mixing their elements are rejected.
class FiniteBooleanAlgebra {
  public:
    explicit FiniteBooleanAlgebra(int atom_count, int atom_cap = kDefaultAtomCap);

    AlgebraId id() const { return id_; }
    int atom_count() const { return atom_count_; }
    std::uint64_t size() const { return std::uint64_t{1} << atom_count_; }
    Mask universe() const { return universe_; }
    bool is_degenerate() const { return atom_count_ == 0; }

    Element zero() const { return {id_, 0}; }
    Element one() const { return {id_, universe_}; }
    Element atom(int i) const;
    /// Throws InputError if `atoms` has bits outside the universe.
    Element element(Mask atoms) const;

    bool owns(const Element& e) const { return e.algebra == id_; }
    /// Throws InputError unless `e` belongs to this algebra.
    void require(const Element& e) const;

    Element join(const Element& a, const Element& b) const;
    Element meet(const Element& a, const Element& b) const;
    Element complement(const Element& a) const;
    Element symdiff(const Element& a, const Element& b) const;
    bool leq(const Element& a, const Element& b) const;

    /// All elements in ascending mask order.
    std::vector<Element> elements() const;
    std::vector<Element> atoms() const;

    friend bool operator==(const FiniteBooleanAlgebra& a, const FiniteBooleanAlgebra& b) {
        return a.id_ == b.id_;
    }

  private:
    AlgebraId id_;
    int atom_count_;
    Mask universe_;
};

FiniteBooleanAlgebra make_powerset_algebra(int atom_count, int atom_cap = kDefaultAtomCap);

enum class BoolOp { join, meet, complement, symdiff, leq };

/// Single entry point for the basic operations; `leq` yields a truth value,
/// the others an element. `complement` takes only `a`.
std::variant<Element, bool> boolean_operation(const FiniteBooleanAlgebra& algebra, BoolOp op,
                                              const Element& a,
                                              std::optional<Element> b = std::nullopt);

/// Masks of a set of elements, checked for ownership.
std::vector<Mask> masks_of(const FiniteBooleanAlgebra& algebra, std::span<const Element> elements);
std::vector<Element> elements_of(const FiniteBooleanAlgebra& algebra, std::span<const Mask> masks);

/// B_u = {x : x <= u} as an algebra in its own right, with the order
/// isomorphism back into the parent. Relative atoms are the parent atoms
/// below u, in increasing order.
struct RelativeAlgebra {
    FiniteBooleanAlgebra parent;
    FiniteBooleanAlgebra algebra;
    Element top;

    Element embed(const Element& relative) const;
    /// Inverse of embed; `x` must lie below `top`.
    Element restrict(const Element& x) const;
    /// x* ∧ u computed in the parent.
    Element relative_complement(const Element& x) const;
};

/// Rejects u = 0.
RelativeAlgebra relative_algebra(const FiniteBooleanAlgebra& algebra, const Element& u);

/// M is dense iff every nonzero element dominates a nonzero member of M.
bool is_dense_subset(const FiniteBooleanAlgebra& algebra, std::span<const Element> subset);

struct DenseSetResult {
    std::size_t cardinality = 0;
    std::vector<Element> witness;
};

/// Smallest dense subset (the pi-weight of the algebra), found by minimum
/// hitting-set search; the witness is the lexicographically smallest one.
DenseSetResult min_dense_cardinality(const FiniteBooleanAlgebra& algebra);

/// A set of elements closed under the Boolean operations, containing 0 and 1.
class Subalgebra {
  public:
    /// Throws InputError if `members` is not closed or misses 0 or 1.
    static Subalgebra make(const FiniteBooleanAlgebra& parent, std::span<const Element> members);

    const FiniteBooleanAlgebra& parent() const { return parent_; }
    /// Ascending mask order, no duplicates.
    const std::vector<Mask>& masks() const { return members_; }
    std::vector<Element> members() const { return elements_of(parent_, members_); }
    std::size_t size() const { return members_.size(); }
    bool contains(const Element& e) const;

  private:
    Subalgebra(FiniteBooleanAlgebra parent, std::vector<Mask> members)
        : parent_(std::move(parent)), members_(std::move(members)) {}

    FiniteBooleanAlgebra parent_;
    std::vector<Mask> members_;
};

/// Closure of S ∪ {0, 1} under meet and complement, by worklist iteration.
Subalgebra generated_subalgebra(const FiniteBooleanAlgebra& algebra, std::span<const Element> generators);

/// A total element-to-element map between two algebras.
class BooleanHomomorphism {
  public:
    /// `table[x]` is the image of the element with mask x. Throws InputError if
    /// the table is not total on the source or hits foreign elements.
    BooleanHomomorphism(FiniteBooleanAlgebra source, FiniteBooleanAlgebra target,
                        std::vector<Element> table);

    /// The join-extension of the given atom images.
    static BooleanHomomorphism from_atom_images(const FiniteBooleanAlgebra& source,
                                                const FiniteBooleanAlgebra& target,
                                                std::span<const Element> atom_images);
    static BooleanHomomorphism identity(const FiniteBooleanAlgebra& algebra);

    const FiniteBooleanAlgebra& source() const { return source_; }
    const FiniteBooleanAlgebra& target() const { return target_; }
    const std::vector<Mask>& table() const { return table_; }

    Element operator()(const Element& x) const;
    Mask apply(Mask x) const { return table_[x]; }
    bool is_injective() const;
    bool is_surjective() const;

  private:
    FiniteBooleanAlgebra source_;
    FiniteBooleanAlgebra target_;
    std::vector<Mask> table_;
};

/// Outcome of a law check: which law failed first and on which elements.
struct LawVerdict {
    bool holds = true;
    std::string law;
    std::vector<Element> witness;

    explicit operator bool() const { return holds; }
};

/// Checks preservation of 0, 1, meet and complement, in that order.
LawVerdict check_homomorphism(const BooleanHomomorphism& h);

} // namespace bca
