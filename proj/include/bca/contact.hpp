#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "bca/boolean_algebra.hpp"

namespace bca {

enum class Axiom {
    C1, C2, C3, C4, C5, C6,
    LL1, LL2, LL2p, LL3, LL4, LL4p, LL5, LL6, LL7,
};

inline constexpr std::array<Axiom, 15> kAllAxioms = {
    Axiom::C1,  Axiom::C2,  Axiom::C3,   Axiom::C4,  Axiom::C5,  Axiom::C6,  Axiom::LL1, Axiom::LL2,
    Axiom::LL2p, Axiom::LL3, Axiom::LL4, Axiom::LL4p, Axiom::LL5, Axiom::LL6, Axiom::LL7,
};

/// "C1" .. "C6", "LL1" .. "LL7", "LL2'", "LL4'".
std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

struct AxiomVerdict {
    Axiom axiom = Axiom::C1;
    bool holds = true;
    /// Variables of the failing instance, in the order they appear in the axiom.
    std::vector<Element> witness;

    explicit operator bool() const { return holds; }
};

enum class Bundle { precontact, contact, extensional, normal };
std::string_view bundle_name(Bundle bundle);

/// Exhaustive axiom checks quantify over up to four elements; above this many
/// atoms they are refused rather than left to run for hours.
inline constexpr int kAxiomCheckAtomCap = 10;

/// A binary relation on atoms, extended to all elements additively:
/// a C b iff some atom of a is related to some atom of b.
///
/// The additive extension always satisfies C1 and C2. Reflexivity and symmetry
/// of the atom relation are not assumed, so precontact relations are
/// representable. Axiom verdicts are computed on first request and cached; the
/// cache is shared between copies and safe to fill from several threads.
class ContactStructure {
  public:
    /// rows[p] is the set of atoms q with p R q.
    ContactStructure(FiniteBooleanAlgebra algebra, std::vector<Mask> rows);

    static ContactStructure from_matrix(FiniteBooleanAlgebra algebra,
                                        const std::vector<std::vector<bool>>& matrix);

    const FiniteBooleanAlgebra& algebra() const { return algebra_; }
    int atom_count() const { return algebra_.atom_count(); }
    const std::vector<Mask>& rows() const { return rows_; }
    bool atoms_related(int p, int q) const { return (rows_.at(p) >> q) & 1; }

    /// Atoms related to some atom of `a`.
    Mask reach(Mask a) const;
    bool contact(Mask a, Mask b) const { return (reach(a) & b) != 0; }
    /// a << b iff not a C b*.
    bool way_below(Mask a, Mask b) const { return !contact(a, algebra_.universe() & ~b); }

    bool contact_holds(const Element& a, const Element& b) const;
    bool way_below(const Element& a, const Element& b) const;

    const AxiomVerdict& verdict(Axiom axiom) const;
    bool satisfies(Bundle bundle) const;
    bool is_precontact() const { return satisfies(Bundle::precontact); }
    bool is_contact() const { return satisfies(Bundle::contact); }

    /// Same algebra and same atom relation.
    bool same_relation(const ContactStructure& other) const {
        return algebra_ == other.algebra_ && rows_ == other.rows_;
    }

  private:
    struct Cache;

    FiniteBooleanAlgebra algebra_;
    std::vector<Mask> rows_;
    std::vector<Mask> reach_table_;
    std::shared_ptr<Cache> cache_;
};

/// Every finite precontact algebra is a Boolean algebra with an additive
/// relation, so the two notions share one representation.
using ContactAlgebra = ContactStructure;

ContactStructure from_atom_relation(const FiniteBooleanAlgebra& algebra, std::vector<Mask> rows);

/// Uncached exhaustive check; `ContactStructure::verdict` memoizes this.
AxiomVerdict check_axiom(const ContactStructure& ca, Axiom axiom);

enum class Extremal { smallest, largest };

/// Smallest: overlap (identity atom relation). Largest: every pair of nonzero
/// elements touches (complete atom relation).
ContactStructure extremal_relation(const FiniteBooleanAlgebra& algebra, Extremal which);

/// Every a other than 0 and 1 touches its complement. Requires a contact algebra.
bool is_connected(const ContactStructure& ca);

enum class MorphismMode { preserves, reflects };

/// Exhaustive over element pairs. Throws InputError if `h` is not a
/// homomorphism between the two algebras.
LawVerdict check_ca_morphism(const BooleanHomomorphism& h, const ContactStructure& source,
                             const ContactStructure& target, MorphismMode mode);

/// Preserves and reflects contact and is bijective.
bool is_ca_isomorphism(const BooleanHomomorphism& h, const ContactStructure& source,
                       const ContactStructure& target);

} // namespace bca
