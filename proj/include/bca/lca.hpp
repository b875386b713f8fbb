#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "bca/contact.hpp"

namespace bca {

/// ⟨B, ρ, 𝔹⟩ with the bounded ideal 𝔹 = {b : b <= u} stored as its top u.
/// Every ideal of a finite Boolean algebra is principal, so nothing is lost.
///
/// Construction only requires u to belong to the algebra; the LC axioms are
/// checked on demand by `check_lca_axioms` and cached.
class LocalContactAlgebra {
  public:
    LocalContactAlgebra(ContactStructure ca, Mask bounded_top);
    /// ⟨B, C, B⟩.
    explicit LocalContactAlgebra(ContactStructure ca);

    const ContactStructure& ca() const { return ca_; }
    const FiniteBooleanAlgebra& algebra() const { return ca_.algebra(); }
    int atom_count() const { return ca_.atom_count(); }
    Mask universe() const { return ca_.algebra().universe(); }
    Mask bounded_top() const { return bounded_; }
    bool is_bounded(Mask a) const { return is_subset(a, bounded_); }
    bool way_below(Mask a, Mask b) const { return ca_.way_below(a, b); }

    /// Cached result of `check_lca_axioms`.
    const LawVerdict& verdict() const;
    bool is_valid() const { return verdict().holds; }

  private:
    struct Cache;

    ContactStructure ca_;
    Mask bounded_;
    std::shared_ptr<Cache> cache_;
};

/// Contact bundle first (law "contact", witness from the failing axiom), then
/// LC1, LC2, LC3 in that order with the lexicographically first counterexample.
LawVerdict check_lca_axioms(const LocalContactAlgebra& lca);

/// All pairs (a, c) of bounded elements with a << c, ascending.
std::vector<std::pair<Mask, Mask>> bounded_way_below_pairs(const LocalContactAlgebra& lca);

/// For all bounded a << c some d in D has a <= d <= c. On valid LCAs the
/// interpolating form (a << d << c) is evaluated as well and a disagreement is
/// reported as InternalInconsistency. Throws InputError if D has unbounded members.
bool is_dv_dense(const LocalContactAlgebra& lca, std::span<const Element> d);

/// An element map between two LCAs; `table[x]` is the image of mask x.
class LcaMorphismTable {
  public:
    LcaMorphismTable(LocalContactAlgebra source, LocalContactAlgebra target, std::vector<Mask> table);

    static LcaMorphismTable identity(const LocalContactAlgebra& lca);
    /// Table extended by joins from the given atom images.
    static LcaMorphismTable from_atom_images(const LocalContactAlgebra& source,
                                             const LocalContactAlgebra& target,
                                             std::span<const Mask> atom_images);

    const LocalContactAlgebra& source() const { return source_; }
    const LocalContactAlgebra& target() const { return target_; }
    const std::vector<Mask>& table() const { return table_; }
    Mask operator()(Mask x) const { return table_[x]; }

    BooleanHomomorphism as_homomorphism() const;

    /// Same source and target algebras and identical tables.
    friend bool operator==(const LcaMorphismTable& a, const LcaMorphismTable& b) {
        return a.source_.algebra() == b.source_.algebra() && a.target_.algebra() == b.target_.algebra() &&
               a.table_ == b.table_;
    }

  private:
    LocalContactAlgebra source_;
    LocalContactAlgebra target_;
    std::vector<Mask> table_;
};

struct EmbeddingReport {
    bool contact_preserved = true;
    bool contact_reflected = true;
    bool bounded_preserved = true;
    bool bounded_reflected = true;
    bool injective = true;
    /// First failing condition and its elements; empty when all hold.
    std::string failure;
    std::vector<Element> witness;

    bool is_embedding() const {
        return contact_preserved && contact_reflected && bounded_preserved && bounded_reflected;
    }
};

/// Throws InputError unless the table is a Boolean homomorphism.
EmbeddingReport check_lca_embedding(const LcaMorphismTable& t);

/// ψ̌(a) = ⋁{ψ(b) : b bounded, b << a}, the empty join being 0.
LcaMorphismTable lower_sharp(const LcaMorphismTable& t);

/// DLC1 .. DLC5 in order; the first failure is reported.
LawVerdict check_dhlc_morphism(const LcaMorphismTable& t);

/// (t2 ∘ t1) followed by lower_sharp. Defined for any tables; the category
/// laws are only claimed for DHLC morphisms.
LcaMorphismTable compose_diamond(const LcaMorphismTable& t2, const LcaMorphismTable& t1);

/// Every table that is the join extension of some choice of atom images and
/// passes check_dhlc_morphism. Exponential: (target size)^(source atoms).
std::vector<LcaMorphismTable> atom_determined_dhlc_morphisms(const LocalContactAlgebra& source,
                                                             const LocalContactAlgebra& target);

struct ProductLca {
    LocalContactAlgebra product;
    std::vector<LcaMorphismTable> projections;
};

/// Atoms of the product are the factor atoms concatenated in order; contact
/// holds when it holds in some coordinate; the bounded top is the join of the
/// factor tops.
ProductLca product_lca(const std::vector<LocalContactAlgebra>& factors);

struct RelativeLca {
    RelativeAlgebra relative;
    LocalContactAlgebra lca;
};

/// ⟨B_m, ρ restricted, {b ∧ m : b bounded}⟩. Throws InputError for m = 0.
RelativeLca relative_lca(const LocalContactAlgebra& lca, Mask m);

struct Completion {
    LcaMorphismTable embedding;
    EmbeddingReport embedding_report;
    bool image_dv_dense = false;

    bool holds() const { return embedding_report.is_embedding() && image_dv_dense; }
};

/// A finite LCA is complete, so the identity is its completion; both laws are
/// re-verified. Throws InputError for invalid LCAs.
Completion identity_completion(const LocalContactAlgebra& lca);

} // namespace bca
