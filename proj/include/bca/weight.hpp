#pragma once

#include <vector>

#include "bca/lca.hpp"

namespace bca {

/// Base searches enumerate bounded pairs a << c; above this many atoms they
/// are refused.
inline constexpr int kBaseSearchAtomCap = 10;

/// D is a base iff it is dV-dense. Throws InputError if D has unbounded members.
bool is_base(const LocalContactAlgebra& lca, std::span<const Element> d);

struct BaseResult {
    std::size_t cardinality = 0;
    /// Lexicographically smallest minimum base, ascending.
    std::vector<Element> witness;
};

/// Smallest dV-dense subset of the bounded elements, with no validity
/// requirement on the LCA. Elements a with a << a whose only interpolant is a
/// itself appear as single-candidate constraints and are fixed first.
BaseResult minimum_base(const LocalContactAlgebra& lca);

/// w_a: minimum_base of a valid LCA. Throws InputError if the LCA is invalid.
BaseResult weight_w_a(const LocalContactAlgebra& lca);

/// πw_a(B): smallest dense subset of B.
DenseSetResult pi_weight_a(const FiniteBooleanAlgebra& algebra);

/// πw_a of the algebra of `lca`; for valid LCAs also checks πw_a <= w_a and
/// raises InternalInconsistency if that fails.
DenseSetResult pi_weight_a(const LocalContactAlgebra& lca);

/// {a : a << a}, ascending.
std::vector<Element> s_part(const ContactStructure& ca);

/// s_part ∩ bounded elements is a base. Throws InputError if the LCA is invalid.
bool zero_dim_criterion(const LocalContactAlgebra& lca);

struct SubalgebraContact {
    /// Contact generated by a << b iff a <= c <= b for some c in A0.
    ContactStructure ca;
    /// LL1 .. LL7 with LL2' and LL4', in axiom order.
    std::vector<AxiomVerdict> way_below_axioms;
    bool s_part_is_a0 = false;
    bool a0_is_minimum_base = false;
    bool a0_dense = false;
    bool normal = false;
};

/// Builds the contact relation whose way-below relation is interpolation
/// through A0. The relation is additive (its atom relation is "same block of
/// A0's atom partition"), which is re-verified against the defining formula on
/// every pair. Raises InternalInconsistency if A0 is dense but the result is
/// not normal, or A0 is not dense but LL6 holds.
SubalgebraContact rho_from_subalgebra(const Subalgebra& a0);

/// A minimum base made of joins of members of D (the empty join included).
/// Throws InputError unless D is a base. On valid LCAs the size is checked
/// against w_a; when D is join-closed the result lies inside D.
std::vector<Element> minimal_base_within(const LocalContactAlgebra& lca, std::span<const Element> d);

} // namespace bca
