#pragma once

#include <string_view>
#include <vector>

#include "bca/bits.hpp"

namespace bca {

enum class RelationClass {
    /// Reflexive and symmetric: simple graphs on the atoms.
    reflexive_symmetric,
    /// Arbitrary binary relations on the atoms.
    all,
};

std::string_view relation_class_name(RelationClass cls);

/// One representative per isomorphism class of atom relations on `atoms`
/// atoms, as row masks. The representative is the relation whose row-major
/// bit encoding is smallest among all relabellings; representatives are
/// returned in ascending order of that encoding. Limited to 6 atoms for
/// graphs and 4 for arbitrary relations.
std::vector<std::vector<Mask>> enumerate_relations(int atoms, RelationClass cls);

/// Row-major encoding: bit p * atoms + q is set iff p R q.
std::uint64_t encode_relation(const std::vector<Mask>& rows);

/// Smallest encoding over all relabellings of the atoms.
std::uint64_t canonical_encoding(const std::vector<Mask>& rows);

} // namespace bca
