#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bca/lca.hpp"
#include "bca/topology.hpp"

namespace bca {

/// Parsed algebra file:
///
///     atoms: 3
///     contact: 0 1
///     contact: 1 0
///     bounded: {0,1}
///
/// A bare `contact:` line may instead be followed by lines holding one pair
/// each. `#` starts a comment. Pairs are taken literally; no closure applied.
struct AlgebraText {
    int atoms = 0;
    std::vector<std::pair<int, int>> contact;
    std::optional<Mask> bounded;
};

/// Errors carry the 1-based line number.
AlgebraText parse_algebra_text(std::string_view text, int atom_cap = kDefaultAtomCap);

/// With `close_rs` the pairs are closed under reflexivity and symmetry.
LocalContactAlgebra build_lca(const AlgebraText& parsed, bool close_rs = false, int atom_cap = kDefaultAtomCap);

/// Canonical form: atom count, every related pair in ascending order, bounded top.
std::string emit_algebra(const LocalContactAlgebra& lca);

/// Parsed space file:
///
///     points: 3
///     open: {0}
///     open: {0,1}
///
/// ∅ and the whole space may be omitted.
FiniteSpace parse_space_text(std::string_view text, int point_cap = kDefaultPointCap);
std::string emit_space(const FiniteSpace& space);

/// `map: 0 0 1` gives the image of each source point in order.
std::vector<int> parse_map_text(std::string_view text);

/// Whole file contents; InputError if it cannot be read.
std::string read_text_file(const std::string& path);

} // namespace bca
