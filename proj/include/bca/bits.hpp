#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace bca {

/// Atom subset of a finite algebra, or point subset of a finite space.
using Mask = std::uint64_t;

inline constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }
inline constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline constexpr int popcount(Mask m) { return std::popcount(m); }

/// Packs the bits of `full` that lie under `support` into the low positions.
inline Mask extract_bits(Mask full, Mask support) {
    Mask out = 0;
    int pos = 0;
    for (Mask s = support; s != 0; s &= s - 1) {
        if (full & (s & -s)) out |= Mask{1} << pos;
        ++pos;
    }
    return out;
}

/// Inverse of extract_bits: spreads the low bits of `compact` over `support`.
inline Mask deposit_bits(Mask compact, Mask support) {
    Mask out = 0;
    int pos = 0;
    for (Mask s = support; s != 0; s &= s - 1) {
        if (compact & (Mask{1} << pos)) out |= s & -s;
        ++pos;
    }
    return out;
}

/// "{0,2,5}" style rendering; the empty set renders as "{}".
std::string format_atoms(Mask m);

/// Parses "{0,2,5}" (whitespace tolerant). Throws InputError on malformed text
/// or indices >= limit.
Mask parse_atoms(std::string_view text, int limit);

} // namespace bca
