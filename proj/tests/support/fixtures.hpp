#pragma once

#include <vector>

#include "bca/contact.hpp"

namespace bca::testing {

/// Rows of the cycle relation on n atoms: p R q iff p = q or |p - q| ≡ 1 (mod n).
inline std::vector<Mask> cycle_rows(int n) {
    std::vector<Mask> rows(n);
    for (int p = 0; p < n; ++p)
        rows[p] = (Mask{1} << p) | (Mask{1} << ((p + 1) % n)) | (Mask{1} << ((p + n - 1) % n));
    return rows;
}

/// Rows of the path relation 0 - 1 - ... - (n-1), reflexive.
inline std::vector<Mask> path_rows(int n) {
    std::vector<Mask> rows(n);
    for (int p = 0; p < n; ++p) {
        rows[p] = Mask{1} << p;
        if (p > 0) rows[p] |= Mask{1} << (p - 1);
        if (p + 1 < n) rows[p] |= Mask{1} << (p + 1);
    }
    return rows;
}

inline ContactStructure cycle_algebra(int n) { return ContactStructure(FiniteBooleanAlgebra(n), cycle_rows(n)); }
inline ContactStructure path_algebra(int n) { return ContactStructure(FiniteBooleanAlgebra(n), path_rows(n)); }

inline Mask set(std::initializer_list<int> atoms) {
    Mask m = 0;
    for (int a : atoms) m |= Mask{1} << a;
    return m;
}

} // namespace bca::testing
