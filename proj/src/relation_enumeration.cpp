#include "bca/relation_enumeration.hpp"

#include <algorithm>
#include <numeric>

#include "bca/errors.hpp"

namespace bca {

std::string_view relation_class_name(RelationClass cls) {
    return cls == RelationClass::all ? "all" : "reflexive-symmetric";
}

std::uint64_t encode_relation(const std::vector<Mask>& rows) {
    const std::size_t k = rows.size();
    std::uint64_t code = 0;
    for (std::size_t p = 0; p < k; ++p) code |= static_cast<std::uint64_t>(rows[p]) << (p * k);
    return code;
}

namespace {

std::vector<Mask> relabel(const std::vector<Mask>& rows, const std::vector<int>& perm) {
    const std::size_t k = rows.size();
    std::vector<Mask> out(k, 0);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q)
            if ((rows[p] >> q) & 1) out[perm[p]] |= Mask{1} << perm[q];
    return out;
}

std::vector<Mask> decode(std::uint64_t code, int k) {
    std::vector<Mask> rows(k);
    for (int p = 0; p < k; ++p) rows[p] = (code >> (p * k)) & low_bits(k);
    return rows;
}

} // namespace

std::uint64_t canonical_encoding(const std::vector<Mask>& rows) {
    std::vector<int> perm(rows.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = encode_relation(rows);
    do {
        best = std::min(best, encode_relation(relabel(rows, perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<std::vector<Mask>> enumerate_relations(int atoms, RelationClass cls) {
    const int cap = cls == RelationClass::all ? 4 : 6;
    if (atoms < 0 || atoms > cap)
        throw InputError("relation enumeration for class " + std::string(relation_class_name(cls)) +
                         " is limited to " + std::to_string(cap) + " atoms");
    std::vector<std::uint64_t> codes;
    if (cls == RelationClass::all) {
        const std::uint64_t count = std::uint64_t{1} << (atoms * atoms);
        for (std::uint64_t code = 0; code < count; ++code)
            if (canonical_encoding(decode(code, atoms)) == code) codes.push_back(code);
    } else {
        std::vector<std::pair<int, int>> edges;
        for (int p = 0; p < atoms; ++p)
            for (int q = p + 1; q < atoms; ++q) edges.emplace_back(p, q);
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << edges.size()); ++pick) {
            std::vector<Mask> rows(atoms);
            for (int p = 0; p < atoms; ++p) rows[p] = Mask{1} << p;
            for (std::size_t e = 0; e < edges.size(); ++e)
                if ((pick >> e) & 1) {
                    rows[edges[e].first] |= Mask{1} << edges[e].second;
                    rows[edges[e].second] |= Mask{1} << edges[e].first;
                }
            const std::uint64_t code = encode_relation(rows);
            if (canonical_encoding(rows) == code) codes.push_back(code);
        }
        std::sort(codes.begin(), codes.end());
    }
    std::vector<std::vector<Mask>> out;
    for (std::uint64_t code : codes) out.push_back(decode(code, atoms));
    return out;
}

} // namespace bca
