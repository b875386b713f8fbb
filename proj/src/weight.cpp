#include "bca/weight.hpp"

#include <algorithm>

#include "bca/errors.hpp"
#include "bca/hitting_set.hpp"

namespace bca {

bool is_base(const LocalContactAlgebra& lca, std::span<const Element> d) { return is_dv_dense(lca, d); }

namespace {

/// Minimum dV-dense subset of `candidates` (ascending bounded masks).
std::optional<std::vector<Mask>> min_base_among(const LocalContactAlgebra& lca,
                                                const std::vector<Mask>& candidates) {
    if (lca.atom_count() > kBaseSearchAtomCap)
        throw InputError("base search is limited to " + std::to_string(kBaseSearchAtomCap) + " atoms");
    HittingSetProblem problem(static_cast<std::uint32_t>(candidates.size()));
    for (auto [a, c] : bounded_way_below_pairs(lca)) {
        std::vector<std::uint32_t> interval;
        for (std::uint32_t i = 0; i < candidates.size(); ++i)
            if (is_subset(a, candidates[i]) && is_subset(candidates[i], c)) interval.push_back(i);
        problem.add_constraint(std::move(interval));
    }
    auto solution = problem.solve();
    if (!solution) return std::nullopt;
    std::vector<Mask> out;
    for (auto i : *solution) out.push_back(candidates[i]);
    return out;
}

std::vector<Mask> bounded_masks(const LocalContactAlgebra& lca) {
    std::vector<Mask> out;
    for (Mask b = 0; b <= lca.universe(); ++b)
        if (lca.is_bounded(b)) out.push_back(b);
    return out;
}

} // namespace

BaseResult minimum_base(const LocalContactAlgebra& lca) {
    auto solution = min_base_among(lca, bounded_masks(lca));
    if (!solution) throw InternalInconsistency("the bounded ideal is not a base of itself");
    return {solution->size(), elements_of(lca.algebra(), *solution)};
}

BaseResult weight_w_a(const LocalContactAlgebra& lca) {
    if (!lca.is_valid()) throw InputError("w_a requires a valid LCA (" + lca.verdict().law + " fails)");
    return minimum_base(lca);
}

DenseSetResult pi_weight_a(const FiniteBooleanAlgebra& algebra) { return min_dense_cardinality(algebra); }

DenseSetResult pi_weight_a(const LocalContactAlgebra& lca) {
    DenseSetResult r = min_dense_cardinality(lca.algebra());
    if (lca.is_valid() && r.cardinality > weight_w_a(lca).cardinality)
        throw InternalInconsistency("pi-weight exceeds weight on a valid LCA");
    return r;
}

std::vector<Element> s_part(const ContactStructure& ca) {
    std::vector<Element> out;
    for (Mask a = 0; a <= ca.algebra().universe(); ++a)
        if (ca.way_below(a, a)) out.push_back(ca.algebra().element(a));
    return out;
}

bool zero_dim_criterion(const LocalContactAlgebra& lca) {
    if (!lca.is_valid()) throw InputError("the criterion requires a valid LCA (" + lca.verdict().law + " fails)");
    std::vector<Element> candidates;
    for (const auto& e : s_part(lca.ca()))
        if (lca.is_bounded(e.atoms)) candidates.push_back(e);
    return is_base(lca, candidates);
}

SubalgebraContact rho_from_subalgebra(const Subalgebra& a0) {
    const auto& alg = a0.parent();
    const Mask top = alg.universe();
    const auto& members = a0.masks();
    auto interpolates = [&](Mask a, Mask b) {
        return std::any_of(members.begin(), members.end(),
                           [&](Mask c) { return is_subset(a, c) && is_subset(c, b); });
    };
    // p C q iff not {p} << {q}*.
    std::vector<Mask> rows(alg.atom_count(), 0);
    for (int p = 0; p < alg.atom_count(); ++p)
        for (int q = 0; q < alg.atom_count(); ++q)
            if (!interpolates(Mask{1} << p, top & ~(Mask{1} << q))) rows[p] |= Mask{1} << q;
    ContactStructure ca(alg, std::move(rows));
    for (Mask a = 0; a <= top; ++a)
        for (Mask b = 0; b <= top; ++b)
            if (ca.way_below(a, b) != interpolates(a, b))
                throw InternalInconsistency("interpolation relation is not additive at " + format_atoms(a) + ", " +
                                            format_atoms(b));
    SubalgebraContact r{ca, {}, false, false, false, false};
    for (Axiom axiom : kAllAxioms)
        if (axiom >= Axiom::LL1) r.way_below_axioms.push_back(ca.verdict(axiom));
    std::vector<Mask> s;
    for (const auto& e : s_part(ca)) s.push_back(e.atoms);
    r.s_part_is_a0 = s == members;
    BaseResult base = minimum_base(LocalContactAlgebra(ca));
    r.a0_is_minimum_base = masks_of(alg, base.witness) == members;
    r.a0_dense = is_dense_subset(alg, a0.members());
    r.normal = ca.satisfies(Bundle::normal);
    if (r.a0_dense && !r.normal) throw InternalInconsistency("dense subalgebra gave a non-normal contact");
    if (!r.a0_dense && ca.verdict(Axiom::LL6).holds)
        throw InternalInconsistency("non-dense subalgebra gave a relation satisfying LL6");
    return r;
}

std::vector<Element> minimal_base_within(const LocalContactAlgebra& lca, std::span<const Element> d) {
    if (!is_base(lca, d)) throw InputError("the given set is not a base");
    std::vector<Mask> given = masks_of(lca.algebra(), d);
    // Join closure, starting from the empty join.
    std::vector<Mask> closure{0};
    std::vector<char> seen(lca.algebra().size(), 0);
    seen[0] = 1;
    for (Mask g : given) {
        const std::size_t n = closure.size();
        for (std::size_t i = 0; i < n; ++i) {
            Mask j = closure[i] | g;
            if (!seen[j]) {
                seen[j] = 1;
                closure.push_back(j);
            }
        }
    }
    std::sort(closure.begin(), closure.end());
    auto solution = min_base_among(lca, closure);
    if (!solution) throw InternalInconsistency("join closure of a base is not a base");
    if (lca.is_valid() && solution->size() != weight_w_a(lca).cardinality)
        throw InternalInconsistency("minimal base within the join closure is larger than w_a");
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    auto in_given = [&](Mask m) { return m == 0 || std::binary_search(given.begin(), given.end(), m); };
    if (std::all_of(closure.begin(), closure.end(), in_given) && !std::all_of(solution->begin(), solution->end(), in_given))
        throw InternalInconsistency("minimal base left a join-closed base");
    return elements_of(lca.algebra(), *solution);
}

} // namespace bca
