#include "bca/topology.hpp"

#include <algorithm>

#include "bca/errors.hpp"
#include "bca/hitting_set.hpp"

namespace bca {

namespace {

constexpr int kEnumerationPointCap = 4;
constexpr std::size_t kAllCoversOpenCap = 16;

std::string show_points(Mask m) { return format_atoms(m); }

/// Minimal nonempty members of `family`.
std::vector<Mask> minimal_nonempty(const std::vector<Mask>& family) {
    std::vector<Mask> out;
    for (Mask f : family) {
        if (f == 0) continue;
        bool minimal = std::none_of(family.begin(), family.end(),
                                    [&](Mask g) { return g != 0 && g != f && is_subset(g, f); });
        if (minimal) out.push_back(f);
    }
    return out;
}

std::vector<Mask> sorted_unique(std::vector<Mask> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

// ---------------------------------------------------------------------------
// Spaces

FiniteSpace::FiniteSpace(int point_count, std::vector<Mask> opens, int point_cap) : points_(point_count) {
    if (point_count < 0) throw InputError("negative point count");
    if (point_count > point_cap)
        throw InputError("point count " + std::to_string(point_count) + " exceeds cap " + std::to_string(point_cap));
    const Mask top = universe();
    for (Mask u : opens)
        if (!is_subset(u, top)) throw InputError("open set " + show_points(u) + " has points outside the space");
    opens.push_back(0);
    opens.push_back(top);
    opens_ = sorted_unique(std::move(opens));
    for (Mask u : opens_)
        for (Mask v : opens_) {
            if (!is_open(u | v))
                throw InputError("opens not closed under union: " + show_points(u) + " ∪ " + show_points(v));
            if (!is_open(u & v))
                throw InputError("opens not closed under intersection: " + show_points(u) + " ∩ " + show_points(v));
        }
}

FiniteSpace FiniteSpace::discrete(int point_count) {
    std::vector<Mask> opens;
    for (Mask m = 0; m <= low_bits(std::min(point_count, kDefaultPointCap)); ++m) opens.push_back(m);
    return FiniteSpace(point_count, std::move(opens));
}

FiniteSpace FiniteSpace::indiscrete(int point_count) { return FiniteSpace(point_count, {}); }

bool FiniteSpace::is_open(Mask s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

void FiniteSpace::require_subset(Mask s) const {
    if (!is_subset(s, universe())) throw InputError("point set " + show_points(s) + " outside the space");
}

Mask FiniteSpace::interior(Mask s) const {
    require_subset(s);
    Mask out = 0;
    for (Mask u : opens_)
        if (is_subset(u, s)) out |= u;
    return out;
}

Mask FiniteSpace::closure(Mask s) const {
    require_subset(s);
    return universe() & ~interior(universe() & ~s);
}

bool FiniteSpace::is_t1() const {
    for (int x = 0; x < points_; ++x)
        if (!is_closed(Mask{1} << x)) return false;
    return true;
}

std::vector<FiniteSpace> enumerate_topologies(int point_count) {
    if (point_count < 0 || point_count > kEnumerationPointCap)
        throw InputError("topology enumeration is limited to " + std::to_string(kEnumerationPointCap) + " points");
    const Mask top = low_bits(point_count);
    std::vector<Mask> middle;
    for (Mask m = 1; m < top; ++m) middle.push_back(m);
    std::vector<FiniteSpace> out;
    const std::uint64_t families = std::uint64_t{1} << middle.size();
    for (std::uint64_t pick = 0; pick < families; ++pick) {
        std::vector<char> in(top + 1, 0);
        in[0] = in[top] = 1;
        std::vector<Mask> opens{0};
        for (std::size_t i = 0; i < middle.size(); ++i)
            if ((pick >> i) & 1) {
                in[middle[i]] = 1;
                opens.push_back(middle[i]);
            }
        if (top != 0) opens.push_back(top);
        bool closed = true;
        for (std::size_t i = 0; i < opens.size() && closed; ++i)
            for (std::size_t j = i + 1; j < opens.size() && closed; ++j)
                closed = in[opens[i] | opens[j]] && in[opens[i] & opens[j]];
        if (closed) out.emplace_back(point_count, std::move(opens));
    }
    return out;
}

ContinuousMap::ContinuousMap(FiniteSpace source, FiniteSpace target, std::vector<int> point_map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(point_map)) {
    if (static_cast<int>(map_.size()) != source_.point_count()) throw InputError("point map must be total");
    for (int y : map_)
        if (y < 0 || y >= target_.point_count()) throw InputError("point map leaves the target space");
    for (Mask v : target_.opens())
        if (!source_.is_open(preimage(v)))
            throw InputError("map is not continuous: preimage of open " + show_points(v) + " is " +
                             show_points(preimage(v)));
}

ContinuousMap ContinuousMap::identity(const FiniteSpace& space) {
    std::vector<int> map(space.point_count());
    for (int x = 0; x < space.point_count(); ++x) map[x] = x;
    return ContinuousMap(space, space, std::move(map));
}

Mask ContinuousMap::preimage(Mask s) const {
    Mask out = 0;
    for (int x = 0; x < source_.point_count(); ++x)
        if ((s >> map_[x]) & 1) out |= Mask{1} << x;
    return out;
}

Mask ContinuousMap::image(Mask s) const {
    Mask out = 0;
    for (int x = 0; x < source_.point_count(); ++x)
        if ((s >> x) & 1) out |= Mask{1} << map_[x];
    return out;
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
    if (!(f.target() == g.source())) throw InputError("cannot compose maps: spaces do not match");
    std::vector<int> map(f.source().point_count());
    for (std::size_t x = 0; x < map.size(); ++x) map[x] = g.point_map()[f.point_map()[x]];
    return ContinuousMap(f.source(), g.target(), std::move(map));
}

// ---------------------------------------------------------------------------
// Families and covers

int ord(std::span<const Mask> family) {
    if (family.empty()) throw InputError("order of an empty family is undefined");
    int best = 0;
    for (int x = 0; x < 64; ++x) {
        int count = 0;
        for (Mask f : family) count += (f >> x) & 1;
        best = std::max(best, count);
    }
    return best - 1;
}

bool is_cover(const FiniteSpace& space, std::span<const Mask> family) {
    Mask u = 0;
    for (Mask f : family) u |= f;
    return u == space.universe();
}

bool is_shrinking(const FiniteSpace& space, std::span<const Mask> coarse, std::span<const Mask> fine) {
    if (coarse.size() != fine.size()) throw InputError("shrinking needs families indexed alike");
    if (!is_cover(space, fine)) return false;
    for (std::size_t i = 0; i < fine.size(); ++i)
        if (!is_subset(fine[i], coarse[i])) return false;
    return true;
}

namespace {

/// First nonempty position set whose intersections differ in emptiness.
std::optional<std::vector<int>> swelling_violation(std::span<const Mask> coarse, std::span<const Mask> fine) {
    if (coarse.size() > 20) throw InputError("swelling check is limited to 20 members");
    const std::uint32_t n = static_cast<std::uint32_t>(coarse.size());
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << n); ++pick) {
        Mask a = ~Mask{0};
        Mask b = ~Mask{0};
        for (std::uint32_t i = 0; i < n; ++i)
            if ((pick >> i) & 1) {
                a &= coarse[i];
                b &= fine[i];
            }
        if ((a == 0) != (b == 0)) {
            std::vector<int> positions;
            for (std::uint32_t i = 0; i < n; ++i)
                if ((pick >> i) & 1) positions.push_back(static_cast<int>(i));
            return positions;
        }
    }
    return std::nullopt;
}

} // namespace

bool is_swelling(const FiniteSpace& space, std::span<const Mask> coarse, std::span<const Mask> fine) {
    if (coarse.size() != fine.size()) throw InputError("swelling needs families indexed alike");
    for (std::size_t i = 0; i < fine.size(); ++i) {
        if (!is_subset(coarse[i], space.universe()) || !is_subset(fine[i], space.universe()))
            throw InputError("family member outside the space");
        if (!is_subset(coarse[i], fine[i])) return false;
    }
    return !swelling_violation(coarse, fine);
}

CoverReport cover_predicates(const FiniteSpace& space, std::span<const Mask> coarse, std::span<const Mask> fine) {
    CoverReport r;
    r.is_cover = is_cover(space, fine);
    r.is_refinement = r.is_cover && is_cover(space, coarse) &&
                      std::all_of(fine.begin(), fine.end(), [&](Mask b) {
                          return std::any_of(coarse.begin(), coarse.end(), [&](Mask a) { return is_subset(b, a); });
                      });
    if (coarse.size() == fine.size()) {
        r.is_shrinking = is_shrinking(space, coarse, fine);
        bool contained = true;
        for (std::size_t i = 0; i < fine.size(); ++i) contained = contained && is_subset(coarse[i], fine[i]);
        auto violation = swelling_violation(coarse, fine);
        r.is_swelling = contained && !violation;
        if (violation) r.swelling_witness = *violation;
    }
    return r;
}

std::vector<std::vector<Mask>> irredundant_open_covers(const FiniteSpace& space) {
    std::vector<Mask> candidates;
    for (Mask u : space.opens())
        if (u != 0) candidates.push_back(u);
    const Mask top = space.universe();
    std::vector<std::vector<Mask>> out;
    std::vector<Mask> chosen;
    auto redundant = [&] {
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            Mask others = 0;
            for (std::size_t j = 0; j < chosen.size(); ++j)
                if (j != i) others |= chosen[j];
            if (is_subset(chosen[i], others)) return true;
        }
        return false;
    };
    // Members only become more redundant as others are added, so a redundant
    // partial family is never extended.
    auto dfs = [&](auto&& self, std::size_t start, Mask covered) -> void {
        if (covered == top) {
            out.push_back(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) == space.point_count()) return;
        for (std::size_t i = start; i < candidates.size(); ++i) {
            if (is_subset(candidates[i], covered)) continue;
            chosen.push_back(candidates[i]);
            if (!redundant()) self(self, i + 1, covered | candidates[i]);
            chosen.pop_back();
        }
    };
    if (top != 0) dfs(dfs, 0, 0);
    return out;
}

bool has_open_refinement_of_order(const FiniteSpace& space, std::span<const Mask> cover, int n) {
    const Mask top = space.universe();
    if (top == 0) return true;
    if (n < 0) return false;
    std::vector<Mask> candidates;
    for (Mask w : space.opens())
        if (w != 0 && std::any_of(cover.begin(), cover.end(), [&](Mask u) { return is_subset(w, u); }))
            candidates.push_back(w);
    std::vector<int> multiplicity(space.point_count(), 0);
    std::vector<char> used(candidates.size(), 0);
    // Any refinement of order <= n contains, for each point in turn, a member
    // through the first uncovered point; choosing those members gives a
    // subfamily that still covers and has no larger order.
    auto dfs = [&](auto&& self, Mask covered) -> bool {
        if (covered == top) return true;
        const int x = std::countr_zero(top & ~covered);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const Mask w = candidates[i];
            if (used[i] || !((w >> x) & 1)) continue;
            bool ok = true;
            for (Mask s = w; s != 0 && ok; s &= s - 1) ok = multiplicity[std::countr_zero(s)] < n + 1;
            if (!ok) continue;
            used[i] = 1;
            for (Mask s = w; s != 0; s &= s - 1) ++multiplicity[std::countr_zero(s)];
            bool found = self(self, covered | w);
            for (Mask s = w; s != 0; s &= s - 1) --multiplicity[std::countr_zero(s)];
            used[i] = 0;
            if (found) return true;
        }
        return false;
    };
    return dfs(dfs, 0);
}

std::optional<int> dim_cl(const FiniteSpace& space, int n_cap) {
    if (space.point_count() == 0) return -1;
    const auto covers = irredundant_open_covers(space);
    for (int n = 0; n <= n_cap; ++n) {
        bool all = std::all_of(covers.begin(), covers.end(),
                               [&](const std::vector<Mask>& c) { return has_open_refinement_of_order(space, c, n); });
        if (all) return n;
    }
    return std::nullopt;
}

std::optional<int> dim_cl_all_covers(const FiniteSpace& space, int n_cap) {
    if (space.point_count() == 0) return -1;
    std::vector<Mask> nonempty;
    for (Mask u : space.opens())
        if (u != 0) nonempty.push_back(u);
    if (nonempty.size() > kAllCoversOpenCap) throw InputError("too many opens for the unrestricted cover sweep");
    std::vector<std::vector<Mask>> covers;
    for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << nonempty.size()); ++pick) {
        std::vector<Mask> family;
        for (std::size_t i = 0; i < nonempty.size(); ++i)
            if ((pick >> i) & 1) family.push_back(nonempty[i]);
        if (is_cover(space, family)) covers.push_back(std::move(family));
    }
    for (int n = 0; n <= n_cap; ++n) {
        bool all = std::all_of(covers.begin(), covers.end(),
                               [&](const std::vector<Mask>& c) { return has_open_refinement_of_order(space, c, n); });
        if (all) return n;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Regular closed and regular open algebras

Mask RcAlgebra::set_of(const Element& e) const {
    lca.algebra().require(e);
    return element_sets[e.atoms];
}

Element RcAlgebra::element_of(Mask points) const {
    auto it = std::find(element_sets.begin(), element_sets.end(), points);
    if (it == element_sets.end()) throw InputError(show_points(points) + " is not regular closed");
    return lca.algebra().element(static_cast<Mask>(it - element_sets.begin()));
}

RcAlgebra rc_algebra(const FiniteSpace& space) {
    std::vector<Mask> rc;
    for (Mask u : space.opens()) rc.push_back(space.closure(u));
    rc = sorted_unique(std::move(rc));
    std::vector<Mask> atoms = minimal_nonempty(rc);
    const int k = static_cast<int>(atoms.size());
    FiniteBooleanAlgebra algebra(k, kDefaultPointCap);
    std::vector<Mask> sets(algebra.size(), 0);
    for (Mask x = 1; x <= algebra.universe(); ++x) sets[x] = sets[x & (x - 1)] | atoms[std::countr_zero(x)];
    if (sorted_unique(sets) != rc || sets.size() != rc.size()) throw InternalInconsistency("regular closed sets are not the joins of their atoms");
    std::vector<Mask> rows(k, 0);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            if (atoms[p] & atoms[q]) rows[p] |= Mask{1} << q;
    ContactStructure ca(algebra, std::move(rows));
    const Mask top = space.universe();
    for (Mask a = 0; a <= algebra.universe(); ++a)
        for (Mask b = 0; b <= algebra.universe(); ++b) {
            if (ca.contact(a, b) != ((sets[a] & sets[b]) != 0))
                throw InternalInconsistency("overlap contact is not additive on regular closed sets");
            if (sets[a & b] != space.closure(space.interior(sets[a] & sets[b])))
                throw InternalInconsistency("regular closed meet disagrees with cl(int(F ∩ G))");
        }
    for (Mask a = 0; a <= algebra.universe(); ++a)
        if (sets[algebra.universe() & ~a] != space.closure(top & ~sets[a]))
            throw InternalInconsistency("regular closed complement disagrees with cl(X \\ F)");
    LocalContactAlgebra lca(std::move(ca), algebra.universe());
    return RcAlgebra{space, std::move(lca), std::move(atoms), std::move(sets)};
}

Mask RoAlgebra::set_of(const Element& e) const {
    ca.algebra().require(e);
    return element_sets[e.atoms];
}

Element RoAlgebra::element_of(Mask points) const {
    auto it = std::find(element_sets.begin(), element_sets.end(), points);
    if (it == element_sets.end()) throw InputError(show_points(points) + " is not regular open");
    return ca.algebra().element(static_cast<Mask>(it - element_sets.begin()));
}

RoAlgebra ro_algebra(const RcAlgebra& rc) {
    const FiniteSpace& space = rc.space;
    std::vector<Mask> ro;
    for (Mask u : space.opens()) ro.push_back(space.interior(space.closure(u)));
    ro = sorted_unique(std::move(ro));
    std::vector<Mask> atoms = minimal_nonempty(ro);
    const int k = static_cast<int>(atoms.size());
    FiniteBooleanAlgebra algebra(k, kDefaultPointCap);
    std::vector<Mask> sets(algebra.size(), 0);
    for (Mask x = 1; x <= algebra.universe(); ++x) {
        Mask u = 0;
        for (Mask s = x; s != 0; s &= s - 1) u |= atoms[std::countr_zero(s)];
        sets[x] = space.interior(space.closure(u));
    }
    if (sorted_unique(sets) != ro || sets.size() != ro.size())
        throw InternalInconsistency("regular open sets are not the joins of their atoms");
    std::vector<Mask> rows(k, 0);
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q)
            if (space.closure(atoms[p]) & space.closure(atoms[q])) rows[p] |= Mask{1} << q;
    ContactStructure ca(algebra, std::move(rows));
    for (Mask a = 0; a <= algebra.universe(); ++a)
        for (Mask b = 0; b <= algebra.universe(); ++b)
            if (ca.contact(a, b) != ((space.closure(sets[a]) & space.closure(sets[b])) != 0))
                throw InternalInconsistency("closure-overlap contact is not additive on regular open sets");
    std::vector<Element> table;
    for (Mask a = 0; a <= algebra.universe(); ++a) table.push_back(rc.element_of(space.closure(sets[a])));
    BooleanHomomorphism nu(algebra, rc.lca.algebra(), std::move(table));
    if (!is_ca_isomorphism(nu, ca, rc.lca.ca())) throw InternalInconsistency("closure map RO(X) -> RC(X) is not a CA-isomorphism");
    return RoAlgebra{space, std::move(ca), std::move(atoms), std::move(sets), std::move(nu)};
}

RegularShrinkingReport regular_shrinking_dim_check(const FiniteSpace& space, int n) {
    if (n < -1) throw InputError("dimension bound must be at least -1");
    const Mask top = space.universe();
    std::vector<Mask> ro;
    std::vector<Mask> rc;
    for (Mask u : space.opens()) {
        ro.push_back(space.interior(space.closure(u)));
        rc.push_back(space.closure(u));
    }
    ro = sorted_unique(std::move(ro));
    rc = sorted_unique(std::move(rc));
    const std::size_t m = static_cast<std::size_t>(n) + 2;
    RegularShrinkingReport r{true, true, space.is_t1()};
    std::vector<std::size_t> pos(m, 0);
    std::vector<Mask> cover(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) cover[i] = ro[pos[i]];
        if (is_cover(space, cover)) {
            bool plain = false;
            bool with_interiors = false;
            auto dfs = [&](auto&& self, std::size_t i, Mask joined, Mask met, Mask interiors) -> void {
                if (with_interiors) return;
                if (i == m) {
                    if (joined == top && met == 0) {
                        plain = true;
                        if (interiors == top) with_interiors = true;
                    }
                    return;
                }
                for (Mask f : rc)
                    if (is_subset(f, cover[i])) self(self, i + 1, joined | f, met & f, interiors | space.interior(f));
            };
            dfs(dfs, 0, 0, top, 0);
            r.shrinking_predicate = r.shrinking_predicate && plain;
            r.interior_predicate = r.interior_predicate && with_interiors;
        }
        std::size_t i = m;
        while (i > 0 && pos[i - 1] + 1 == ro.size()) --i;
        if (i == 0) break;
        ++pos[i - 1];
        for (std::size_t j = i; j < m; ++j) pos[j] = pos[i - 1];
    }
    if (r.within_hypotheses) {
        auto d = dim_cl(space, std::max(n, 0));
        bool leq = d && *d <= n;
        if (leq != r.shrinking_predicate || leq != r.interior_predicate)
            throw InternalInconsistency("regular shrinking predicate disagrees with the covering dimension");
    }
    return r;
}

// ---------------------------------------------------------------------------
// Weight, π-weight, semiregularity

namespace {

SpaceWeight solve_over_opens(const std::vector<Mask>& candidates, const std::vector<std::vector<std::uint32_t>>& constraints) {
    HittingSetProblem problem(static_cast<std::uint32_t>(candidates.size()));
    for (const auto& c : constraints) problem.add_constraint(c);
    auto solution = problem.solve();
    if (!solution) throw InternalInconsistency("the open sets do not solve their own covering problem");
    SpaceWeight w;
    w.cardinality = solution->size();
    for (auto i : *solution) w.witness.push_back(candidates[i]);
    return w;
}

std::vector<Mask> nonempty_opens(const FiniteSpace& space) {
    std::vector<Mask> out;
    for (Mask u : space.opens())
        if (u != 0) out.push_back(u);
    return out;
}

} // namespace

SpaceWeight weight_of_space(const FiniteSpace& space) {
    const auto candidates = nonempty_opens(space);
    std::vector<std::vector<std::uint32_t>> constraints;
    for (Mask u : candidates)
        for (Mask s = u; s != 0; s &= s - 1) {
            const Mask x = s & -s;
            std::vector<std::uint32_t> c;
            for (std::uint32_t i = 0; i < candidates.size(); ++i)
                if ((candidates[i] & x) && is_subset(candidates[i], u)) c.push_back(i);
            constraints.push_back(std::move(c));
        }
    return solve_over_opens(candidates, constraints);
}

SpaceWeight pi_weight_of_space(const FiniteSpace& space) {
    const auto candidates = nonempty_opens(space);
    std::vector<std::vector<std::uint32_t>> constraints;
    for (Mask u : candidates) {
        std::vector<std::uint32_t> c;
        for (std::uint32_t i = 0; i < candidates.size(); ++i)
            if (is_subset(candidates[i], u)) c.push_back(i);
        constraints.push_back(std::move(c));
    }
    return solve_over_opens(candidates, constraints);
}

namespace {

std::vector<Mask> regular_opens(const FiniteSpace& space) {
    std::vector<Mask> ro;
    for (Mask u : space.opens()) ro.push_back(space.interior(space.closure(u)));
    return sorted_unique(std::move(ro));
}

} // namespace

bool is_semiregular(const FiniteSpace& space) {
    const auto ro = regular_opens(space);
    for (Mask u : space.opens())
        for (Mask s = u; s != 0; s &= s - 1) {
            const Mask x = s & -s;
            if (std::none_of(ro.begin(), ro.end(), [&](Mask v) { return (v & x) && is_subset(v, u); })) return false;
        }
    return true;
}

bool is_pi_semiregular(const FiniteSpace& space) {
    const auto ro = regular_opens(space);
    for (Mask u : space.opens()) {
        if (u == 0) continue;
        if (std::none_of(ro.begin(), ro.end(), [&](Mask v) { return v != 0 && is_subset(v, u); })) return false;
    }
    const std::size_t topological = pi_weight_of_space(space).cardinality;
    const std::size_t algebraic = min_dense_cardinality(rc_algebra(space).lca.algebra()).cardinality;
    if (topological != algebraic)
        throw InternalInconsistency("π-semiregular space whose π-weight differs from πw_a(RC(X))");
    return true;
}

// ---------------------------------------------------------------------------
// Maps, duality, connectedness

LcaMorphismTable lambda_t_map(const ContinuousMap& f, const RcAlgebra& source_rc, const RcAlgebra& target_rc) {
    if (!(source_rc.space == f.source()) || !(target_rc.space == f.target()))
        throw InputError("RC algebras were not built from the map's spaces");
    const FiniteSpace& x = f.source();
    const FiniteSpace& y = f.target();
    const auto& ty = target_rc.lca.algebra();
    std::vector<Mask> table;
    for (Mask g = 0; g <= ty.universe(); ++g) {
        Mask pulled = x.closure(f.preimage(y.interior(target_rc.element_sets[g])));
        table.push_back(source_rc.element_of(pulled).atoms);
    }
    LcaMorphismTable t(target_rc.lca, source_rc.lca, std::move(table));
    if (x.is_discrete() && y.is_discrete()) {
        if (auto v = check_dhlc_morphism(t); !v)
            throw InternalInconsistency("map between discrete spaces gave a non-DHLC table (" + v.law + ")");
    }
    return t;
}

CoAlgebra co_algebra(const FiniteSpace& space) {
    std::vector<Mask> clopen;
    for (Mask u : space.opens())
        if (space.is_closed(u)) clopen.push_back(u);
    std::vector<Mask> atoms = minimal_nonempty(clopen);
    FiniteBooleanAlgebra algebra(static_cast<int>(atoms.size()), kDefaultPointCap);
    if (algebra.size() != clopen.size()) throw InternalInconsistency("clopen sets are not the joins of their atoms");
    return {std::move(algebra), std::move(atoms)};
}

FiniteSpace stone_dual(const FiniteBooleanAlgebra& algebra) {
    FiniteSpace space = FiniteSpace::discrete(algebra.atom_count());
    if (co_algebra(space).algebra.atom_count() != algebra.atom_count())
        throw InternalInconsistency("clopen algebra of the dual space lost atoms");
    return space;
}

bool is_connected_space(const FiniteSpace& space) {
    bool connected = true;
    for (Mask u : space.opens())
        if (u != 0 && u != space.universe() && space.is_closed(u)) connected = false;
    if (connected != is_connected(rc_algebra(space).lca.ca()))
        throw InternalInconsistency("space connectedness disagrees with RC(X) connectedness");
    return connected;
}

} // namespace bca
