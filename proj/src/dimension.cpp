#include "bca/dimension.hpp"

#include <algorithm>
#include <map>

#include "bca/errors.hpp"

namespace bca {

DimensionQuery DimensionQuery::full(const ContactStructure& ca, int n_cap) {
    if (ca.algebra().size() > kMaxDimensionSetSize)
        throw InputError("dimension search is limited to " + std::to_string(kMaxDimensionSetSize) + " elements");
    std::vector<Mask> d(ca.algebra().size());
    for (Mask m = 0; m < d.size(); ++m) d[m] = m;
    return {ca, std::move(d), n_cap};
}

DimensionQuery DimensionQuery::over(const ContactStructure& ca, std::span<const Element> d, int n_cap) {
    std::vector<Mask> ms = masks_of(ca.algebra(), d);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    if (!std::binary_search(ms.begin(), ms.end(), Mask{0}) ||
        !std::binary_search(ms.begin(), ms.end(), ca.algebra().universe()))
        throw InputError("D must contain 0 and 1");
    if (ms.size() > kMaxDimensionSetSize)
        throw InputError("dimension search is limited to " + std::to_string(kMaxDimensionSetSize) + " elements");
    return {ca, std::move(ms), n_cap};
}

namespace {

class WitnessSearch {
  public:
    WitnessSearch(const ContactStructure& ca, const std::vector<Mask>& d)
        : d_(d), top_(ca.algebra().universe()), n_(d.size()), below_(n_), reach_(n_, 0), cover_(n_), refine_(n_) {
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < n_; ++i)
                if (ca.way_below(d_[i], d_[j])) {
                    below_[j].push_back(i);
                    reach_[j] |= d_[i];
                }
        // Only the inclusion-maximal members of below[j] matter for covering.
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i : below_[j]) {
                bool dominated = std::any_of(below_[j].begin(), below_[j].end(), [&](std::size_t o) {
                    return d_[o] != d_[i] && is_subset(d_[i], d_[o]);
                });
                if (!dominated) cover_[j].push_back(d_[i]);
            }
        }
        // d dominates d' as a refinement choice if d <= d' and below(d) ⊇ below(d').
        for (std::size_t j = 0; j < n_; ++j) {
            for (std::size_t i : below_[j]) {
                bool dominated = std::any_of(below_[j].begin(), below_[j].end(), [&](std::size_t o) {
                    return o != i && is_subset(d_[o], d_[i]) && contains_all(below_[o], below_[i]) &&
                           (d_[o] != d_[i] || below_[o] != below_[i] || o < i);
                });
                if (!dominated) refine_[j].push_back(i);
            }
            std::stable_sort(refine_[j].begin(), refine_[j].end(),
                             [&](std::size_t x, std::size_t y) { return popcount(d_[x]) < popcount(d_[y]); });
        }
    }

    std::size_t size() const { return n_; }
    const std::vector<std::size_t>& below(std::size_t j) const { return below_[j]; }

    /// Indices grouped by their below-set; each class represented by its
    /// smallest index, in ascending order.
    std::vector<std::size_t> class_representatives() const {
        std::map<std::vector<std::size_t>, std::size_t> seen;
        std::vector<std::size_t> reps;
        for (std::size_t j = 0; j < n_; ++j)
            if (seen.emplace(below_[j], j).second) reps.push_back(j);
        return reps;
    }

    /// Some b_i << a_i has join 1.
    bool coverable(const std::vector<std::size_t>& a) const {
        std::vector<Mask> suffix(a.size() + 1, 0);
        for (std::size_t i = a.size(); i-- > 0;) suffix[i] = suffix[i + 1] | reach_[a[i]];
        if (suffix[0] != top_) return false;
        return cover_dfs(a, suffix, 0, 0);
    }

    /// Some d_i << a_i and c_i << d_i have ⋁c = 1 and ⋀d = 0.
    bool refinable(const std::vector<std::size_t>& a) const {
        std::vector<Mask> suffix(a.size() + 1, 0);
        for (std::size_t i = a.size(); i-- > 0;) {
            Mask r = 0;
            for (std::size_t x : refine_[a[i]]) r |= reach_[x];
            suffix[i] = suffix[i + 1] | r;
        }
        if (suffix[0] != top_) return false;
        std::vector<std::size_t> chosen(a.size());
        return refine_dfs(a, suffix, chosen, 0, top_, 0);
    }

    /// Lexicographically first b with b_i << a_i and join 1; `a` must be coverable.
    std::vector<std::size_t> first_cover(const std::vector<std::size_t>& a) const {
        std::vector<Mask> suffix(a.size() + 1, 0);
        for (std::size_t i = a.size(); i-- > 0;) suffix[i] = suffix[i + 1] | reach_[a[i]];
        std::vector<std::size_t> b(a.size());
        if (!first_cover_dfs(a, suffix, b, 0, 0)) throw InternalInconsistency("cover vanished");
        return b;
    }

  private:
    static bool contains_all(const std::vector<std::size_t>& big, const std::vector<std::size_t>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    }

    bool cover_dfs(const std::vector<std::size_t>& a, const std::vector<Mask>& suffix, std::size_t i,
                   Mask acc) const {
        if (acc == top_) return true;
        if (i == a.size()) return false;
        if ((acc | suffix[i]) != top_) return false;
        bool tried_idle = false;
        for (Mask x : cover_[a[i]]) {
            if (is_subset(x, acc)) {
                if (tried_idle) continue;
                tried_idle = true;
            }
            if (cover_dfs(a, suffix, i + 1, acc | x)) return true;
        }
        return false;
    }

    bool refine_dfs(const std::vector<std::size_t>& a, const std::vector<Mask>& suffix,
                    std::vector<std::size_t>& chosen, std::size_t i, Mask meet, Mask reach) const {
        if ((reach | suffix[i]) != top_) return false;
        if (i == a.size()) return meet == 0 && coverable(chosen);
        for (std::size_t x : refine_[a[i]]) {
            chosen[i] = x;
            if (refine_dfs(a, suffix, chosen, i + 1, meet & d_[x], reach | reach_[x])) return true;
        }
        return false;
    }

    bool first_cover_dfs(const std::vector<std::size_t>& a, const std::vector<Mask>& suffix,
                         std::vector<std::size_t>& b, std::size_t i, Mask acc) const {
        if (i == a.size()) return acc == top_;
        if ((acc | suffix[i]) != top_) return false;
        for (std::size_t x : below_[a[i]]) {
            b[i] = x;
            if (first_cover_dfs(a, suffix, b, i + 1, acc | d_[x])) return true;
        }
        return false;
    }

    const std::vector<Mask>& d_;
    Mask top_;
    std::size_t n_;
    std::vector<std::vector<std::size_t>> below_;
    std::vector<Mask> reach_;
    std::vector<std::vector<Mask>> cover_;
    std::vector<std::vector<std::size_t>> refine_;
};

} // namespace

DimVerdict dim_leq(const DimensionQuery& q, int n) {
    if (n < -1) throw InputError("dimension bound must be at least -1");
    const auto& alg = q.ca.algebra();
    if (n == -1) return {alg.is_degenerate(), {}, {}};
    WitnessSearch search(q.ca, q.d);
    const auto reps = search.class_representatives();
    const std::size_t m = static_cast<std::size_t>(n) + 2;
    // Both conditions are invariant under permuting indices and depend on a_i
    // only through {x : x << a_i}, so sorted tuples of class representatives
    // suffice; the first failing one is also the lexicographically first
    // failing tuple over all of D^m.
    std::vector<std::size_t> pos(m, 0);
    std::vector<std::size_t> a(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) a[i] = reps[pos[i]];
        if (search.coverable(a) && !search.refinable(a)) {
            std::vector<std::size_t> b = search.first_cover(a);
            DimVerdict v{false, {}, {}};
            for (std::size_t i = 0; i < m; ++i) {
                v.a.push_back(alg.element(q.d[a[i]]));
                v.b.push_back(alg.element(q.d[b[i]]));
            }
            return v;
        }
        std::size_t i = m;
        while (i > 0 && pos[i - 1] + 1 == reps.size()) --i;
        if (i == 0) break;
        ++pos[i - 1];
        for (std::size_t j = i; j < m; ++j) pos[j] = pos[i - 1];
    }
    return {};
}

std::string DimResult::to_string() const {
    return value ? std::to_string(*value) : "> " + std::to_string(n_cap);
}

DimResult dim_a(const DimensionQuery& q) {
    if (q.n_cap < -1) throw InputError("n_cap must be at least -1");
    DimResult r;
    r.n_cap = q.n_cap;
    for (int n = -1; n <= q.n_cap; ++n) {
        bool holds = dim_leq(q, n).holds;
        r.verdicts.push_back(holds);
        if (holds && !r.value) r.value = n;
    }
    for (int n = -1; n <= q.n_cap; ++n)
        for (int n2 = n + 1; n2 <= q.n_cap; ++n2)
            if (r.verdicts[n + 1] && !r.verdicts[n2 + 1]) r.non_monotone.emplace_back(n, n2);
    return r;
}

DimResult dim_a(const LocalContactAlgebra& lca, int n_cap, LcaDimensionMode mode) {
    if (mode == LcaDimensionMode::all_elements) return dim_a(DimensionQuery::full(lca.ca(), n_cap));
    std::vector<Element> d;
    for (Mask b = 0; b <= lca.universe(); ++b)
        if (lca.is_bounded(b) || b == lca.universe()) d.push_back(lca.algebra().element(b));
    return dim_a(DimensionQuery::over(lca.ca(), d, n_cap));
}

bool is_DV_dense(const ContactStructure& ca, std::span<const Element> d) {
    std::vector<Mask> ms = masks_of(ca.algebra(), d);
    const Mask top = ca.algebra().universe();
    for (Mask a = 0; a <= top; ++a)
        for (Mask b = 0; b <= top; ++b) {
            if (!ca.way_below(a, b)) continue;
            bool found = std::any_of(ms.begin(), ms.end(),
                                     [&](Mask c) { return ca.way_below(a, c) && ca.way_below(c, b); });
            if (!found) return false;
        }
    return true;
}

DvInvarianceResult check_lemma_dv_invariance(const ContactStructure& ca, std::span<const Element> d,
                                             int n_cap) {
    if (!is_DV_dense(ca, d)) throw InputError("D is not DV-dense");
    DvInvarianceResult r;
    r.over_d = dim_a(DimensionQuery::over(ca, d, n_cap));
    r.over_all = dim_a(DimensionQuery::full(ca, n_cap));
    r.equal = r.over_d.value == r.over_all.value;
    return r;
}

RelativeMonotonicityResult check_relative_monotonicity(const LocalContactAlgebra& lca, Mask m, int n_cap) {
    if (m == 0) throw InputError("relative dimension needs a nonzero element");
    if (!lca.is_valid()) throw InputError("relative monotonicity requires a valid LCA (" + lca.verdict().law + " fails)");
    RelativeMonotonicityResult r;
    r.ambient = dim_a(lca, n_cap);
    r.relative = dim_a(relative_lca(lca, m).lca, n_cap);
    if (!r.ambient.value) {
        r.vacuous = true;
        r.holds = true;
    } else {
        r.holds = r.relative.value && *r.relative.value <= *r.ambient.value;
    }
    return r;
}

} // namespace bca
