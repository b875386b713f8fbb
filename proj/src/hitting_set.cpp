#include "bca/hitting_set.hpp"

#include <algorithm>
#include <limits>

#include "bca/errors.hpp"

namespace bca {

namespace {

using Words = std::vector<std::uint64_t>;

Words to_words(const std::vector<std::uint32_t>& members, std::uint32_t universe) {
    Words w((universe + 63) / 64, 0);
    for (auto e : members) w[e / 64] |= std::uint64_t{1} << (e % 64);
    return w;
}

bool words_subset(const Words& a, const Words& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// Branch-and-bound over the reduced constraint system. `lo` is the smallest
// universe index the completion may use; `banned` marks indices excluded by
// earlier sibling branches.
class Search {
  public:
    Search(std::vector<std::vector<std::uint32_t>> constraints, std::uint32_t universe)
        : cands_(std::move(constraints)), containing_(universe), hits_(cands_.size(), 0),
          banned_(universe, 0) {
        for (std::size_t c = 0; c < cands_.size(); ++c)
            for (auto e : cands_[c]) containing_[e].push_back(static_cast<std::uint32_t>(c));
    }

    void choose(std::uint32_t e) {
        for (auto c : containing_[e]) ++hits_[c];
    }
    void unchoose(std::uint32_t e) {
        for (auto c : containing_[e]) --hits_[c];
    }
    bool all_hit() const {
        return std::all_of(hits_.begin(), hits_.end(), [](int h) { return h > 0; });
    }

    bool feasible(int budget, std::uint32_t lo) {
        std::size_t best = npos;
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        open_.clear();
        for (std::size_t c = 0; c < cands_.size(); ++c) {
            if (hits_[c] > 0) continue;
            std::size_t n = allowed_count(c, lo);
            if (n == 0) return false;
            open_.push_back(c);
            if (n < best_count) {
                best_count = n;
                best = c;
            }
        }
        if (best == npos) return true;
        if (budget <= 0) return false;
        if (packing_bound(lo) > budget) return false;

        std::vector<std::uint32_t> branch;
        for (auto e : cands_[best])
            if (e >= lo && !banned_[e]) branch.push_back(e);
        // Most useful candidates first; ties by index.
        std::stable_sort(branch.begin(), branch.end(), [&](auto x, auto y) {
            return open_coverage(x) > open_coverage(y);
        });
        std::vector<std::uint32_t> newly_banned;
        bool ok = false;
        for (auto e : branch) {
            choose(e);
            ok = feasible(budget - 1, lo);
            unchoose(e);
            if (ok) break;
            banned_[e] = 1;
            newly_banned.push_back(e);
        }
        for (auto e : newly_banned) banned_[e] = 0;
        return ok;
    }

  private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::size_t allowed_count(std::size_t c, std::uint32_t lo) const {
        std::size_t n = 0;
        for (auto e : cands_[c])
            if (e >= lo && !banned_[e]) ++n;
        return n;
    }

    std::size_t open_coverage(std::uint32_t e) const {
        std::size_t n = 0;
        for (auto c : containing_[e])
            if (hits_[c] == 0) ++n;
        return n;
    }

    // Greedy packing of pairwise disjoint open constraints: each needs its own pick.
    int packing_bound(std::uint32_t lo) {
        std::vector<std::size_t> order = open_;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) {
            return allowed_count(a, lo) < allowed_count(b, lo);
        });
        std::vector<char> used(banned_.size(), 0);
        int bound = 0;
        for (auto c : order) {
            bool disjoint = true;
            for (auto e : cands_[c])
                if (e >= lo && !banned_[e] && used[e]) {
                    disjoint = false;
                    break;
                }
            if (!disjoint) continue;
            ++bound;
            for (auto e : cands_[c])
                if (e >= lo && !banned_[e]) used[e] = 1;
        }
        return bound;
    }

    std::vector<std::vector<std::uint32_t>> cands_;
    std::vector<std::vector<std::uint32_t>> containing_;
    std::vector<int> hits_;
    std::vector<char> banned_;
    std::vector<std::size_t> open_;
};

} // namespace

void HittingSetProblem::add_constraint(std::vector<std::uint32_t> candidates) {
    for (auto e : candidates)
        if (e >= universe_) throw InputError("hitting set: candidate index out of range");
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    constraints_.push_back(std::move(candidates));
}

bool HittingSetProblem::is_hitting_set(const std::vector<std::uint32_t>& chosen) const {
    for (const auto& c : constraints_) {
        bool hit = std::any_of(c.begin(), c.end(), [&](auto e) {
            return std::find(chosen.begin(), chosen.end(), e) != chosen.end();
        });
        if (!hit) return false;
    }
    return true;
}

std::optional<std::vector<std::uint32_t>> HittingSetProblem::solve() const {
    for (const auto& c : constraints_)
        if (c.empty()) return std::nullopt;

    // Drop duplicates and constraints implied by a smaller one.
    std::vector<std::vector<std::uint32_t>> sorted = constraints_;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<Words> kept_words;
    std::vector<std::vector<std::uint32_t>> kept;
    for (auto& c : sorted) {
        Words w = to_words(c, universe_);
        bool dominated = std::any_of(kept_words.begin(), kept_words.end(),
                                     [&](const Words& k) { return words_subset(k, w); });
        if (dominated) continue;
        kept_words.push_back(std::move(w));
        kept.push_back(std::move(c));
    }

    Search search(kept, universe_);
    int size = 0;
    while (!search.feasible(size, 0)) ++size;

    // Greedy lexicographic construction: the smallest next index that still
    // admits a completion of the remaining budget from larger indices.
    std::vector<std::uint32_t> chosen;
    std::uint32_t next = 0;
    for (int remaining = size; remaining > 0; --remaining) {
        bool placed = false;
        for (std::uint32_t e = next; e < universe_; ++e) {
            search.choose(e);
            if (search.feasible(remaining - 1, e + 1)) {
                chosen.push_back(e);
                next = e + 1;
                placed = true;
                break;
            }
            search.unchoose(e);
        }
        if (!placed) throw InternalInconsistency("hitting set: lexicographic completion failed");
    }
    if (!search.all_hit()) throw InternalInconsistency("hitting set: solution misses a constraint");
    return chosen;
}

} // namespace bca
