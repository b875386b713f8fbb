#pragma once

#include <map>
#include <vector>

#include "bca/contact.hpp"

namespace bca::testing {

/// Way-below read straight off the atom relation: a << b iff no atom of a is
/// related to an atom outside b.
inline bool naive_way_below(const std::vector<Mask>& rows, Mask top, Mask a, Mask b) {
    for (std::size_t p = 0; p < rows.size(); ++p)
        if (((a >> p) & 1) && (rows[p] & top & ~b) != 0) return false;
    return true;
}

/// Literal transcription of the dimension predicate: every tuple of pairs
/// b_i << a_i from D with ⋁b = 1 is checked, and for each such a-tuple every
/// tuple of chains c_i << d_i << a_i is tried. No symmetry or dominance
/// reductions; only the inner verdict is memoized per a-tuple.
class NaiveDimension {
  public:
    NaiveDimension(const ContactStructure& ca, std::vector<Mask> d)
        : rows_(ca.rows()), top_(ca.algebra().universe()), degenerate_(ca.algebra().is_degenerate()), d_(std::move(d)) {
        for (Mask a : d_)
            for (Mask b : d_)
                if (naive_way_below(rows_, top_, b, a)) pairs_.push_back({b, a});
    }

    bool leq(int n) {
        if (n == -1) return degenerate_;
        m_ = static_cast<std::size_t>(n) + 2;
        memo_.clear();
        std::vector<Mask> a(m_), b(m_);
        return outer(0, a, b);
    }

    /// The inner witness condition for one a-tuple.
    bool refinable(const std::vector<Mask>& a) {
        m_ = a.size();
        std::vector<std::vector<std::pair<Mask, Mask>>> chains(m_);
        for (std::size_t i = 0; i < m_; ++i)
            for (Mask d : d_)
                if (naive_way_below(rows_, top_, d, a[i]))
                    for (Mask c : d_)
                        if (naive_way_below(rows_, top_, c, d)) chains[i].push_back({c, d});
        return inner(chains, 0, 0, top_);
    }

  private:
    bool outer(std::size_t i, std::vector<Mask>& a, std::vector<Mask>& b) {
        if (i == m_) {
            Mask join = 0;
            for (Mask x : b) join |= x;
            if (join != top_) return true;
            auto [it, fresh] = memo_.try_emplace(a, false);
            if (fresh) it->second = refinable(a);
            return it->second;
        }
        for (auto [bb, aa] : pairs_) {
            a[i] = aa;
            b[i] = bb;
            if (!outer(i + 1, a, b)) return false;
        }
        return true;
    }

    bool inner(const std::vector<std::vector<std::pair<Mask, Mask>>>& chains, std::size_t i, Mask join, Mask meet) {
        if (i == chains.size()) return join == top_ && meet == 0;
        for (auto [c, d] : chains[i])
            if (inner(chains, i + 1, join | c, meet & d)) return true;
        return false;
    }

    std::vector<Mask> rows_;
    Mask top_;
    bool degenerate_;
    std::vector<Mask> d_;
    std::vector<std::pair<Mask, Mask>> pairs_;
    std::size_t m_ = 0;
    std::map<std::vector<Mask>, bool> memo_;
};

inline std::vector<Mask> all_masks(const FiniteBooleanAlgebra& algebra) {
    std::vector<Mask> out;
    for (Mask x = 0; x <= algebra.universe(); ++x) out.push_back(x);
    return out;
}

} // namespace bca::testing
