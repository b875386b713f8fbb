#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bca {

/// Minimum hitting set over a universe {0, ..., n-1}.
///
/// Every "minimum X" question in this library (dense sets, bases of contact
/// algebras, bases and pi-bases of finite spaces) reduces to choosing the
/// fewest universe members so that each constraint set contains at least one
/// of them. Universe indices are expected to follow the caller's canonical
/// element order; the returned witness is the lexicographically smallest
/// minimum-size solution in that order.
class HittingSetProblem {
  public:
    explicit HittingSetProblem(std::uint32_t universe_size) : universe_(universe_size) {}

    /// Adds a constraint. Duplicates are allowed; indices must be < universe size.
    void add_constraint(std::vector<std::uint32_t> candidates);

    std::uint32_t universe_size() const { return universe_; }
    std::size_t constraint_count() const { return constraints_.size(); }

    /// Lexicographically smallest hitting set of minimum cardinality, sorted
    /// ascending; nullopt when some constraint is empty.
    std::optional<std::vector<std::uint32_t>> solve() const;

    /// True iff `chosen` hits every constraint.
    bool is_hitting_set(const std::vector<std::uint32_t>& chosen) const;

  private:
    std::uint32_t universe_;
    std::vector<std::vector<std::uint32_t>> constraints_;
};

} // namespace bca
