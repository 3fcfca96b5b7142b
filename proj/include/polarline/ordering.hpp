#pragma once

// Line structure recovered from rankings alone: Pareto filtering, the
// positional order of the surviving alternatives, and the majority order.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarline/model.hpp"

namespace polarline {

// Every alternative b of `e` for which some a in `within` (a != b) is
// preferred to b by all voters. Result follows e.alternatives() order.
std::vector<std::string> pareto_dominated(const Election& e,
                                          std::span<const std::string> within);

// Ids of the alternatives no other alternative dominates.
std::vector<std::string> undominated(const Election& e);

// Left-to-right order of the undominated alternatives, determined up to
// reversal. Canonical orientation puts the lexicographically smaller
// endpoint first.
class AlternativeOrder {
 public:
  AlternativeOrder() = default;
  AlternativeOrder(std::vector<std::string> ids, bool canonical);

  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  const std::string& operator[](std::size_t i) const { return ids_[i]; }
  bool canonical() const { return canonical_; }

  std::optional<std::size_t> position(std::string_view id) const;
  AlternativeOrder reversed() const;

  friend bool operator==(const AlternativeOrder&,
                         const AlternativeOrder&) = default;

 private:
  std::vector<std::string> ids_;
  bool canonical_ = true;
};

// Throws NotLineRealizable when no line metric explains the rankings of the
// undominated alternatives.
AlternativeOrder order_alternatives(const Election& e);

// |V_{a>b}|. Throws UnknownAlternative.
std::size_t pairwise_margin(const Election& e, std::string_view a,
                            std::string_view b);

// Row-major m x m table of |V_{a>b}| over alternative indices.
std::vector<std::size_t> margin_table(const Election& e);

class MajorityOrder {
 public:
  MajorityOrder(std::vector<std::string> ids, std::vector<std::string> index,
                std::vector<std::size_t> margins);

  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& top() const { return ids_.front(); }
  std::size_t size() const { return ids_.size(); }
  const std::string& operator[](std::size_t i) const { return ids_[i]; }
  std::size_t rank(std::string_view id) const;
  std::size_t margin(std::string_view a, std::string_view b) const;

 private:
  std::size_t slot(std::string_view id) const;

  std::vector<std::string> ids_;
  std::vector<std::string> index_;  // alternative ids in election order
  std::vector<std::size_t> margins_;
};

// Hamiltonian path of the majority tournament. With an even number of
// voters, a tied pair goes to the alternative the left half of the electorate
// prefers, "left" meaning the first end of `order`.
MajorityOrder majority_order(const Election& e, const AlternativeOrder& order);
MajorityOrder majority_order(const Election& e);

// True iff every voter's ranking restricted to `order` is single-peaked
// with respect to it.
bool single_peaked_on(const Election& e, std::span<const std::string> order);

}  // namespace polarline
