#pragma once

// Elections, line metrics and committees.
//
// Voters are identified by their position 0..n-1 in the profile. Alternatives
// are opaque string ids; internally they are also addressed by their index in
// Election::alternatives().

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polarline/error.hpp"
#include "polarline/scalar.hpp"

namespace polarline {

using VoterIndex = std::size_t;
using AltIndex = std::size_t;

// Alternative ids from most to least preferred.
using Ranking = std::vector<std::string>;

// Checks the election invariants and throws Error on the first violation:
// DuplicateAlternative, EmptyElection, RankingSizeMismatch,
// UnknownAlternative, DuplicateAlternativeInRanking, CommitteeSizeOutOfRange.
void validate_election(std::span<const std::string> alternatives,
                       std::size_t committee_size,
                       std::span<const Ranking> profile);

class Election {
 public:
  Election(std::vector<std::string> alternatives, std::size_t committee_size,
           std::vector<Ranking> profile);

  std::size_t voter_count() const { return profile_.size(); }
  std::size_t alternative_count() const { return alternatives_.size(); }
  std::size_t committee_size() const { return committee_size_; }

  const std::vector<std::string>& alternatives() const { return alternatives_; }
  const std::string& id(AltIndex a) const { return alternatives_[a]; }
  const Ranking& ranking(VoterIndex v) const { return profile_[v]; }
  const std::vector<Ranking>& profile() const { return profile_; }

  // Throws UnknownAlternative.
  AltIndex index_of(std::string_view id) const;
  bool contains(std::string_view id) const;

  // Position of `a` in voter v's ranking (0 = top).
  std::size_t rank(VoterIndex v, AltIndex a) const {
    return ranks_[v * alternatives_.size() + a];
  }
  bool prefers(VoterIndex v, AltIndex a, AltIndex b) const {
    return rank(v, a) < rank(v, b);
  }
  AltIndex top(VoterIndex v) const { return orders_[v].front(); }
  // Voter v's ranking as alternative indices.
  const std::vector<AltIndex>& order(VoterIndex v) const { return orders_[v]; }

  // The election restricted to A minus `removed`, with a new committee size.
  Election without(std::span<const std::string> removed,
                   std::size_t committee_size) const;
  Election with_committee_size(std::size_t committee_size) const;

 private:
  std::vector<std::string> alternatives_;
  std::size_t committee_size_;
  std::vector<Ranking> profile_;
  std::map<std::string, AltIndex, std::less<>> index_;
  std::vector<std::vector<AltIndex>> orders_;
  std::vector<std::size_t> ranks_;
};

// Positions of voters and alternatives on the real line.
//
// Co-located alternatives are representable (the lower-bound constructions
// need them); alternatives_distinct() reports whether the usual assumption of
// pairwise-distinct alternative positions holds.
class LineMetric {
 public:
  LineMetric() = default;
  LineMetric(std::vector<Scalar> voter_positions,
             std::map<std::string, Scalar, std::less<>> alternative_positions);

  std::size_t voter_count() const { return voters_.size(); }
  const std::vector<Scalar>& voter_positions() const { return voters_; }
  const std::map<std::string, Scalar, std::less<>>& alternative_positions()
      const {
    return alternatives_;
  }

  // Throw MissingPosition.
  const Scalar& voter(VoterIndex v) const;
  const Scalar& alternative(std::string_view id) const;
  bool has_alternative(std::string_view id) const;

  Scalar distance(VoterIndex v, std::string_view id) const;

  bool alternatives_distinct() const;

  LineMetric mirrored() const;
  LineMetric translated(const Scalar& offset) const;
  LineMetric scaled(const Scalar& factor) const;
  LineMetric with_voter_positions(std::vector<Scalar> positions) const;

  // Throws MissingPosition if any voter or alternative of `e` lacks a
  // position.
  void require_covers(const Election& e) const;

  friend bool operator==(const LineMetric&, const LineMetric&) = default;

 private:
  std::vector<Scalar> voters_;
  std::map<std::string, Scalar, std::less<>> alternatives_;
};

// A set of alternative ids, kept sorted.
class Committee {
 public:
  Committee() = default;
  // Throws InvalidCommittee on duplicate ids.
  explicit Committee(std::vector<std::string> members);

  std::size_t size() const { return members_.size(); }
  bool contains(std::string_view id) const;
  const std::vector<std::string>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  std::string to_string() const;  // "{a, b}"

  friend bool operator==(const Committee&, const Committee&) = default;
  friend auto operator<=>(const Committee&, const Committee&) = default;

 private:
  std::vector<std::string> members_;
};

// Throws InvalidCommittee unless S is a size-k subset of A.
void validate_committee(const Election& e, const Committee& s);

enum class ConsistencyMode { Strict, Weak };

// True iff for every voter and every ranked pair a > b, d(i,a) < d(i,b)
// (Strict) or d(i,a) <= d(i,b) (Weak). Throws MissingPosition.
bool check_consistency(const Election& e, const LineMetric& d,
                       ConsistencyMode mode);

// The election whose profile sorts alternatives by distance from each voter.
// `alternatives` fixes the id order of the result. Throws MidpointTie when a
// voter is equidistant from two alternatives.
Election derive_profile(const LineMetric& d,
                        std::vector<std::string> alternatives,
                        std::size_t committee_size);

// Alternative ids sorted by position, co-located ones by id.
std::vector<std::string> positional_order(const LineMetric& d,
                                          std::span<const std::string> ids);

}  // namespace polarline
