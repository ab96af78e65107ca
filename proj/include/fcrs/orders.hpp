#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fcrs/rewriting.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

class OrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr size_t kDefaultDisorderLengthCap = 12;

/// A well-founded partial order on letters, given by integer tiers: higher
/// tier compares greater, equal tiers are incomparable, and letters without a
/// tier compare to nothing.
class Precedence {
 public:
  Precedence(Alphabet alphabet, const std::vector<std::pair<Letter, int>>& tiers);

  /// Total order from a descending chain (first letter greatest). Every
  /// letter gets a distinct tier; letters not listed stay unranked.
  static Precedence from_chain(Alphabet alphabet, const std::vector<Letter>& descending);

  /// Parses a whitespace-separated descending chain of letter tokens.
  static Precedence parse(const Alphabet& alphabet, std::string_view spec);

  const Alphabet& alphabet() const { return alphabet_; }

  bool ranked(Letter l) const;
  /// Throws OrderError naming the letter when it is unranked.
  int tier(Letter l) const;
  bool greater(Letter a, Letter b) const { return tier(a) > tier(b); }

  /// Ranked letters grouped by tier, greatest first.
  std::vector<std::vector<Letter>> tiers() const;
  std::string describe() const;

 private:
  Alphabet alphabet_;
  std::vector<int> tier_by_code_;  // -1 = unranked
};

/// The recursive path ordering on words induced by a letter precedence.
/// Well-founded and compatible with concatenation; a rule set in which every
/// lhs exceeds its rhs is therefore Noetherian.
bool rpo_greater(const Word& u, const Word& v, const Precedence& prec);

/// A sub-system together with the letters it is forbidden to mention.
/// Restricted rules may only use non-excluded letters.
struct SystemPartition {
  RewritingSystem restricted;
  std::vector<bool> excluded_by_code;  // indexed by Letter::code

  SystemPartition(RewritingSystem restricted_system, std::vector<bool> excluded);

  bool is_excluded(Letter l) const { return excluded_by_code[static_cast<size_t>(l.code)]; }
  std::vector<Letter> excluded_letters() const;
};

/// Shared memo for disorder computations. Not thread-safe; use one per
/// thread or per call.
class DisorderCache {
 public:
  std::unordered_map<Word, long long, WordHash> memo;
  std::unordered_set<Word, WordHash> on_stack;
};

/// The maximum length over all maximal rewriting sequences from w under the
/// restricted system, computed by exhaustive memoized search. Zero iff w is
/// already irreducible. The length cap applies to the input word; the search
/// itself may pass through longer words.
long long disorder(const Word& w, const SystemPartition& part,
                   size_t length_cap = kDefaultDisorderLengthCap,
                   DisorderCache* cache = nullptr);

/// Lexicographic well-founded measure for a partitioned system. A word splits
/// uniquely at its excluded letters into restricted segments; the profile is
/// the excluded-letter count followed by (disorder, length) per segment in
/// order. Comparison zero-pads the shorter profile.
struct SegmentProfile {
  std::vector<long long> values;

  long long excluded_count() const { return values.empty() ? 0 : values[0]; }
  friend bool operator==(const SegmentProfile&, const SegmentProfile&) = default;
};

SegmentProfile segment_profile(const Word& w, const SystemPartition& part,
                               size_t length_cap = kDefaultDisorderLengthCap,
                               DisorderCache* cache = nullptr);

bool segment_profile_greater(const SegmentProfile& a, const SegmentProfile& b);

bool segment_profile_greater(const Word& w1, const Word& w2, const SystemPartition& part,
                             size_t length_cap = kDefaultDisorderLengthCap,
                             DisorderCache* cache = nullptr);

}  // namespace fcrs
