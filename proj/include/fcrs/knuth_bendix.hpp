#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fcrs/orders.hpp"
#include "fcrs/rewriting.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

constexpr size_t kDefaultResolutionStepCap = 100'000;
constexpr size_t kDefaultRuleCap = 10'000;

/// A minimal superposition of two rule left-hand sides, with its two one-step
/// reducts. `offset` is where the right rule's lhs sits inside the source;
/// the left rule always matches at position 0.
struct CriticalPair {
  enum class Kind { overlap, containment };

  Word source;
  Word left_reduct;
  Word right_reduct;
  Kind kind = Kind::overlap;
  int rule_left = -1;
  int rule_right = -1;
  size_t offset = 0;
};

/// All overlap pairs (a proper suffix of one lhs equal to a prefix of
/// another, both leftovers nonempty) and containment pairs (one lhs a factor
/// of another), over all ordered rule pairs including self-overlaps,
/// deduplicated by source and reduct set.
std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys);

struct ResolutionReport {
  enum class Outcome { resolved, refuted, timeout };

  CriticalPair pair;
  Outcome outcome = Outcome::refuted;
  std::optional<Word> joined_at;
  Word left_normal_form;
  Word right_normal_form;
  size_t steps_used = 0;

  bool resolved() const { return outcome == Outcome::resolved; }
};

/// Reduces both reducts to irreducible form; resolved iff they coincide.
/// A blown step cap reports `timeout`, which is inconclusive, not a
/// refutation.
ResolutionReport resolve(const CriticalPair& pair, const RewritingSystem& sys,
                         size_t step_cap = kDefaultResolutionStepCap);

/// Resolves every pair. With `parallel`, pairs are distributed across OpenMP
/// threads; the serial path is the reference implementation and the output
/// order is identical either way.
std::vector<ResolutionReport> resolve_all(const RewritingSystem& sys,
                                          const std::vector<CriticalPair>& pairs,
                                          size_t step_cap = kDefaultResolutionStepCap,
                                          bool parallel = false);

/// One line per pair: `RESOLVED <source> => <joined>` or
/// `UNRESOLVED <source> => <left> | <right>`.
std::string describe(const ResolutionReport& report, const Alphabet& alphabet);

struct CompletenessSummary {
  size_t pair_count = 0;
  size_t resolved_count = 0;
  std::vector<ResolutionReport> refuted;
  std::vector<ResolutionReport> inconclusive;

  /// Local confluence; together with a separate termination certificate this
  /// is completeness.
  bool complete() const { return refuted.empty() && inconclusive.empty(); }
};

CompletenessSummary check_complete(const RewritingSystem& sys,
                                   size_t step_cap = kDefaultResolutionStepCap,
                                   bool parallel = false);

struct CompletionLimits {
  size_t rule_cap = kDefaultRuleCap;
  size_t step_cap = kDefaultResolutionStepCap;
};

struct CompletionResult {
  enum class Status { completed, unorientable, cap_exceeded };

  Status status = Status::completed;
  std::optional<RewritingSystem> system;
  std::optional<std::pair<Word, Word>> offending_equation;
  std::string detail;
  size_t rounds = 0;

  bool ok() const { return status == Status::completed; }
};

/// Standard completion: orients unresolved critical-pair normal forms into
/// new rules using the recursive path ordering and inter-reduces the rule
/// set, until every pair resolves or a cap is hit. Input rules are
/// re-oriented by the same ordering.
CompletionResult complete(const RewritingSystem& sys, const Precedence& prec,
                          CompletionLimits limits = {});

}  // namespace fcrs
