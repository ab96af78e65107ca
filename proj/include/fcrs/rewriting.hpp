#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fcrs/word.hpp"

namespace fcrs {

constexpr size_t kDefaultStepCap = 1'000'000;

/// Schema families for generated rules; user systems default to `other`.
enum class RuleTag {
  other,
  inverse_cancellation,
  blue_vertex,
  red_vertex,
  edge,
  blue_amalgam,
  red_amalgam,
  blue_hnn,
  red_hnn,
};

std::string_view tag_name(RuleTag tag);
std::optional<RuleTag> tag_from_name(std::string_view name);

struct Rule {
  Word lhs;
  Word rhs;
  RuleTag tag = RuleTag::other;

  friend bool operator==(const Rule& a, const Rule& b) = default;
};

/// Multi-pattern factor matcher over the rule left-hand sides (Aho-Corasick
/// with a dense goto table). States are lhs-prefix residues; a state is dead
/// when some full lhs ends there.
class PatternAutomaton {
 public:
  PatternAutomaton() = default;
  PatternAutomaton(size_t letter_count, const std::vector<Rule>& rules);

  int initial() const { return 0; }
  int step(int state, Letter l) const {
    return next_[static_cast<size_t>(state) * letter_count_ + static_cast<size_t>(l.code)];
  }
  /// Rule indices whose lhs ends at this state, longest lhs first, then
  /// lowest rule index.
  const std::vector<int32_t>& matches(int state) const { return out_[static_cast<size_t>(state)]; }
  bool dead(int state) const { return !out_[static_cast<size_t>(state)].empty(); }

  size_t state_count() const { return out_.size(); }
  size_t letter_count() const { return letter_count_; }
  size_t max_lhs() const { return max_lhs_; }

 private:
  size_t letter_count_ = 0;
  size_t max_lhs_ = 0;
  std::vector<int32_t> next_;
  std::vector<std::vector<int32_t>> out_;
};

/// An ordered list of rules over an alphabet, with the matcher prebuilt.
/// Immutable after construction; cheap to share read-only across threads.
class RewritingSystem {
 public:
  RewritingSystem(Alphabet alphabet, std::vector<Rule> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(size_t i) const { return rules_[i]; }
  size_t rule_count() const { return rules_.size(); }
  const PatternAutomaton& automaton() const { return automaton_; }

  /// Convenience: parse against this system's alphabet.
  Word word(std::string_view text) const { return alphabet_.parse_word(text); }
  std::string print(const Word& w) const { return alphabet_.print(w); }

  friend bool operator==(const RewritingSystem& a, const RewritingSystem& b) {
    return a.alphabet_ == b.alphabet_ && a.rules_ == b.rules_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  PatternAutomaton automaton_;
};

struct Redex {
  size_t position = 0;
  int rule = -1;

  friend bool operator==(const Redex&, const Redex&) = default;
};

/// Thrown when reduce() runs out of steps; carries the partial result so
/// callers can report how far the reduction got.
class ReductionCapExceeded : public std::runtime_error {
 public:
  ReductionCapExceeded(Word partial, size_t steps);
  const Word& partial() const { return partial_; }
  size_t steps() const { return steps_; }

 private:
  Word partial_;
  size_t steps_;
};

/// Leftmost occurrence of any lhs; ties at one position broken by longest
/// lhs, then lowest rule index. Empty iff the word is irreducible.
std::optional<Redex> find_redex(const Word& w, const RewritingSystem& sys);

/// Same policy, but only matches starting at or after `from` are considered.
/// Callers must know positions before `from` are match-free.
std::optional<Redex> find_redex_from(const Word& w, const RewritingSystem& sys, size_t from);

/// Every (position, rule) match anywhere in the word, in position order.
std::vector<Redex> all_matches(const Word& w, const RewritingSystem& sys);

/// Replaces the lhs factor at `position`; throws std::logic_error when the
/// rule does not actually match there (a caller bug, not an input error).
Word rewrite_once(const Word& w, size_t position, const Rule& rule);

struct ReduceStats {
  size_t steps = 0;
};

/// Applies find_redex + rewrite_once to a fixed point. For a complete system
/// the result is the unique normal form of the group element.
Word reduce(const Word& w, const RewritingSystem& sys, size_t step_cap = kDefaultStepCap,
            ReduceStats* stats = nullptr);

/// Like reduce(), but picks a uniformly random redex at every step. Used to
/// probe strategy independence.
Word random_reduce(const Word& w, const RewritingSystem& sys, uint64_t seed,
                   size_t step_cap = kDefaultStepCap);

bool is_irreducible(const Word& w, const RewritingSystem& sys);

/// One word per match, deduplicated; empty iff the word is irreducible.
std::vector<Word> reduction_successors(const Word& w, const RewritingSystem& sys);

/// Line-oriented .rws text: a `letters:` declaration, optional `tag:` lines,
/// and `lhs -> rhs` rules ("1" is the empty right-hand side).
RewritingSystem parse_rws(std::istream& in, std::string_view source_name = "<input>");
RewritingSystem parse_rws_string(std::string_view text, std::string_view source_name = "<string>");
RewritingSystem load_rws_file(const std::string& path);
std::string to_rws_string(const RewritingSystem& sys);
void save_rws_file(const RewritingSystem& sys, const std::string& path);

}  // namespace fcrs
