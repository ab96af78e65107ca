#include "fcrs/knuth_bendix.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

namespace fcrs {

namespace {

bool factor_at(const Word& haystack, size_t pos, const Word& needle) {
  if (pos + needle.size() > haystack.size()) return false;
  for (size_t i = 0; i < needle.size(); ++i) {
    if (haystack[pos + i] != needle[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<CriticalPair> critical_pairs(const RewritingSystem& sys) {
  const auto& rules = sys.rules();
  std::vector<CriticalPair> out;
  std::set<std::tuple<Word, Word, Word>> seen;

  auto emit = [&](CriticalPair pair) {
    Word lo = std::min(pair.left_reduct, pair.right_reduct);
    Word hi = std::max(pair.left_reduct, pair.right_reduct);
    if (seen.emplace(pair.source, std::move(lo), std::move(hi)).second)
      out.push_back(std::move(pair));
  };

  for (size_t i = 0; i < rules.size(); ++i) {
    const Word& a = rules[i].lhs;
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& b = rules[j].lhs;

      // Overlaps: a = r1 r2, b = r2 r3 with r1, r2, r3 all nonempty. The
      // superposition r1 r2 r3 rewrites to rhs_a r3 and to r1 rhs_b.
      size_t max_k = std::min(a.size(), b.size()) - 1;
      for (size_t k = 1; k <= max_k; ++k) {
        if (!factor_at(a, a.size() - k, b.subword(0, k))) continue;
        CriticalPair pair;
        pair.kind = CriticalPair::Kind::overlap;
        pair.rule_left = static_cast<int>(i);
        pair.rule_right = static_cast<int>(j);
        pair.offset = a.size() - k;
        pair.source = concat(a, b.subword(k, b.size() - k));
        pair.left_reduct = concat(rules[i].rhs, b.subword(k, b.size() - k));
        pair.right_reduct = concat(a.subword(0, a.size() - k), rules[j].rhs);
        emit(std::move(pair));
      }

      // Containments: b occurs inside a (properly, or improperly for two
      // distinct rules sharing a lhs). The source a rewrites to rhs_a and to
      // a with the b occurrence replaced by rhs_b.
      if (i == j) continue;
      if (b.size() > a.size()) continue;
      for (size_t o = 0; o + b.size() <= a.size(); ++o) {
        if (!factor_at(a, o, b)) continue;
        CriticalPair pair;
        pair.kind = CriticalPair::Kind::containment;
        pair.rule_left = static_cast<int>(i);
        pair.rule_right = static_cast<int>(j);
        pair.offset = o;
        pair.source = a;
        pair.left_reduct = rules[i].rhs;
        Word right = a.subword(0, o);
        right.append(rules[j].rhs);
        right.append(a.subword(o + b.size(), a.size() - o - b.size()));
        pair.right_reduct = std::move(right);
        emit(std::move(pair));
      }
    }
  }
  return out;
}

ResolutionReport resolve(const CriticalPair& pair, const RewritingSystem& sys, size_t step_cap) {
  ResolutionReport report;
  report.pair = pair;
  ReduceStats left_stats, right_stats;
  try {
    report.left_normal_form = reduce(pair.left_reduct, sys, step_cap, &left_stats);
    report.right_normal_form = reduce(pair.right_reduct, sys, step_cap, &right_stats);
  } catch (const ReductionCapExceeded& e) {
    report.outcome = ResolutionReport::Outcome::timeout;
    report.steps_used = e.steps();
    return report;
  }
  report.steps_used = left_stats.steps + right_stats.steps;
  if (report.left_normal_form == report.right_normal_form) {
    report.outcome = ResolutionReport::Outcome::resolved;
    report.joined_at = report.left_normal_form;
  } else {
    report.outcome = ResolutionReport::Outcome::refuted;
  }
  return report;
}

std::vector<ResolutionReport> resolve_all(const RewritingSystem& sys,
                                          const std::vector<CriticalPair>& pairs, size_t step_cap,
                                          bool parallel) {
  std::vector<ResolutionReport> out(pairs.size());
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < static_cast<int64_t>(pairs.size()); ++i) {
      out[static_cast<size_t>(i)] = resolve(pairs[static_cast<size_t>(i)], sys, step_cap);
    }
    return out;
  }
#else
  (void)parallel;
#endif
  for (size_t i = 0; i < pairs.size(); ++i) out[i] = resolve(pairs[i], sys, step_cap);
  return out;
}

std::string describe(const ResolutionReport& report, const Alphabet& alphabet) {
  std::ostringstream out;
  if (report.resolved()) {
    out << "RESOLVED " << alphabet.print(report.pair.source) << " => "
        << alphabet.print(*report.joined_at);
  } else {
    out << "UNRESOLVED " << alphabet.print(report.pair.source) << " => "
        << alphabet.print(report.left_normal_form) << " | "
        << alphabet.print(report.right_normal_form);
    if (report.outcome == ResolutionReport::Outcome::timeout) out << " (step cap exceeded)";
  }
  return out.str();
}

CompletenessSummary check_complete(const RewritingSystem& sys, size_t step_cap, bool parallel) {
  std::vector<CriticalPair> pairs = critical_pairs(sys);
  std::vector<ResolutionReport> reports = resolve_all(sys, pairs, step_cap, parallel);
  CompletenessSummary summary;
  summary.pair_count = pairs.size();
  for (auto& r : reports) {
    switch (r.outcome) {
      case ResolutionReport::Outcome::resolved: ++summary.resolved_count; break;
      case ResolutionReport::Outcome::refuted: summary.refuted.push_back(std::move(r)); break;
      case ResolutionReport::Outcome::timeout: summary.inconclusive.push_back(std::move(r)); break;
    }
  }
  return summary;
}

namespace {

// Mutable rule set for the completion loop; the matcher is rebuilt lazily
// whenever the rules change.
class WorkingSystem {
 public:
  explicit WorkingSystem(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const std::vector<Rule>& rules() const { return rules_; }

  void add(Rule rule) {
    rules_.push_back(std::move(rule));
    dirty_ = true;
  }

  void remove(size_t index) {
    rules_.erase(rules_.begin() + static_cast<ptrdiff_t>(index));
    dirty_ = true;
  }

  void replace_rhs(size_t index, Word rhs) {
    rules_[index].rhs = std::move(rhs);
    dirty_ = true;
  }

  RewritingSystem snapshot() const { return RewritingSystem(alphabet_, rules_); }

  Word normal_form(const Word& w, size_t step_cap) {
    refresh();
    return reduce(w, *system_, step_cap);
  }

  bool lhs_reducible_by(const Rule& rule, const Word& candidate) const {
    if (candidate.size() < rule.lhs.size()) return false;
    for (size_t pos = 0; pos + rule.lhs.size() <= candidate.size(); ++pos) {
      if (factor_at(candidate, pos, rule.lhs)) return true;
    }
    return false;
  }

 private:
  void refresh() {
    if (!dirty_ && system_) return;
    system_.emplace(alphabet_, rules_);
    dirty_ = false;
  }

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::optional<RewritingSystem> system_;
  bool dirty_ = true;
};

}  // namespace

CompletionResult complete(const RewritingSystem& sys, const Precedence& prec,
                          CompletionLimits limits) {
  CompletionResult result;
  WorkingSystem work(sys.alphabet());

  struct Equation {
    Word left;
    Word right;
    RuleTag tag = RuleTag::other;
  };
  std::deque<Equation> equations;
  for (const Rule& r : sys.rules()) equations.push_back({r.lhs, r.rhs, r.tag});

  try {
    while (true) {
      while (!equations.empty()) {
        Equation eq = std::move(equations.front());
        equations.pop_front();
        Word nu = work.normal_form(eq.left, limits.step_cap);
        Word nv = work.normal_form(eq.right, limits.step_cap);
        if (nu == nv) continue;

        Word lhs, rhs;
        if (rpo_greater(nu, nv, prec)) {
          lhs = std::move(nu);
          rhs = std::move(nv);
        } else if (rpo_greater(nv, nu, prec)) {
          lhs = std::move(nv);
          rhs = std::move(nu);
        } else {
          result.status = CompletionResult::Status::unorientable;
          result.offending_equation = {nu, nv};
          result.detail = "equation " + sys.alphabet().print(nu) + " = " +
                          sys.alphabet().print(nv) + " is not orientable by the precedence";
          return result;
        }

        Rule fresh{std::move(lhs), std::move(rhs), eq.tag};
        // Inter-reduce: rules whose lhs the new rule rewrites go back into
        // the equation queue; rhs occurrences are normalized in place later.
        for (size_t i = work.rules().size(); i-- > 0;) {
          const Rule& existing = work.rules()[i];
          if (work.lhs_reducible_by(fresh, existing.lhs)) {
            equations.push_back({existing.lhs, existing.rhs, existing.tag});
            work.remove(i);
          }
        }
        work.add(std::move(fresh));
        if (work.rules().size() > limits.rule_cap) {
          result.status = CompletionResult::Status::cap_exceeded;
          result.detail = "rule cap " + std::to_string(limits.rule_cap) +
                          " exceeded; completion diverges";
          return result;
        }
      }

      // Normalize right-hand sides against the full current set.
      for (size_t i = 0; i < work.rules().size(); ++i) {
        Word nf = work.normal_form(work.rules()[i].rhs, limits.step_cap);
        if (nf != work.rules()[i].rhs) work.replace_rhs(i, std::move(nf));
      }

      ++result.rounds;
      RewritingSystem snapshot = work.snapshot();
      bool all_resolved = true;
      for (const CriticalPair& pair : critical_pairs(snapshot)) {
        ResolutionReport report = resolve(pair, snapshot, limits.step_cap);
        if (report.outcome == ResolutionReport::Outcome::timeout)
          throw ReductionCapExceeded(report.pair.source, limits.step_cap);
        if (!report.resolved()) {
          equations.push_back({report.left_normal_form, report.right_normal_form, RuleTag::other});
          all_resolved = false;
        }
      }
      if (all_resolved) {
        result.status = CompletionResult::Status::completed;
        result.system = std::move(snapshot);
        return result;
      }
    }
  } catch (const ReductionCapExceeded& e) {
    result.status = CompletionResult::Status::cap_exceeded;
    result.detail = std::string("reduction step cap exceeded after ") +
                    std::to_string(e.steps()) + " steps during completion";
    return result;
  }
}

}  // namespace fcrs
