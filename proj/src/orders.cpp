#include "fcrs/orders.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fcrs {

Precedence::Precedence(Alphabet alphabet, const std::vector<std::pair<Letter, int>>& tiers)
    : alphabet_(std::move(alphabet)), tier_by_code_(alphabet_.letter_count(), -1) {
  for (const auto& [letter, tier] : tiers) {
    if (tier < 0) throw OrderError("tiers must be nonnegative");
    auto& slot = tier_by_code_[static_cast<size_t>(letter.code)];
    if (slot >= 0) throw OrderError("letter " + alphabet_.print(letter) + " ranked twice");
    slot = tier;
  }
}

Precedence Precedence::from_chain(Alphabet alphabet, const std::vector<Letter>& descending) {
  std::vector<std::pair<Letter, int>> tiers;
  tiers.reserve(descending.size());
  int n = static_cast<int>(descending.size());
  for (int i = 0; i < n; ++i) tiers.emplace_back(descending[static_cast<size_t>(i)], n - i);
  return Precedence(std::move(alphabet), tiers);
}

Precedence Precedence::parse(const Alphabet& alphabet, std::string_view spec) {
  std::istringstream in{std::string(spec)};
  std::vector<Letter> chain;
  std::string token;
  while (in >> token) chain.push_back(alphabet.parse_letter(token));
  return from_chain(alphabet, chain);
}

bool Precedence::ranked(Letter l) const {
  return l.code >= 0 && static_cast<size_t>(l.code) < tier_by_code_.size() &&
         tier_by_code_[static_cast<size_t>(l.code)] >= 0;
}

int Precedence::tier(Letter l) const {
  if (!ranked(l))
    throw OrderError("letter " + alphabet_.print(l) + " is not ranked in the precedence");
  return tier_by_code_[static_cast<size_t>(l.code)];
}

std::vector<std::vector<Letter>> Precedence::tiers() const {
  std::map<int, std::vector<Letter>, std::greater<>> by_tier;
  for (size_t code = 0; code < tier_by_code_.size(); ++code) {
    if (tier_by_code_[code] >= 0)
      by_tier[tier_by_code_[code]].push_back(Letter(static_cast<int32_t>(code)));
  }
  std::vector<std::vector<Letter>> out;
  out.reserve(by_tier.size());
  for (auto& [tier, letters] : by_tier) out.push_back(std::move(letters));
  return out;
}

std::string Precedence::describe() const {
  std::ostringstream out;
  auto groups = tiers();
  for (size_t i = 0; i < groups.size(); ++i) {
    if (i) out << " > ";
    for (size_t j = 0; j < groups[i].size(); ++j) {
      if (j) out << " = ";
      out << alphabet_.print(groups[i][j]);
    }
  }
  return out.str();
}

namespace {

// Tri-state memo over suffix pairs: u[i..] >rpo v[j..].
class RpoEvaluator {
 public:
  RpoEvaluator(const Word& u, const Word& v, const Precedence& prec)
      : u_(u), v_(v), prec_(prec), memo_((u.size() + 1) * (v.size() + 1), kUnknown) {}

  bool greater(size_t i, size_t j) {
    int8_t& slot = memo_[i * (v_.size() + 1) + j];
    if (slot != kUnknown) return slot == kTrue;
    bool result;
    if (i == u_.size()) {
      result = false;  // the empty word exceeds nothing
    } else if (j == v_.size()) {
      result = true;  // any letter exceeds the empty word
    } else {
      Letter s = u_[i], t = v_[j];
      result = (s == t && greater(i + 1, j + 1)) ||
               (prec_.greater(s, t) && greater(i, j + 1)) ||
               greater_or_equal(i + 1, j);
    }
    slot = result ? kTrue : kFalse;
    return result;
  }

 private:
  bool greater_or_equal(size_t i, size_t j) {
    if (u_.size() - i == v_.size() - j &&
        std::equal(u_.begin() + static_cast<ptrdiff_t>(i), u_.end(),
                   v_.begin() + static_cast<ptrdiff_t>(j)))
      return true;
    return greater(i, j);
  }

  static constexpr int8_t kUnknown = -1, kFalse = 0, kTrue = 1;
  const Word& u_;
  const Word& v_;
  const Precedence& prec_;
  std::vector<int8_t> memo_;
};

}  // namespace

bool rpo_greater(const Word& u, const Word& v, const Precedence& prec) {
  for (const Word* w : {&u, &v}) {
    for (Letter l : *w) prec.tier(l);  // throws on unranked letters
  }
  return RpoEvaluator(u, v, prec).greater(0, 0);
}

SystemPartition::SystemPartition(RewritingSystem restricted_system, std::vector<bool> excluded)
    : restricted(std::move(restricted_system)), excluded_by_code(std::move(excluded)) {
  if (excluded_by_code.size() != restricted.alphabet().letter_count())
    throw OrderError("exclusion mask does not match the alphabet");
  for (const Rule& r : restricted.rules()) {
    for (const Word* side : {&r.lhs, &r.rhs}) {
      for (Letter l : *side) {
        if (is_excluded(l))
          throw OrderError("restricted rule mentions excluded letter " +
                           restricted.alphabet().print(l));
      }
    }
  }
}

std::vector<Letter> SystemPartition::excluded_letters() const {
  std::vector<Letter> out;
  for (size_t code = 0; code < excluded_by_code.size(); ++code) {
    if (excluded_by_code[code]) out.push_back(Letter(static_cast<int32_t>(code)));
  }
  return out;
}

namespace {

long long disorder_rec(const Word& w, const SystemPartition& part, DisorderCache& cache) {
  if (auto it = cache.memo.find(w); it != cache.memo.end()) return it->second;
  std::vector<Word> successors = reduction_successors(w, part.restricted);
  long long best = 0;
  if (!successors.empty()) {
    if (!cache.on_stack.insert(w).second)
      throw OrderError("rewriting cycle found while computing disorder; the system is not "
                       "Noetherian on " + part.restricted.print(w));
    for (const Word& s : successors) best = std::max(best, 1 + disorder_rec(s, part, cache));
    cache.on_stack.erase(w);
  }
  cache.memo.emplace(w, best);
  return best;
}

}  // namespace

long long disorder(const Word& w, const SystemPartition& part, size_t length_cap,
                   DisorderCache* cache) {
  for (Letter l : w) {
    if (part.is_excluded(l))
      throw OrderError("disorder is undefined on excluded letter " +
                       part.restricted.alphabet().print(l));
  }
  if (w.size() > length_cap)
    throw OrderError("word of length " + std::to_string(w.size()) +
                     " exceeds the disorder length cap " + std::to_string(length_cap));
  DisorderCache local;
  return disorder_rec(w, part, cache ? *cache : local);
}

SegmentProfile segment_profile(const Word& w, const SystemPartition& part, size_t length_cap,
                               DisorderCache* cache) {
  std::vector<Word> segments;
  segments.emplace_back();
  long long excluded_count = 0;
  for (Letter l : w) {
    if (part.is_excluded(l)) {
      ++excluded_count;
      segments.emplace_back();
    } else {
      segments.back().push_back(l);
    }
  }
  SegmentProfile profile;
  profile.values.reserve(1 + 2 * segments.size());
  profile.values.push_back(excluded_count);
  for (const Word& segment : segments) {
    profile.values.push_back(disorder(segment, part, length_cap, cache));
    profile.values.push_back(static_cast<long long>(segment.size()));
  }
  return profile;
}

bool segment_profile_greater(const SegmentProfile& a, const SegmentProfile& b) {
  size_t n = std::max(a.values.size(), b.values.size());
  for (size_t i = 0; i < n; ++i) {
    long long x = i < a.values.size() ? a.values[i] : 0;
    long long y = i < b.values.size() ? b.values[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

bool segment_profile_greater(const Word& w1, const Word& w2, const SystemPartition& part,
                             size_t length_cap, DisorderCache* cache) {
  return segment_profile_greater(segment_profile(w1, part, length_cap, cache),
                                 segment_profile(w2, part, length_cap, cache));
}

}  // namespace fcrs
