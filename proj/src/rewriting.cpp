#include "fcrs/rewriting.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "fcrs/rng.hpp"

namespace fcrs {

std::string_view tag_name(RuleTag tag) {
  switch (tag) {
    case RuleTag::other: return "other";
    case RuleTag::inverse_cancellation: return "inverse-cancellation";
    case RuleTag::blue_vertex: return "blue-vertex";
    case RuleTag::red_vertex: return "red-vertex";
    case RuleTag::edge: return "edge";
    case RuleTag::blue_amalgam: return "blue-amalgam";
    case RuleTag::red_amalgam: return "red-amalgam";
    case RuleTag::blue_hnn: return "blue-hnn";
    case RuleTag::red_hnn: return "red-hnn";
  }
  return "other";
}

std::optional<RuleTag> tag_from_name(std::string_view name) {
  for (RuleTag t : {RuleTag::other, RuleTag::inverse_cancellation, RuleTag::blue_vertex,
                    RuleTag::red_vertex, RuleTag::edge, RuleTag::blue_amalgam,
                    RuleTag::red_amalgam, RuleTag::blue_hnn, RuleTag::red_hnn}) {
    if (tag_name(t) == name) return t;
  }
  return std::nullopt;
}

PatternAutomaton::PatternAutomaton(size_t letter_count, const std::vector<Rule>& rules)
    : letter_count_(letter_count) {
  struct TrieNode {
    std::vector<int32_t> next;
    int32_t fail = 0;
    std::vector<int32_t> ends_here;  // rules whose whole lhs ends at this node
    explicit TrieNode(size_t letters) : next(letters, -1) {}
  };

  std::vector<TrieNode> trie;
  trie.emplace_back(letter_count_);
  for (size_t r = 0; r < rules.size(); ++r) {
    const Word& lhs = rules[r].lhs;
    max_lhs_ = std::max(max_lhs_, lhs.size());
    int32_t node = 0;
    for (Letter l : lhs) {
      int32_t& slot = trie[static_cast<size_t>(node)].next[static_cast<size_t>(l.code)];
      if (slot < 0) {
        slot = static_cast<int32_t>(trie.size());
        trie.emplace_back(letter_count_);
      }
      node = slot;
    }
    trie[static_cast<size_t>(node)].ends_here.push_back(static_cast<int32_t>(r));
  }

  // Breadth-first fail links, then collapse goto+fail into a dense table and
  // merge outputs down the fail chain.
  std::deque<int32_t> queue;
  for (size_t c = 0; c < letter_count_; ++c) {
    int32_t& slot = trie[0].next[c];
    if (slot < 0) {
      slot = 0;
    } else {
      trie[static_cast<size_t>(slot)].fail = 0;
      queue.push_back(slot);
    }
  }
  while (!queue.empty()) {
    int32_t node = queue.front();
    queue.pop_front();
    int32_t fail = trie[static_cast<size_t>(node)].fail;
    const auto& fail_out = trie[static_cast<size_t>(fail)].ends_here;
    auto& out = trie[static_cast<size_t>(node)].ends_here;
    out.insert(out.end(), fail_out.begin(), fail_out.end());
    for (size_t c = 0; c < letter_count_; ++c) {
      int32_t& slot = trie[static_cast<size_t>(node)].next[c];
      if (slot < 0) {
        slot = trie[static_cast<size_t>(fail)].next[c];
      } else {
        trie[static_cast<size_t>(slot)].fail = trie[static_cast<size_t>(fail)].next[c];
        queue.push_back(slot);
      }
    }
  }

  next_.resize(trie.size() * letter_count_);
  out_.resize(trie.size());
  for (size_t s = 0; s < trie.size(); ++s) {
    for (size_t c = 0; c < letter_count_; ++c) next_[s * letter_count_ + c] = trie[s].next[c];
    auto& out = out_[s];
    out = std::move(trie[s].ends_here);
    std::sort(out.begin(), out.end(), [&](int32_t a, int32_t b) {
      size_t la = rules[static_cast<size_t>(a)].lhs.size();
      size_t lb = rules[static_cast<size_t>(b)].lhs.size();
      if (la != lb) return la > lb;
      return a < b;
    });
  }
}

RewritingSystem::RewritingSystem(Alphabet alphabet, std::vector<Rule> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  std::set<std::pair<Word, Word>> seen;
  for (const Rule& r : rules_) {
    if (r.lhs.empty()) throw std::invalid_argument("rule lhs must be nonempty");
    for (const Word* side : {&r.lhs, &r.rhs}) {
      for (Letter l : *side) {
        if (l.code < 0 || static_cast<size_t>(l.code) >= alphabet_.letter_count())
          throw std::invalid_argument("rule letter outside the alphabet");
      }
    }
    if (!seen.emplace(r.lhs, r.rhs).second)
      throw std::invalid_argument("duplicate rule " + alphabet_.print(r.lhs) + " -> " +
                                  alphabet_.print(r.rhs));
  }
  automaton_ = PatternAutomaton(alphabet_.letter_count(), rules_);
}

ReductionCapExceeded::ReductionCapExceeded(Word partial, size_t steps)
    : std::runtime_error("reduction step cap exceeded after " + std::to_string(steps) +
                         " steps; nontermination suspected"),
      partial_(std::move(partial)),
      steps_(steps) {}

std::optional<Redex> find_redex_from(const Word& w, const RewritingSystem& sys, size_t from) {
  const PatternAutomaton& ac = sys.automaton();
  const auto& rules = sys.rules();
  size_t max_lhs = ac.max_lhs();
  if (rules.empty()) return std::nullopt;

  bool have_best = false;
  size_t best_start = 0, best_len = 0;
  int best_rule = 0;

  int state = ac.initial();
  for (size_t e = from; e < w.size(); ++e) {
    // Matches ending beyond this bound cannot start at or before best_start.
    if (have_best && e >= best_start + max_lhs) break;
    state = ac.step(state, w[e]);
    for (int32_t r : ac.matches(state)) {
      size_t len = rules[static_cast<size_t>(r)].lhs.size();
      size_t start = e + 1 - len;
      if (!have_best || start < best_start ||
          (start == best_start &&
           (len > best_len || (len == best_len && r < best_rule)))) {
        have_best = true;
        best_start = start;
        best_len = len;
        best_rule = r;
      }
    }
  }
  if (!have_best) return std::nullopt;
  return Redex{best_start, best_rule};
}

std::optional<Redex> find_redex(const Word& w, const RewritingSystem& sys) {
  return find_redex_from(w, sys, 0);
}

std::vector<Redex> all_matches(const Word& w, const RewritingSystem& sys) {
  const PatternAutomaton& ac = sys.automaton();
  const auto& rules = sys.rules();
  std::vector<Redex> out;
  int state = ac.initial();
  for (size_t e = 0; e < w.size(); ++e) {
    state = ac.step(state, w[e]);
    for (int32_t r : ac.matches(state)) {
      out.push_back(Redex{e + 1 - rules[static_cast<size_t>(r)].lhs.size(), r});
    }
  }
  std::sort(out.begin(), out.end(), [](const Redex& a, const Redex& b) {
    if (a.position != b.position) return a.position < b.position;
    return a.rule < b.rule;
  });
  return out;
}

Word rewrite_once(const Word& w, size_t position, const Rule& rule) {
  const Word& lhs = rule.lhs;
  if (position + lhs.size() > w.size())
    throw std::logic_error("rewrite_once: lhs does not fit at position");
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (w[position + i] != lhs[i])
      throw std::logic_error("rewrite_once: rule does not match at position " +
                             std::to_string(position));
  }
  std::vector<Letter> out;
  out.reserve(w.size() - lhs.size() + rule.rhs.size());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<ptrdiff_t>(position));
  out.insert(out.end(), rule.rhs.begin(), rule.rhs.end());
  out.insert(out.end(), w.begin() + static_cast<ptrdiff_t>(position + lhs.size()), w.end());
  return Word(std::move(out));
}

namespace {

// In-place splice of rhs over [pos, pos+lhs_len).
void splice(std::vector<Letter>& buf, size_t pos, size_t lhs_len, const Word& rhs) {
  size_t rhs_len = rhs.size();
  if (rhs_len == lhs_len) {
    for (size_t i = 0; i < rhs_len; ++i) buf[pos + i] = rhs[i];
    return;
  }
  if (rhs_len < lhs_len) {
    for (size_t i = 0; i < rhs_len; ++i) buf[pos + i] = rhs[i];
    buf.erase(buf.begin() + static_cast<ptrdiff_t>(pos + rhs_len),
              buf.begin() + static_cast<ptrdiff_t>(pos + lhs_len));
    return;
  }
  for (size_t i = 0; i < lhs_len; ++i) buf[pos + i] = rhs[i];
  buf.insert(buf.begin() + static_cast<ptrdiff_t>(pos + lhs_len),
             rhs.begin() + static_cast<ptrdiff_t>(lhs_len), rhs.end());
}

}  // namespace

Word reduce(const Word& w, const RewritingSystem& sys, size_t step_cap, ReduceStats* stats) {
  Word current = w;
  size_t steps = 0;
  size_t max_lhs = sys.automaton().max_lhs();
  size_t scan_from = 0;
  while (true) {
    auto redex = find_redex_from(current, sys, scan_from);
    if (!redex) break;
    if (steps >= step_cap) throw ReductionCapExceeded(std::move(current), steps);
    const Rule& rule = sys.rule(static_cast<size_t>(redex->rule));
    splice(current.letters(), redex->position, rule.lhs.size(), rule.rhs);
    ++steps;
    // Positions left of the redex stayed match-free; new matches can only
    // start within max_lhs-1 letters of the splice point.
    scan_from = redex->position >= max_lhs - 1 ? redex->position - (max_lhs - 1) : 0;
  }
  if (stats) stats->steps = steps;
  return current;
}

Word random_reduce(const Word& w, const RewritingSystem& sys, uint64_t seed, size_t step_cap) {
  Word current = w;
  SplitMix64 rng(seed);
  size_t steps = 0;
  while (true) {
    std::vector<Redex> matches = all_matches(current, sys);
    if (matches.empty()) break;
    if (steps >= step_cap) throw ReductionCapExceeded(std::move(current), steps);
    const Redex& pick = matches[static_cast<size_t>(rng.next() % matches.size())];
    const Rule& rule = sys.rule(static_cast<size_t>(pick.rule));
    splice(current.letters(), pick.position, rule.lhs.size(), rule.rhs);
    ++steps;
  }
  return current;
}

bool is_irreducible(const Word& w, const RewritingSystem& sys) {
  const PatternAutomaton& ac = sys.automaton();
  int state = ac.initial();
  for (Letter l : w) {
    state = ac.step(state, l);
    if (ac.dead(state)) return false;
  }
  return true;
}

std::vector<Word> reduction_successors(const Word& w, const RewritingSystem& sys) {
  std::vector<Word> out;
  for (const Redex& m : all_matches(w, sys)) {
    out.push_back(rewrite_once(w, m.position, sys.rule(static_cast<size_t>(m.rule))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void fail_at(std::string_view source, size_t line, const std::string& message) {
  throw ParseError(std::string(source) + ":" + std::to_string(line) + ": " + message);
}

}  // namespace

RewritingSystem parse_rws(std::istream& in, std::string_view source_name) {
  std::optional<Alphabet> alphabet;
  std::vector<Rule> rules;
  RuleTag pending_tag = RuleTag::other;
  bool have_pending_tag = false;

  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.rfind("letters:", 0) == 0) {
      if (alphabet) fail_at(source_name, line_no, "duplicate letters declaration");
      std::istringstream tokens(line.substr(8));
      std::vector<std::string> toks;
      std::string t;
      while (tokens >> t) toks.push_back(t);
      if (toks.empty()) fail_at(source_name, line_no, "letters declaration is empty");
      try {
        alphabet.emplace(std::move(toks));
      } catch (const ParseError& e) {
        fail_at(source_name, line_no, e.what());
      }
      continue;
    }

    if (line.rfind("tag:", 0) == 0) {
      std::string name = trim(line.substr(4));
      auto tag = tag_from_name(name);
      if (!tag) fail_at(source_name, line_no, "unknown rule tag '" + name + "'");
      pending_tag = *tag;
      have_pending_tag = true;
      continue;
    }

    size_t arrow = line.find("->");
    if (arrow == std::string::npos)
      fail_at(source_name, line_no, "expected a rule of the form 'lhs -> rhs'");
    if (!alphabet) fail_at(source_name, line_no, "rule appears before the letters declaration");

    Word lhs, rhs;
    try {
      lhs = alphabet->parse_word(line.substr(0, arrow));
      rhs = alphabet->parse_word(line.substr(arrow + 2));
    } catch (const ParseError& e) {
      fail_at(source_name, line_no, e.what());
    }
    if (lhs.empty()) fail_at(source_name, line_no, "rule lhs must be nonempty");
    rules.push_back(Rule{std::move(lhs), std::move(rhs),
                         have_pending_tag ? pending_tag : RuleTag::other});
    have_pending_tag = false;
  }
  if (!alphabet) throw ParseError(std::string(source_name) + ": missing letters declaration");
  try {
    return RewritingSystem(std::move(*alphabet), std::move(rules));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(source_name) + ": " + e.what());
  }
}

RewritingSystem parse_rws_string(std::string_view text, std::string_view source_name) {
  std::istringstream in{std::string(text)};
  return parse_rws(in, source_name);
}

RewritingSystem load_rws_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_rws(in, path);
}

std::string to_rws_string(const RewritingSystem& sys) {
  std::ostringstream out;
  out << "letters:";
  for (const auto& t : sys.alphabet().tokens()) out << ' ' << t;
  out << '\n';
  for (const Rule& r : sys.rules()) {
    if (r.tag != RuleTag::other) out << "tag: " << tag_name(r.tag) << '\n';
    out << sys.print(r.lhs) << " -> " << sys.print(r.rhs) << '\n';
  }
  return out.str();
}

void save_rws_file(const RewritingSystem& sys, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  out << to_rws_string(sys);
}

}  // namespace fcrs
