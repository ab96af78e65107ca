#include "fcrs/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcrs {

IrreducibleAutomaton::IrreducibleAutomaton(const RewritingSystem& sys)
    : automaton_(sys.automaton()) {}

bool IrreducibleAutomaton::accepts(const Word& w) const {
  int state = automaton_.initial();
  for (Letter l : w) {
    state = automaton_.step(state, l);
    if (automaton_.dead(state)) return false;
  }
  return true;
}

IrreducibleAutomaton build_automaton(const RewritingSystem& sys) {
  return IrreducibleAutomaton(sys);
}

std::vector<uint64_t> growth_series(const RewritingSystem& sys, size_t max_len) {
  IrreducibleAutomaton automaton(sys);
  size_t states = automaton.state_count();
  size_t letters = automaton.letter_count();

  std::vector<uint64_t> current(states, 0), next(states, 0);
  current[static_cast<size_t>(automaton.initial())] = 1;
  std::vector<uint64_t> counts;
  counts.reserve(max_len + 1);
  counts.push_back(automaton.alive(automaton.initial()) ? 1 : 0);

  for (size_t len = 1; len <= max_len; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (size_t s = 0; s < states; ++s) {
      if (current[s] == 0 || !automaton.alive(static_cast<int>(s))) continue;
      for (size_t c = 0; c < letters; ++c) {
        int to = automaton.step(static_cast<int>(s), Letter(static_cast<int32_t>(c)));
        if (automaton.alive(to)) next[static_cast<size_t>(to)] += current[s];
      }
    }
    current.swap(next);
    uint64_t total = 0;
    for (size_t s = 0; s < states; ++s) total += current[s];
    counts.push_back(total);
  }
  return counts;
}

void enumerate_irreducible(const RewritingSystem& sys, size_t max_len,
                           const std::function<void(const Word&)>& visit) {
  IrreducibleAutomaton automaton(sys);
  size_t letters = automaton.letter_count();
  Word word;
  std::function<void(int)> dfs = [&](int state) {
    visit(word);
    if (word.size() >= max_len) return;
    for (size_t c = 0; c < letters; ++c) {
      Letter l(static_cast<int32_t>(c));
      int to = automaton.step(state, l);
      if (!automaton.alive(to)) continue;
      word.push_back(l);
      dfs(to);
      word.letters().pop_back();
    }
  };
  dfs(automaton.initial());
}

bool words_equal(const Word& w1, const Word& w2, const RewritingSystem& sys, size_t step_cap) {
  return reduce(w1, sys, step_cap) == reduce(w2, sys, step_cap);
}

TwoBundleLetters TwoBundleLetters::from_graph(const BundleGraph& graph, const Coloring& coloring) {
  if (graph.vertices.size() != 2 || graph.edges.size() != 1 || !graph.loops.empty())
    throw GraphError("two-bundle letter classes need exactly two vertices, one edge, no loops");
  TwoBundleLetters out;
  for (size_t v = 0; v < graph.vertices.size(); ++v) {
    bool blue = coloring.of(static_cast<int>(v)) == VertexColor::blue;
    out.by_generator_.push_back(blue ? Class::blue_fiber : Class::red_fiber);
    for (int j = 0; j < graph.vertices[v].genus; ++j) {
      out.by_generator_.push_back(blue ? Class::blue_surface : Class::red_surface);
      out.by_generator_.push_back(blue ? Class::blue_surface : Class::red_surface);
    }
  }
  return out;
}

TwoBundleLetters TwoBundleLetters::two_bundle(int genus_blue, int genus_red) {
  BundleGraph graph = two_bundle_graph(genus_blue, genus_red, 0);
  return from_graph(graph, validate_and_color(graph));
}

namespace {

using Class = TwoBundleLetters::Class;

}  // namespace

bool in_blue_coset_language(const Word& w, const TwoBundleLetters& letters) {
  for (Letter l : w) {
    Class c = letters.of(l);
    if (c != Class::blue_surface && c != Class::red_fiber) return false;
  }
  return w.empty() || letters.of(w[w.size() - 1]) != Class::red_fiber;
}

bool in_edge_subgroup_language(const Word& w, const TwoBundleLetters& letters) {
  size_t i = 0;
  while (i < w.size() && letters.of(w[i]) == Class::red_fiber) ++i;
  while (i < w.size() && letters.of(w[i]) == Class::blue_fiber) ++i;
  return i == w.size();
}

bool in_red_coset_language(const Word& w, const TwoBundleLetters& letters) {
  for (Letter l : w) {
    Class c = letters.of(l);
    if (c != Class::red_surface && c != Class::blue_fiber) return false;
  }
  return w.empty() || letters.of(w[0]) != Class::blue_fiber;
}

BlockDecomposition block_decompose(const Word& w, const RewritingSystem& sys,
                                   const TwoBundleLetters& letters) {
  if (!is_irreducible(w, sys))
    throw std::invalid_argument("block_decompose expects an irreducible word");

  BlockDecomposition out;
  size_t i = 0;
  size_t n = w.size();
  while (i < n) {
    Block block;

    // Maximal blue coset prefix: blue surface and red fiber letters, then
    // strip the trailing red-fiber run back off.
    size_t j = i;
    while (j < n && (letters.of(w[j]) == Class::blue_surface || letters.of(w[j]) == Class::red_fiber))
      ++j;
    while (j > i && letters.of(w[j - 1]) == Class::red_fiber) --j;
    block.blue = w.subword(i, j - i);
    i = j;

    // Fiber part: red-fiber run, then blue-fiber run. Runs are sign-pure in
    // an irreducible word, so this is a power of each fiber.
    j = i;
    while (j < n && letters.of(w[j]) == Class::red_fiber) ++j;
    while (j < n && letters.of(w[j]) == Class::blue_fiber) ++j;
    block.fiber_pair = w.subword(i, j - i);
    i = j;

    // Maximal red coset part; the fiber part consumed every blue-fiber
    // letter, so this never begins with one.
    j = i;
    while (j < n && (letters.of(w[j]) == Class::red_surface || letters.of(w[j]) == Class::blue_fiber))
      ++j;
    block.red = w.subword(i, j - i);
    i = j;

    if (block.blue.empty() && block.fiber_pair.empty() && block.red.empty())
      throw GraphError("block parse made no progress; not a two-bundle word");
    if (!in_blue_coset_language(block.blue, letters) ||
        !in_edge_subgroup_language(block.fiber_pair, letters) ||
        !in_red_coset_language(block.red, letters))
      throw GraphError("block parse produced an invalid block");
    out.blocks.push_back(std::move(block));
  }
  return out;
}

namespace {

// True when every letter of w[from, to) may appear in a word evaluating into
// the blue (resp. red) vertex group: its own letters plus both fibers.
bool blue_segment(const Word& w, size_t from, size_t to, const TwoBundleLetters& letters) {
  for (size_t i = from; i < to; ++i) {
    if (!letters.blue_side(w[i])) return false;
  }
  return true;
}

bool red_segment(const Word& w, size_t from, size_t to, const TwoBundleLetters& letters) {
  for (size_t i = from; i < to; ++i) {
    if (!letters.red_side(w[i])) return false;
  }
  return true;
}

// Minimal number of (blue, red) segment pairs covering the word, with an
// optional cap on segment length. SIZE_MAX when unreachable.
size_t min_segmentation(const Word& nf, const TwoBundleLetters& letters, size_t segment_cap) {
  size_t n = nf.size();
  std::vector<size_t> pairs_to(n + 1, SIZE_MAX);
  pairs_to[0] = 0;
  for (size_t rounds = 0; rounds < n + 1; ++rounds) {
    bool changed = false;
    for (size_t p = 0; p <= n; ++p) {
      if (pairs_to[p] == SIZE_MAX) continue;
      for (size_t q = p; q <= n && q - p <= segment_cap; ++q) {
        if (q > p && !blue_segment(nf, p, q, letters)) break;
        for (size_t r = q; r <= n && r - q <= segment_cap; ++r) {
          if (r > q && !red_segment(nf, q, r, letters)) break;
          if (r == p) continue;  // no progress
          size_t cost = pairs_to[p] + 1;
          if (cost < pairs_to[r]) {
            pairs_to[r] = cost;
            changed = true;
          }
        }
      }
    }
    if (!changed) break;
  }
  return pairs_to[n];
}

}  // namespace

std::optional<size_t> alternation_length(const Word& g, const RewritingSystem& sys,
                                         const TwoBundleLetters& letters, size_t factor_radius) {
  Word nf = reduce(g, sys);
  if (nf.empty()) return 0;

  size_t unbounded = min_segmentation(nf, letters, nf.size());
  size_t bounded = min_segmentation(nf, letters, factor_radius);
  if (bounded == SIZE_MAX || bounded != unbounded) return std::nullopt;
  return bounded;
}

std::vector<std::unordered_set<Word, WordHash>> alternation_product_levels(
    const RewritingSystem& sys, const TwoBundleLetters& letters, size_t factor_radius,
    size_t max_level, size_t prune_len) {
  // Generator-word balls of the two vertex subgroups; both fiber letters
  // belong to both subgroups.
  std::vector<Letter> blue_gens, red_gens;
  for (size_t gidx = 0; gidx < letters.generator_count(); ++gidx) {
    Letter plus = Letter::make(static_cast<int>(gidx), +1);
    for (Letter l : {plus, plus.inverse()}) {
      if (letters.blue_side(l)) blue_gens.push_back(l);
      if (letters.red_side(l)) red_gens.push_back(l);
    }
  }

  auto ball = [&](const std::vector<Letter>& gens) {
    std::unordered_set<Word, WordHash> out;
    std::vector<Word> frontier{Word{}};
    out.insert(Word{});
    for (size_t depth = 0; depth < factor_radius; ++depth) {
      std::vector<Word> next;
      for (const Word& w : frontier) {
        for (Letter l : gens) {
          Word extended = w;
          extended.push_back(l);
          Word nf = reduce(extended, sys);
          if (out.insert(nf).second) next.push_back(std::move(nf));
        }
      }
      frontier = std::move(next);
    }
    return std::vector<Word>(out.begin(), out.end());
  };

  std::vector<Word> blue_ball = ball(blue_gens);
  std::vector<Word> red_ball = ball(red_gens);

  std::vector<std::unordered_set<Word, WordHash>> levels(max_level + 1);
  levels[0].insert(Word{});
  for (size_t k = 1; k <= max_level; ++k) {
    // Stage through the blue factor first, pruning between stages.
    std::unordered_set<Word, WordHash> after_blue;
    for (const Word& base : levels[k - 1]) {
      for (const Word& a : blue_ball) {
        Word nf = reduce(concat(base, a), sys);
        if (nf.size() <= prune_len) after_blue.insert(std::move(nf));
      }
    }
    for (const Word& base : after_blue) {
      for (const Word& c : red_ball) {
        Word nf = reduce(concat(base, c), sys);
        if (nf.size() <= prune_len) levels[k].insert(std::move(nf));
      }
    }
  }
  return levels;
}

}  // namespace fcrs
