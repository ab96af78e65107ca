#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "fcrs/bundle_graph.hpp"
#include "fcrs/rewriting.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

/// Deterministic automaton accepting exactly the words that contain no rule
/// lhs as a factor. States are lhs-prefix residues; a word is rejected the
/// moment a full lhs has been read.
class IrreducibleAutomaton {
 public:
  explicit IrreducibleAutomaton(const RewritingSystem& sys);

  bool accepts(const Word& w) const;

  int initial() const { return 0; }
  int step(int state, Letter l) const { return automaton_.step(state, l); }
  bool alive(int state) const { return !automaton_.dead(state); }
  size_t state_count() const { return automaton_.state_count(); }
  size_t letter_count() const { return automaton_.letter_count(); }

 private:
  PatternAutomaton automaton_;
};

IrreducibleAutomaton build_automaton(const RewritingSystem& sys);

/// Number of irreducible words per length 0..max_len, by dynamic programming
/// on the automaton. Over a complete system these count group elements.
std::vector<uint64_t> growth_series(const RewritingSystem& sys, size_t max_len);

/// Visits every irreducible word of length <= max_len in length-lexicographic
/// DFS order, the empty word first.
void enumerate_irreducible(const RewritingSystem& sys, size_t max_len,
                           const std::function<void(const Word&)>& visit);

/// Equality of represented group elements: reduce both, compare. Meaningful
/// only over a verified-complete system.
bool words_equal(const Word& w1, const Word& w2, const RewritingSystem& sys,
                 size_t step_cap = kDefaultStepCap);

/// Letter classification for a two-vertex, one-edge, loop-free generated
/// system: blue surface letters, the blue fiber, red surface letters, the
/// red fiber.
class TwoBundleLetters {
 public:
  enum class Class { blue_surface, red_surface, blue_fiber, red_fiber };

  static TwoBundleLetters from_graph(const BundleGraph& graph, const Coloring& coloring);
  /// Layout of two_bundle_system(genus_blue, genus_red, ·).
  static TwoBundleLetters two_bundle(int genus_blue, int genus_red);

  /// Throws std::out_of_range for letters outside the classified alphabet.
  Class of(Letter l) const { return by_generator_.at(static_cast<size_t>(l.generator())); }
  size_t generator_count() const { return by_generator_.size(); }

  bool blue_side(Letter l) const {
    Class c = of(l);
    return c == Class::blue_surface || c == Class::blue_fiber || c == Class::red_fiber;
  }
  bool red_side(Letter l) const {
    Class c = of(l);
    return c == Class::red_surface || c == Class::blue_fiber || c == Class::red_fiber;
  }

 private:
  std::vector<Class> by_generator_;
};

/// In the irreducible language of a two-bundle system:
///   - `blue_coset(w)`: letters from {blue surface, red fiber}, not ending in
///     the red fiber: coset representatives of the blue vertex group modulo
///     the edge subgroup;
///   - `edge_subgroup(w)`: a red-fiber run followed by a blue-fiber run;
///   - `red_coset(w)`: letters from {red surface, blue fiber}, not beginning
///     with the blue fiber.
bool in_blue_coset_language(const Word& w, const TwoBundleLetters& letters);
bool in_edge_subgroup_language(const Word& w, const TwoBundleLetters& letters);
bool in_red_coset_language(const Word& w, const TwoBundleLetters& letters);

struct Block {
  Word blue;        // maximal blue coset part
  Word fiber_pair;  // red-fiber power times blue-fiber power
  Word red;         // maximal red coset part
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  size_t length() const { return blocks.size(); }
};

/// Greedy maximal left-to-right parse of an irreducible word into
/// (blue, fiber, red) triples. Throws std::invalid_argument on reducible
/// input and GraphError when the parse violates the block invariants.
BlockDecomposition block_decompose(const Word& w, const RewritingSystem& sys,
                                   const TwoBundleLetters& letters);

/// Minimal number k of alternating (blue-group, red-group) factor pairs whose
/// product is the given element, found by exhaustive segmentation of its
/// normal form; every segment is an explicit witness word in the subgroup's
/// generators. Returns nullopt when no minimal segmentation fits inside the
/// factor radius, so a returned value is always witnessed within the stated
/// bounds.
std::optional<size_t> alternation_length(const Word& g, const RewritingSystem& sys,
                                         const TwoBundleLetters& letters, size_t factor_radius);

/// Bounded brute force over actual products: level k holds the normal forms
/// of A1 C1 ... Ak Ck with every factor a word of generator-length at most
/// `factor_radius` in its subgroup (fiber letters included on both sides).
/// Normal forms longer than `prune_len` are dropped between levels. Test
/// oracle; exponential, keep the bounds small.
std::vector<std::unordered_set<Word, WordHash>> alternation_product_levels(
    const RewritingSystem& sys, const TwoBundleLetters& letters, size_t factor_radius,
    size_t max_level, size_t prune_len);

}  // namespace fcrs
