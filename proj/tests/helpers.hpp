#pragma once

#include <string>
#include <vector>

#include "fcrs/bundle_graph.hpp"
#include "fcrs/orders.hpp"
#include "fcrs/rng.hpp"
#include "fcrs/word.hpp"

namespace fcrs::testing {

struct SuiteGraph {
  std::string name;
  BundleGraph graph;
};

/// The standing verification suite: three two-vertex graphs, a path, one
/// graph with a red loop, and two with blue loops.
inline std::vector<SuiteGraph> suite_graphs() {
  std::vector<SuiteGraph> out;
  out.push_back({"two-bundle g1 h1 n0", two_bundle_graph(1, 1, 0)});
  out.push_back({"two-bundle g1 h1 n2", two_bundle_graph(1, 1, 2)});
  out.push_back({"two-bundle g2 h1 n-1", two_bundle_graph(2, 1, -1)});

  BundleGraph path3;
  path3.vertices = {{"u", 1}, {"w", 1}, {"v", 1}};
  path3.edges = {{"e1", "u", "w", 1}, {"e2", "v", "w", -1}};
  out.push_back({"three-vertex path", path3});

  BundleGraph red_loop = two_bundle_graph(1, 1, 1);
  red_loop.loops = {{"l", "w", 1}};
  out.push_back({"red loop m1", red_loop});

  BundleGraph blue_loop;
  blue_loop.vertices = {{"v", 1}};
  blue_loop.loops = {{"k", "v", 2}};
  out.push_back({"blue loop m2", blue_loop});

  BundleGraph blue_loop_edge = two_bundle_graph(1, 1, 1);
  blue_loop_edge.loops = {{"k", "v", 1}};
  out.push_back({"blue loop m1 with edge", blue_loop_edge});

  return out;
}

/// Literal transcription of the three recursive clauses of the path
/// ordering, with no memoization: the independent reference for rpo_greater.
inline bool naive_rpo_greater(const Word& u, const Word& v, const Precedence& prec) {
  auto tail = [](const Word& w) {
    Word out;
    for (size_t i = 1; i < w.size(); ++i) out.push_back(w[i]);
    return out;
  };
  if (u.empty()) return false;
  if (v.empty()) return true;
  if (u[0] == v[0] && naive_rpo_greater(tail(u), tail(v), prec)) return true;
  if (prec.greater(u[0], v[0]) && naive_rpo_greater(u, tail(v), prec)) return true;
  Word ut = tail(u);
  return ut == v || naive_rpo_greater(ut, v, prec);
}

inline Word random_word(const Alphabet& alphabet, size_t length, SplitMix64& rng) {
  Word out;
  for (size_t i = 0; i < length; ++i)
    out.push_back(Letter(static_cast<int32_t>(rng.below(alphabet.letter_count()))));
  return out;
}

}  // namespace fcrs::testing
