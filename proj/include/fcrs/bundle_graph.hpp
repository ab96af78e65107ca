#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcrs/orders.hpp"
#include "fcrs/rewriting.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input asks for a boundary gluing outside the supported
/// upper-triangular family (1 n; 0 1).
class UnsupportedGluing : public GraphError {
 public:
  using GraphError::GraphError;
};

struct BundleVertex {
  std::string id;
  int genus = 1;
};

struct BundleEdge {
  std::string id;
  std::string endpoint_a;
  std::string endpoint_b;
  long long twist = 0;  // the n of the gluing matrix (1 n; 0 1)
};

struct BundleLoop {
  std::string id;
  std::string vertex;
  long long twist = 0;  // the m of the gluing matrix (1 m; 0 1)
};

/// A finite graph whose vertices carry circle bundles over punctured
/// surfaces. Non-loop edges must form a tree.
struct BundleGraph {
  std::vector<BundleVertex> vertices;
  std::vector<BundleEdge> edges;
  std::vector<BundleLoop> loops;

  int vertex_index(std::string_view id) const;  // -1 when absent
};

/// Line-oriented .gob text:
///   vertex <id> genus <g>
///   edge <id> <vertexA> <vertexB> n <int>
///   loop <id> <vertex> m <int>
/// An explicit `matrix <k> <n> <k'> <n'>` form is accepted in place of
/// `n <int>` / `m <int>` but anything other than (1 n; 0 1) is rejected.
BundleGraph parse_gob(std::istream& in, std::string_view source_name = "<input>");
BundleGraph parse_gob_string(std::string_view text, std::string_view source_name = "<string>");
BundleGraph load_gob_file(const std::string& path);

enum class VertexColor { blue, red };

struct Coloring {
  std::vector<VertexColor> color_by_vertex;
  /// Per non-loop edge: (blue endpoint index, red endpoint index); the edge
  /// is oriented from its blue vertex to its red vertex.
  std::vector<std::pair<int, int>> oriented_edges;

  VertexColor of(int vertex) const { return color_by_vertex[static_cast<size_t>(vertex)]; }
  int initial(int edge) const { return oriented_edges[static_cast<size_t>(edge)].first; }
  int terminal(int edge) const { return oriented_edges[static_cast<size_t>(edge)].second; }
};

/// Checks that removing loops leaves a tree and every genus is at least one,
/// then 2-colors by alternation from the first declared vertex (which gets
/// `root_color`) and orients each edge blue-to-red.
Coloring validate_and_color(const BundleGraph& graph, VertexColor root_color = VertexColor::blue);

/// Sum of edge twists over the non-loop edges incident to a red vertex.
long long incoming_twist_sum(const BundleGraph& graph, const Coloring& coloring, int red_vertex);

/// The generated alphabet: per vertex a fiber letter x.<v> and surface
/// letters a.<v>.<j>, b.<v>.<j>; per loop the letters r.<l>, s.<l>, t.<l>.
class BundleAlphabet {
 public:
  BundleAlphabet() = default;
  explicit BundleAlphabet(const BundleGraph& graph);

  const Alphabet& alphabet() const { return alphabet_; }

  Letter fiber(int vertex) const;
  Letter surface_a(int vertex, int j) const;  // j is 1-based
  Letter surface_b(int vertex, int j) const;
  Letter loop_r(int loop) const;
  Letter loop_s(int loop) const;
  Letter loop_t(int loop) const;

 private:
  Alphabet alphabet_;
  std::vector<int> vertex_base_;
  std::vector<int> loop_base_;
};

/// Product of the far-end fiber letters of the edges leaving a blue vertex,
/// then r s per loop at it, in declaration order.
Word lambda_word(const BundleGraph& graph, const Coloring& coloring, const BundleAlphabet& ba,
                 int blue_vertex);

/// Product of the far-end fiber letters of the edges entering a red vertex,
/// then r s per loop at it, in declaration order.
Word omega_word(const BundleGraph& graph, const Coloring& coloring, const BundleAlphabet& ba,
                int red_vertex);

/// The full generated system: inverse cancellations, vertex commutation
/// relators, edge relators, four amalgam relators per vertex and eight HNN
/// relators per loop, with every sign variant expanded to a concrete rule.
RewritingSystem generate_system(const BundleGraph& graph, const Coloring& coloring);

/// The sub-system obtained by dropping the blue HNN relators and the
/// cancellations of blue-loop stable letters, together with the exclusion
/// mask for those letters.
SystemPartition generate_restricted(const BundleGraph& graph, const Coloring& coloring);

/// Relator words of the presented group (vertex surface relations after
/// eliminating the edge generators, edge gluings, loop relations, and the
/// fiber centrality commutators). Every one of them must reduce to the empty
/// word under the generated system.
std::vector<Word> defining_relators(const BundleGraph& graph, const Coloring& coloring);

/// The total letter order that orients every restricted rule: red stable
/// letters on top, then red surface letters, blue fiber inverses, red loop
/// letters, blue fibers, blue surface letters, blue loop letters, and red
/// fibers at the bottom; declaration order breaks ties inside each band.
/// Blue-loop stable letters stay unranked.
Precedence canonical_precedence(const BundleGraph& graph, const Coloring& coloring);

/// Same alphabet and rules, new generator names (positionally).
RewritingSystem rename_generators(const RewritingSystem& sys,
                                  std::vector<std::string> new_tokens);

// Built-in systems.
RewritingSystem trivial_group_system();
RewritingSystem integers_system();
RewritingSystem free_abelian_system(int rank);
/// Degenerate one-vertex case of the generated schemata: a closed genus-g
/// surface bundle, no edges or loops.
RewritingSystem one_vertex_system(int genus);
/// Two vertices joined by one edge with twist n, generators renamed to
/// a1..ag, b1..bg, x (blue side) and c1..ch, d1..dh, y (red side).
RewritingSystem two_bundle_system(int genus_blue, int genus_red, long long twist);
BundleGraph two_bundle_graph(int genus_blue, int genus_red, long long twist);

struct NamedSystem {
  std::string name;
  RewritingSystem system;
};
std::vector<NamedSystem> fixtures();

}  // namespace fcrs
