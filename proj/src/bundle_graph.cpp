#include "fcrs/bundle_graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace fcrs {

int BundleGraph::vertex_index(std::string_view id) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

namespace {

[[noreturn]] void fail_at(std::string_view source, size_t line, const std::string& message) {
  throw ParseError(std::string(source) + ":" + std::to_string(line) + ": " + message);
}

bool parse_int(const std::string& token, long long& out) {
  try {
    size_t used = 0;
    out = std::stoll(token, &used);
    return used == token.size();
  } catch (...) {
    return false;
  }
}

// Reads either `n <int>` / `m <int>` or `matrix <k> <n> <k'> <n'>`; only the
// upper-triangular family is supported.
long long parse_twist(std::vector<std::string>& fields, size_t first, std::string_view key,
                      std::string_view source, size_t line) {
  if (fields.size() == first + 2 && fields[first] == key) {
    long long n = 0;
    if (!parse_int(fields[first + 1], n))
      fail_at(source, line, "expected an integer after '" + std::string(key) + "'");
    return n;
  }
  if (fields.size() == first + 5 && fields[first] == "matrix") {
    long long m[4];
    for (int i = 0; i < 4; ++i) {
      if (!parse_int(fields[first + 1 + static_cast<size_t>(i)], m[i]))
        fail_at(source, line, "expected four integers after 'matrix'");
    }
    if (m[0] != 1 || m[2] != 0 || m[3] != 1)
      throw UnsupportedGluing(std::string(source) + ":" + std::to_string(line) +
                              ": gluing matrix (" + std::to_string(m[0]) + " " +
                              std::to_string(m[1]) + "; " + std::to_string(m[2]) + " " +
                              std::to_string(m[3]) +
                              ") is not supported; only matrices of the form (1 n; 0 1) are");
    return m[1];
  }
  fail_at(source, line,
          "expected '" + std::string(key) + " <int>' or 'matrix <k> <n> <k'> <n'>'");
}

}  // namespace

BundleGraph parse_gob(std::istream& in, std::string_view source_name) {
  BundleGraph graph;
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields_in(raw);
    std::vector<std::string> fields;
    std::string f;
    while (fields_in >> f) {
      if (f[0] == '#') break;
      fields.push_back(f);
    }
    if (fields.empty()) continue;

    if (fields[0] == "vertex") {
      if (fields.size() != 4 || fields[2] != "genus")
        fail_at(source_name, line_no, "expected 'vertex <id> genus <g>'");
      long long genus = 0;
      if (!parse_int(fields[3], genus))
        fail_at(source_name, line_no, "expected an integer genus");
      graph.vertices.push_back(BundleVertex{fields[1], static_cast<int>(genus)});
    } else if (fields[0] == "edge") {
      if (fields.size() < 4) fail_at(source_name, line_no, "expected 'edge <id> <a> <b> n <int>'");
      long long twist = parse_twist(fields, 4, "n", source_name, line_no);
      graph.edges.push_back(BundleEdge{fields[1], fields[2], fields[3], twist});
    } else if (fields[0] == "loop") {
      if (fields.size() < 3) fail_at(source_name, line_no, "expected 'loop <id> <vertex> m <int>'");
      long long twist = parse_twist(fields, 3, "m", source_name, line_no);
      graph.loops.push_back(BundleLoop{fields[1], fields[2], twist});
    } else {
      fail_at(source_name, line_no, "unknown directive '" + fields[0] + "'");
    }
  }
  return graph;
}

BundleGraph parse_gob_string(std::string_view text, std::string_view source_name) {
  std::istringstream in{std::string(text)};
  return parse_gob(in, source_name);
}

BundleGraph load_gob_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_gob(in, path);
}

Coloring validate_and_color(const BundleGraph& graph, VertexColor root_color) {
  if (graph.vertices.empty()) throw GraphError("graph has no vertices");

  std::set<std::string> ids;
  for (const auto& v : graph.vertices) {
    if (!ids.insert(v.id).second) throw GraphError("duplicate vertex id '" + v.id + "'");
    if (v.genus < 1)
      throw GraphError("unsupported genus " + std::to_string(v.genus) + " at vertex '" + v.id +
                       "'; every vertex surface needs genus at least 1");
  }
  ids.clear();
  for (const auto& e : graph.edges) {
    if (!ids.insert(e.id).second) throw GraphError("duplicate edge id '" + e.id + "'");
    if (graph.vertex_index(e.endpoint_a) < 0 || graph.vertex_index(e.endpoint_b) < 0)
      throw GraphError("edge '" + e.id + "' references an undeclared vertex");
    if (e.endpoint_a == e.endpoint_b)
      throw GraphError("edge '" + e.id + "' is a loop; declare it with the loop directive");
  }
  ids.clear();
  for (const auto& l : graph.loops) {
    if (!ids.insert(l.id).second) throw GraphError("duplicate loop id '" + l.id + "'");
    if (graph.vertex_index(l.vertex) < 0)
      throw GraphError("loop '" + l.id + "' references an undeclared vertex");
  }

  size_t n = graph.vertices.size();
  if (graph.edges.size() != n - 1)
    throw GraphError("not a tree after removing loops: " + std::to_string(n) + " vertices need " +
                     std::to_string(n - 1) + " non-loop edges, found " +
                     std::to_string(graph.edges.size()));

  std::vector<std::vector<int>> adjacency(n);
  for (const auto& e : graph.edges) {
    int a = graph.vertex_index(e.endpoint_a);
    int b = graph.vertex_index(e.endpoint_b);
    adjacency[static_cast<size_t>(a)].push_back(b);
    adjacency[static_cast<size_t>(b)].push_back(a);
  }

  Coloring coloring;
  coloring.color_by_vertex.assign(n, root_color);
  std::vector<bool> visited(n, false);
  std::deque<int> queue{0};
  visited[0] = true;
  VertexColor other = root_color == VertexColor::blue ? VertexColor::red : VertexColor::blue;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int u : adjacency[static_cast<size_t>(v)]) {
      if (visited[static_cast<size_t>(u)]) continue;
      visited[static_cast<size_t>(u)] = true;
      coloring.color_by_vertex[static_cast<size_t>(u)] =
          coloring.of(v) == root_color ? other : root_color;
      queue.push_back(u);
    }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end())
    throw GraphError("not a tree after removing loops: the graph is disconnected");

  coloring.oriented_edges.reserve(graph.edges.size());
  for (const auto& e : graph.edges) {
    int a = graph.vertex_index(e.endpoint_a);
    int b = graph.vertex_index(e.endpoint_b);
    if (coloring.of(a) == coloring.of(b))
      throw GraphError("edge '" + e.id + "' joins two vertices of the same color");
    if (coloring.of(a) == VertexColor::blue)
      coloring.oriented_edges.emplace_back(a, b);
    else
      coloring.oriented_edges.emplace_back(b, a);
  }
  return coloring;
}

long long incoming_twist_sum(const BundleGraph& graph, const Coloring& coloring, int red_vertex) {
  if (coloring.of(red_vertex) != VertexColor::red)
    throw GraphError("incoming_twist_sum expects a red vertex");
  long long sum = 0;
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (coloring.terminal(static_cast<int>(e)) == red_vertex) sum += graph.edges[e].twist;
  }
  return sum;
}

BundleAlphabet::BundleAlphabet(const BundleGraph& graph) {
  for (const auto& v : graph.vertices) {
    vertex_base_.push_back(static_cast<int>(alphabet_.generator_count()));
    alphabet_.add_generator("x." + v.id);
    for (int j = 1; j <= v.genus; ++j) {
      alphabet_.add_generator("a." + v.id + "." + std::to_string(j));
      alphabet_.add_generator("b." + v.id + "." + std::to_string(j));
    }
  }
  for (const auto& l : graph.loops) {
    loop_base_.push_back(static_cast<int>(alphabet_.generator_count()));
    alphabet_.add_generator("r." + l.id);
    alphabet_.add_generator("s." + l.id);
    alphabet_.add_generator("t." + l.id);
  }
}

Letter BundleAlphabet::fiber(int vertex) const {
  return alphabet_.positive(vertex_base_[static_cast<size_t>(vertex)]);
}
Letter BundleAlphabet::surface_a(int vertex, int j) const {
  return alphabet_.positive(vertex_base_[static_cast<size_t>(vertex)] + 2 * (j - 1) + 1);
}
Letter BundleAlphabet::surface_b(int vertex, int j) const {
  return alphabet_.positive(vertex_base_[static_cast<size_t>(vertex)] + 2 * (j - 1) + 2);
}
Letter BundleAlphabet::loop_r(int loop) const {
  return alphabet_.positive(loop_base_[static_cast<size_t>(loop)]);
}
Letter BundleAlphabet::loop_s(int loop) const {
  return alphabet_.positive(loop_base_[static_cast<size_t>(loop)] + 1);
}
Letter BundleAlphabet::loop_t(int loop) const {
  return alphabet_.positive(loop_base_[static_cast<size_t>(loop)] + 2);
}

Word lambda_word(const BundleGraph& graph, const Coloring& coloring, const BundleAlphabet& ba,
                 int blue_vertex) {
  if (coloring.of(blue_vertex) != VertexColor::blue)
    throw GraphError("lambda_word expects a blue vertex");
  Word out;
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (coloring.initial(static_cast<int>(e)) == blue_vertex)
      out.push_back(ba.fiber(coloring.terminal(static_cast<int>(e))));
  }
  for (size_t l = 0; l < graph.loops.size(); ++l) {
    if (graph.vertex_index(graph.loops[l].vertex) == blue_vertex) {
      out.push_back(ba.loop_r(static_cast<int>(l)));
      out.push_back(ba.loop_s(static_cast<int>(l)));
    }
  }
  return out;
}

Word omega_word(const BundleGraph& graph, const Coloring& coloring, const BundleAlphabet& ba,
                int red_vertex) {
  if (coloring.of(red_vertex) != VertexColor::red)
    throw GraphError("omega_word expects a red vertex");
  Word out;
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (coloring.terminal(static_cast<int>(e)) == red_vertex)
      out.push_back(ba.fiber(coloring.initial(static_cast<int>(e))));
  }
  for (size_t l = 0; l < graph.loops.size(); ++l) {
    if (graph.vertex_index(graph.loops[l].vertex) == red_vertex) {
      out.push_back(ba.loop_r(static_cast<int>(l)));
      out.push_back(ba.loop_s(static_cast<int>(l)));
    }
  }
  return out;
}

namespace {

constexpr int kSigns[2] = {+1, -1};

Letter signed_letter(Letter base, int sign) { return sign < 0 ? base.inverse() : base; }

// Commutator [p, q] = p q p^-1 q^-1 as a word.
Word commutator(Letter p, Letter q) {
  return Word{p, q, p.inverse(), q.inverse()};
}

// Descending product of [b_j, a_j] for j = genus .. 2; empty when genus = 1.
Word descending_commutators(const BundleAlphabet& ba, int vertex, int genus) {
  Word out;
  for (int j = genus; j >= 2; --j)
    out.append(commutator(ba.surface_b(vertex, j), ba.surface_a(vertex, j)));
  return out;
}

// Ascending product of [a_j, b_j] for j = 2 .. genus; empty when genus = 1.
Word ascending_commutators(const BundleAlphabet& ba, int vertex, int genus) {
  Word out;
  for (int j = 2; j <= genus; ++j)
    out.append(commutator(ba.surface_a(vertex, j), ba.surface_b(vertex, j)));
  return out;
}

Word wrap(std::initializer_list<Letter> letters) { return Word(letters); }

Word join(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.append(p);
  return out;
}

}  // namespace

RewritingSystem generate_system(const BundleGraph& graph, const Coloring& coloring) {
  BundleAlphabet ba(graph);
  const Alphabet& alphabet = ba.alphabet();
  std::vector<Rule> rules;

  for (size_t g = 0; g < alphabet.generator_count(); ++g) {
    Letter z = alphabet.positive(static_cast<int>(g));
    rules.push_back(Rule{wrap({z, z.inverse()}), Word{}, RuleTag::inverse_cancellation});
    rules.push_back(Rule{wrap({z.inverse(), z}), Word{}, RuleTag::inverse_cancellation});
  }

  auto add_commutation = [&rules](Letter first, Letter second, RuleTag tag) {
    for (int sa : kSigns) {
      for (int sb : kSigns) {
        Letter p = signed_letter(first, sa), q = signed_letter(second, sb);
        rules.push_back(Rule{wrap({p, q}), wrap({q, p}), tag});
      }
    }
  };

  // Blue vertex relators: the fiber letter moves right past the vertex's own
  // surface and loop letters.
  for (size_t v = 0; v < graph.vertices.size(); ++v) {
    if (coloring.of(static_cast<int>(v)) != VertexColor::blue) continue;
    Letter x = ba.fiber(static_cast<int>(v));
    for (int j = 1; j <= graph.vertices[v].genus; ++j) {
      add_commutation(x, ba.surface_a(static_cast<int>(v), j), RuleTag::blue_vertex);
      add_commutation(x, ba.surface_b(static_cast<int>(v), j), RuleTag::blue_vertex);
    }
    for (size_t l = 0; l < graph.loops.size(); ++l) {
      if (graph.vertex_index(graph.loops[l].vertex) != static_cast<int>(v)) continue;
      add_commutation(x, ba.loop_r(static_cast<int>(l)), RuleTag::blue_vertex);
      add_commutation(x, ba.loop_s(static_cast<int>(l)), RuleTag::blue_vertex);
    }
  }

  // Red vertex relators: surface and loop letters move right past the fiber.
  for (size_t w = 0; w < graph.vertices.size(); ++w) {
    if (coloring.of(static_cast<int>(w)) != VertexColor::red) continue;
    Letter x = ba.fiber(static_cast<int>(w));
    for (int j = 1; j <= graph.vertices[w].genus; ++j) {
      add_commutation(ba.surface_a(static_cast<int>(w), j), x, RuleTag::red_vertex);
      add_commutation(ba.surface_b(static_cast<int>(w), j), x, RuleTag::red_vertex);
    }
    for (size_t l = 0; l < graph.loops.size(); ++l) {
      if (graph.vertex_index(graph.loops[l].vertex) != static_cast<int>(w)) continue;
      add_commutation(ba.loop_r(static_cast<int>(l)), x, RuleTag::red_vertex);
      add_commutation(ba.loop_s(static_cast<int>(l)), x, RuleTag::red_vertex);
    }
  }

  for (size_t e = 0; e < graph.edges.size(); ++e) {
    add_commutation(ba.fiber(coloring.initial(static_cast<int>(e))),
                    ba.fiber(coloring.terminal(static_cast<int>(e))), RuleTag::edge);
  }

  // Four amalgam relators per vertex.
  for (size_t vi = 0; vi < graph.vertices.size(); ++vi) {
    int v = static_cast<int>(vi);
    int genus = graph.vertices[vi].genus;
    Letter a1 = ba.surface_a(v, 1), b1 = ba.surface_b(v, 1);
    Word down = descending_commutators(ba, v, genus);
    Word up = ascending_commutators(ba, v, genus);
    if (coloring.of(v) == VertexColor::blue) {
      Word lambda = lambda_word(graph, coloring, ba, v);
      rules.push_back(Rule{wrap({a1, b1}), join({lambda, down, wrap({b1, a1})}),
                           RuleTag::blue_amalgam});
      rules.push_back(Rule{wrap({a1, b1.inverse()}),
                           join({wrap({b1.inverse()}), up, formal_inverse(lambda), wrap({a1})}),
                           RuleTag::blue_amalgam});
      rules.push_back(Rule{join({wrap({a1.inverse()}), lambda, down, wrap({b1})}),
                           wrap({b1, a1.inverse()}), RuleTag::blue_amalgam});
      rules.push_back(Rule{wrap({a1.inverse(), b1.inverse()}),
                           join({wrap({b1.inverse(), a1.inverse()}), lambda, down}),
                           RuleTag::blue_amalgam});
    } else {
      Word omega = omega_word(graph, coloring, ba, v);
      Letter x = ba.fiber(v);
      long long n = incoming_twist_sum(graph, coloring, v);
      rules.push_back(Rule{wrap({a1, b1}),
                           join({letter_power(x, -n), omega, down, wrap({b1, a1})}),
                           RuleTag::red_amalgam});
      rules.push_back(Rule{wrap({a1, b1.inverse()}),
                           join({letter_power(x, n), wrap({b1.inverse()}), up,
                                 formal_inverse(omega), wrap({a1})}),
                           RuleTag::red_amalgam});
      rules.push_back(Rule{join({wrap({a1.inverse()}), omega, down, wrap({b1})}),
                           join({letter_power(x, n), wrap({b1, a1.inverse()})}),
                           RuleTag::red_amalgam});
      rules.push_back(Rule{wrap({a1.inverse(), b1.inverse()}),
                           join({letter_power(x, -n), wrap({b1.inverse(), a1.inverse()}), omega,
                                 down}),
                           RuleTag::red_amalgam});
    }
  }

  // Eight HNN relators per loop.
  for (size_t li = 0; li < graph.loops.size(); ++li) {
    int l = static_cast<int>(li);
    int v = graph.vertex_index(graph.loops[li].vertex);
    long long m = graph.loops[li].twist;
    Letter x = ba.fiber(v), r = ba.loop_r(l), s = ba.loop_s(l), t = ba.loop_t(l);
    if (coloring.of(v) == VertexColor::blue) {
      rules.push_back(Rule{wrap({x, t}), wrap({t, r}), RuleTag::blue_hnn});
      rules.push_back(Rule{wrap({x.inverse(), t}), wrap({t, r.inverse()}), RuleTag::blue_hnn});
      rules.push_back(Rule{wrap({r, t.inverse()}), wrap({t.inverse(), x}), RuleTag::blue_hnn});
      rules.push_back(
          Rule{wrap({r.inverse(), t.inverse()}), wrap({t.inverse(), x.inverse()}), RuleTag::blue_hnn});
      rules.push_back(Rule{wrap({s, t}), join({wrap({t}), letter_power(r, -m), wrap({x})}),
                           RuleTag::blue_hnn});
      rules.push_back(Rule{wrap({s.inverse(), t}),
                           join({wrap({t}), letter_power(r, m), wrap({x.inverse()})}),
                           RuleTag::blue_hnn});
      rules.push_back(Rule{wrap({x, t.inverse()}),
                           join({wrap({t.inverse(), s}), letter_power(x, m)}), RuleTag::blue_hnn});
      rules.push_back(Rule{wrap({x.inverse(), t.inverse()}),
                           join({wrap({t.inverse(), s.inverse()}), letter_power(x, -m)}),
                           RuleTag::blue_hnn});
    } else {
      rules.push_back(Rule{wrap({t, r}), wrap({x, t}), RuleTag::red_hnn});
      rules.push_back(Rule{wrap({t, r.inverse()}), wrap({x.inverse(), t}), RuleTag::red_hnn});
      rules.push_back(Rule{wrap({t.inverse(), x}), wrap({r, t.inverse()}), RuleTag::red_hnn});
      rules.push_back(
          Rule{wrap({t.inverse(), x.inverse()}), wrap({r.inverse(), t.inverse()}), RuleTag::red_hnn});
      rules.push_back(Rule{wrap({t, x}), join({letter_power(x, m), wrap({s, t})}),
                           RuleTag::red_hnn});
      rules.push_back(Rule{wrap({t, x.inverse()}),
                           join({letter_power(x, -m), wrap({s.inverse(), t})}), RuleTag::red_hnn});
      rules.push_back(Rule{wrap({t.inverse(), s}),
                           join({wrap({x}), letter_power(r, -m), wrap({t.inverse()})}),
                           RuleTag::red_hnn});
      rules.push_back(Rule{wrap({t.inverse(), s.inverse()}),
                           join({wrap({x.inverse()}), letter_power(r, m), wrap({t.inverse()})}),
                           RuleTag::red_hnn});
    }
  }

  return RewritingSystem(alphabet, std::move(rules));
}

SystemPartition generate_restricted(const BundleGraph& graph, const Coloring& coloring) {
  RewritingSystem full = generate_system(graph, coloring);
  BundleAlphabet ba(graph);

  std::vector<bool> excluded(full.alphabet().letter_count(), false);
  for (size_t l = 0; l < graph.loops.size(); ++l) {
    int v = graph.vertex_index(graph.loops[l].vertex);
    if (coloring.of(v) != VertexColor::blue) continue;
    Letter t = ba.loop_t(static_cast<int>(l));
    excluded[static_cast<size_t>(t.code)] = true;
    excluded[static_cast<size_t>(t.inverse().code)] = true;
  }

  std::vector<Rule> kept;
  for (const Rule& r : full.rules()) {
    if (r.tag == RuleTag::blue_hnn) continue;
    bool mentions_excluded = false;
    for (const Word* side : {&r.lhs, &r.rhs}) {
      for (Letter l : *side) mentions_excluded |= excluded[static_cast<size_t>(l.code)];
    }
    if (mentions_excluded) continue;
    kept.push_back(r);
  }
  return SystemPartition(RewritingSystem(full.alphabet(), std::move(kept)), std::move(excluded));
}

std::vector<Word> defining_relators(const BundleGraph& graph, const Coloring& coloring) {
  BundleAlphabet ba(graph);
  std::vector<Word> relators;

  // Vertex surface relations, with the edge generators eliminated: the edge
  // generator toward the red side becomes the far fiber, the one toward the
  // blue side becomes x_blue x_red^-n.
  for (size_t vi = 0; vi < graph.vertices.size(); ++vi) {
    int v = static_cast<int>(vi);
    Word left;
    if (coloring.of(v) == VertexColor::blue) {
      left = lambda_word(graph, coloring, ba, v);
    } else {
      for (size_t e = 0; e < graph.edges.size(); ++e) {
        if (coloring.terminal(static_cast<int>(e)) != v) continue;
        left.push_back(ba.fiber(coloring.initial(static_cast<int>(e))));
        left.append(letter_power(ba.fiber(v), -graph.edges[e].twist));
      }
      for (size_t l = 0; l < graph.loops.size(); ++l) {
        if (graph.vertex_index(graph.loops[l].vertex) != v) continue;
        left.push_back(ba.loop_r(static_cast<int>(l)));
        left.push_back(ba.loop_s(static_cast<int>(l)));
      }
    }
    Word right;
    for (int j = 1; j <= graph.vertices[vi].genus; ++j)
      right.append(commutator(ba.surface_a(v, j), ba.surface_b(v, j)));
    relators.push_back(concat(left, formal_inverse(right)));
  }

  // Edge gluings x_blue = (x_blue x_red^-n) x_red^n; trivial after the
  // substitution.
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    Letter xb = ba.fiber(coloring.initial(static_cast<int>(e)));
    Letter xr = ba.fiber(coloring.terminal(static_cast<int>(e)));
    Word rhs = concat(concat(Word{xb}, letter_power(xr, -graph.edges[e].twist)),
                      letter_power(xr, graph.edges[e].twist));
    relators.push_back(concat(Word{xb}, formal_inverse(rhs)));
  }

  // Loop relations t x t^-1 = s x^m and t r t^-1 = x.
  for (size_t li = 0; li < graph.loops.size(); ++li) {
    int l = static_cast<int>(li);
    int v = graph.vertex_index(graph.loops[li].vertex);
    Letter x = ba.fiber(v), r = ba.loop_r(l), s = ba.loop_s(l), t = ba.loop_t(l);
    Word conj_x{t, x, t.inverse()};
    relators.push_back(concat(conj_x, formal_inverse(concat(Word{s}, letter_power(x, graph.loops[li].twist)))));
    Word conj_r{t, r, t.inverse()};
    relators.push_back(concat(conj_r, formal_inverse(Word{x})));
  }

  // Fiber centrality in each vertex group.
  for (size_t vi = 0; vi < graph.vertices.size(); ++vi) {
    int v = static_cast<int>(vi);
    Letter x = ba.fiber(v);
    for (int j = 1; j <= graph.vertices[vi].genus; ++j) {
      relators.push_back(commutator(x, ba.surface_a(v, j)));
      relators.push_back(commutator(x, ba.surface_b(v, j)));
    }
  }
  for (size_t li = 0; li < graph.loops.size(); ++li) {
    int l = static_cast<int>(li);
    Letter x = ba.fiber(graph.vertex_index(graph.loops[li].vertex));
    relators.push_back(commutator(x, ba.loop_r(l)));
    relators.push_back(commutator(x, ba.loop_s(l)));
  }
  return relators;
}

Precedence canonical_precedence(const BundleGraph& graph, const Coloring& coloring) {
  BundleAlphabet ba(graph);
  std::vector<Letter> chain;

  auto is_blue_loop = [&](size_t l) {
    return coloring.of(graph.vertex_index(graph.loops[l].vertex)) == VertexColor::blue;
  };

  // Red stable letters, inverse above plain.
  for (size_t l = 0; l < graph.loops.size(); ++l) {
    if (is_blue_loop(l)) continue;
    chain.push_back(ba.loop_t(static_cast<int>(l)).inverse());
    chain.push_back(ba.loop_t(static_cast<int>(l)));
  }
  // Red surface letters.
  for (size_t v = 0; v < graph.vertices.size(); ++v) {
    if (coloring.of(static_cast<int>(v)) != VertexColor::red) continue;
    for (int j = 1; j <= graph.vertices[v].genus; ++j) {
      chain.push_back(ba.surface_a(static_cast<int>(v), j).inverse());
      chain.push_back(ba.surface_a(static_cast<int>(v), j));
      chain.push_back(ba.surface_b(static_cast<int>(v), j).inverse());
      chain.push_back(ba.surface_b(static_cast<int>(v), j));
    }
  }
  // Blue fiber inverses.
  for (size_t v = 0; v < graph.vertices.size(); ++v) {
    if (coloring.of(static_cast<int>(v)) == VertexColor::blue)
      chain.push_back(ba.fiber(static_cast<int>(v)).inverse());
  }
  // Red loop letters.
  for (size_t l = 0; l < graph.loops.size(); ++l) {
    if (is_blue_loop(l)) continue;
    chain.push_back(ba.loop_r(static_cast<int>(l)).inverse());
    chain.push_back(ba.loop_r(static_cast<int>(l)));
    chain.push_back(ba.loop_s(static_cast<int>(l)).inverse());
    chain.push_back(ba.loop_s(static_cast<int>(l)));
  }
  // Blue fibers.
  for (size_t v = 0; v < graph.vertices.size(); ++v) {
    if (coloring.of(static_cast<int>(v)) == VertexColor::blue)
      chain.push_back(ba.fiber(static_cast<int>(v)));
  }
  // Blue surface letters.
  for (size_t v = 0; v < graph.vertices.size(); ++v) {
    if (coloring.of(static_cast<int>(v)) != VertexColor::blue) continue;
    for (int j = 1; j <= graph.vertices[v].genus; ++j) {
      chain.push_back(ba.surface_a(static_cast<int>(v), j).inverse());
      chain.push_back(ba.surface_a(static_cast<int>(v), j));
      chain.push_back(ba.surface_b(static_cast<int>(v), j).inverse());
      chain.push_back(ba.surface_b(static_cast<int>(v), j));
    }
  }
  // Blue loop letters; their stable letters stay unranked.
  for (size_t l = 0; l < graph.loops.size(); ++l) {
    if (!is_blue_loop(l)) continue;
    chain.push_back(ba.loop_r(static_cast<int>(l)).inverse());
    chain.push_back(ba.loop_r(static_cast<int>(l)));
    chain.push_back(ba.loop_s(static_cast<int>(l)).inverse());
    chain.push_back(ba.loop_s(static_cast<int>(l)));
  }
  // Red fibers at the bottom.
  for (size_t v = 0; v < graph.vertices.size(); ++v) {
    if (coloring.of(static_cast<int>(v)) == VertexColor::red) {
      chain.push_back(ba.fiber(static_cast<int>(v)).inverse());
      chain.push_back(ba.fiber(static_cast<int>(v)));
    }
  }
  return Precedence::from_chain(ba.alphabet(), chain);
}

RewritingSystem rename_generators(const RewritingSystem& sys, std::vector<std::string> new_tokens) {
  if (new_tokens.size() != sys.alphabet().generator_count())
    throw ParseError("rename_generators needs exactly one token per generator");
  return RewritingSystem(Alphabet(std::move(new_tokens)), sys.rules());
}

RewritingSystem trivial_group_system() {
  Alphabet alphabet({"e"});
  Letter e = alphabet.positive(0);
  std::vector<Rule> rules{{Word{e}, Word{}, RuleTag::other},
                          {Word{e.inverse()}, Word{}, RuleTag::other}};
  return RewritingSystem(std::move(alphabet), std::move(rules));
}

RewritingSystem integers_system() {
  Alphabet alphabet({"x"});
  Letter x = alphabet.positive(0);
  std::vector<Rule> rules{{Word{x, x.inverse()}, Word{}, RuleTag::inverse_cancellation},
                          {Word{x.inverse(), x}, Word{}, RuleTag::inverse_cancellation}};
  return RewritingSystem(std::move(alphabet), std::move(rules));
}

RewritingSystem free_abelian_system(int rank) {
  if (rank < 1) throw ParseError("free_abelian_system needs rank at least 1");
  std::vector<std::string> tokens;
  if (rank <= 3) {
    const char* names[] = {"x", "y", "z"};
    for (int i = 0; i < rank; ++i) tokens.emplace_back(names[i]);
  } else {
    for (int i = 1; i <= rank; ++i) tokens.push_back("x" + std::to_string(i));
  }
  Alphabet alphabet(std::move(tokens));
  std::vector<Rule> rules;
  for (int g = 0; g < rank; ++g) {
    Letter z = alphabet.positive(g);
    rules.push_back(Rule{Word{z, z.inverse()}, Word{}, RuleTag::inverse_cancellation});
    rules.push_back(Rule{Word{z.inverse(), z}, Word{}, RuleTag::inverse_cancellation});
  }
  // Earlier generators drift right: the normal form sorts letters by
  // descending generator index.
  for (int i = 0; i < rank; ++i) {
    for (int j = i + 1; j < rank; ++j) {
      for (int si : kSigns) {
        for (int sj : kSigns) {
          Letter p = signed_letter(alphabet.positive(i), si);
          Letter q = signed_letter(alphabet.positive(j), sj);
          rules.push_back(Rule{Word{p, q}, Word{q, p}, RuleTag::other});
        }
      }
    }
  }
  return RewritingSystem(std::move(alphabet), std::move(rules));
}

BundleGraph two_bundle_graph(int genus_blue, int genus_red, long long twist) {
  BundleGraph graph;
  graph.vertices.push_back(BundleVertex{"v", genus_blue});
  graph.vertices.push_back(BundleVertex{"w", genus_red});
  graph.edges.push_back(BundleEdge{"e", "v", "w", twist});
  return graph;
}

RewritingSystem one_vertex_system(int genus) {
  BundleGraph graph;
  graph.vertices.push_back(BundleVertex{"v", genus});
  Coloring coloring = validate_and_color(graph);
  return generate_system(graph, coloring);
}

RewritingSystem two_bundle_system(int genus_blue, int genus_red, long long twist) {
  BundleGraph graph = two_bundle_graph(genus_blue, genus_red, twist);
  Coloring coloring = validate_and_color(graph);
  RewritingSystem sys = generate_system(graph, coloring);

  std::vector<std::string> tokens;
  tokens.emplace_back("x");
  for (int j = 1; j <= genus_blue; ++j) {
    tokens.push_back("a" + std::to_string(j));
    tokens.push_back("b" + std::to_string(j));
  }
  tokens.emplace_back("y");
  for (int j = 1; j <= genus_red; ++j) {
    tokens.push_back("c" + std::to_string(j));
    tokens.push_back("d" + std::to_string(j));
  }
  return rename_generators(sys, std::move(tokens));
}

std::vector<NamedSystem> fixtures() {
  std::vector<NamedSystem> out;
  out.push_back({"trivial", trivial_group_system()});
  out.push_back({"integers", integers_system()});
  out.push_back({"free-abelian-2", free_abelian_system(2)});
  out.push_back({"free-abelian-3", free_abelian_system(3)});
  out.push_back({"one-vertex-genus-2", one_vertex_system(2)});
  out.push_back({"two-bundle", two_bundle_system(1, 1, 0)});
  return out;
}

}  // namespace fcrs
