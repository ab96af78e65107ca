#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "fcrs/bundle_graph.hpp"
#include "fcrs/orders.hpp"
#include "fcrs/rng.hpp"
#include "helpers.hpp"

using namespace fcrs;

namespace {

Precedence two_letter_prec() {
  Alphabet alphabet({"x", "y"});
  return Precedence::parse(alphabet, "x y");  // x > y, inverses unranked
}

}  // namespace

TEST_CASE("rpo base cases on letters and the empty word") {
  Precedence prec = two_letter_prec();
  const Alphabet& a = prec.alphabet();
  CHECK(rpo_greater(a.parse_word("x"), a.parse_word("y"), prec));
  CHECK_FALSE(rpo_greater(a.parse_word("y"), a.parse_word("x"), prec));
  CHECK(rpo_greater(a.parse_word("y"), a.parse_word(""), prec));
  CHECK_FALSE(rpo_greater(a.parse_word(""), a.parse_word("y"), prec));
  CHECK_FALSE(rpo_greater(a.parse_word("x y"), a.parse_word("x y"), prec));
}

TEST_CASE("one large letter beats any power of a smaller one") {
  Alphabet alphabet({"a", "b"});
  Precedence prec = Precedence::parse(alphabet, "a b");
  CHECK(rpo_greater(alphabet.parse_word("a"), alphabet.parse_word("b b b"), prec));
  CHECK_FALSE(rpo_greater(alphabet.parse_word("b b b"), alphabet.parse_word("a"), prec));
}

TEST_CASE("commutation rules decrease when the left letter is greater") {
  Alphabet alphabet({"x", "a"});
  Precedence prec = Precedence::parse(alphabet, "x a");
  CHECK(rpo_greater(alphabet.parse_word("x a"), alphabet.parse_word("a x"), prec));
  CHECK_FALSE(rpo_greater(alphabet.parse_word("a x"), alphabet.parse_word("x a"), prec));
}

TEST_CASE("rpo rejects unranked letters by name") {
  Precedence prec = two_letter_prec();
  const Alphabet& a = prec.alphabet();
  try {
    rpo_greater(a.parse_word("x^-1"), a.parse_word("y"), prec);
    FAIL("expected OrderError");
  } catch (const OrderError& e) {
    CHECK(std::string(e.what()).find("x^-1") != std::string::npos);
  }
}

TEST_CASE("rpo agrees with the literal recursive definition") {
  Alphabet alphabet({"a", "b", "c"});
  Precedence prec = Precedence::parse(alphabet, "a^-1 a b^-1 b c^-1 c");
  SplitMix64 rng(1234);
  for (int trial = 0; trial < 2000; ++trial) {
    Word u = testing::random_word(alphabet, rng.below(6), rng);
    Word v = testing::random_word(alphabet, rng.below(6), rng);
    CHECK(rpo_greater(u, v, prec) == testing::naive_rpo_greater(u, v, prec));
  }
}

TEST_CASE("rpo is irreflexive and transitive on random triples") {
  Alphabet alphabet({"a", "b", "c"});
  Precedence prec = Precedence::parse(alphabet, "a^-1 a b^-1 b c^-1 c");
  SplitMix64 rng(77);
  for (int trial = 0; trial < 1500; ++trial) {
    Word u = testing::random_word(alphabet, rng.below(6), rng);
    Word v = testing::random_word(alphabet, rng.below(6), rng);
    Word w = testing::random_word(alphabet, rng.below(6), rng);
    CHECK_FALSE(rpo_greater(u, u, prec));
    if (rpo_greater(u, v, prec) && rpo_greater(v, w, prec)) CHECK(rpo_greater(u, w, prec));
  }
}

TEST_CASE("rpo is compatible with concatenation") {
  Alphabet alphabet({"a", "b"});
  Precedence prec = Precedence::parse(alphabet, "a^-1 a b^-1 b");
  SplitMix64 rng(31);
  for (int trial = 0; trial < 800; ++trial) {
    Word u = testing::random_word(alphabet, rng.below(5), rng);
    Word v = testing::random_word(alphabet, rng.below(5), rng);
    if (!rpo_greater(u, v, prec)) continue;
    Word left = testing::random_word(alphabet, rng.below(4), rng);
    Word right = testing::random_word(alphabet, rng.below(4), rng);
    CHECK(rpo_greater(concat(left, concat(u, right)), concat(left, concat(v, right)), prec));
  }
}

TEST_CASE("canonical precedence realizes the expected chain on the two-bundle graph") {
  BundleGraph graph = two_bundle_graph(1, 1, 0);
  Coloring coloring = validate_and_color(graph);
  Precedence prec = canonical_precedence(graph, coloring);
  const Alphabet& a = prec.alphabet();

  auto tier = [&](const char* token) { return prec.tier(a.parse_letter(token)); };
  // Red surface letters above the blue fiber inverse, blue fiber above blue
  // surface, red fiber at the bottom.
  std::vector<std::string> descending = {"a.w.1^-1", "a.w.1", "b.w.1^-1", "b.w.1",
                                         "x.v^-1",   "x.v",   "a.v.1^-1", "a.v.1",
                                         "b.v.1^-1", "b.v.1", "x.w^-1",   "x.w"};
  for (size_t i = 0; i + 1 < descending.size(); ++i) {
    INFO(descending[i], " > ", descending[i + 1]);
    CHECK(tier(descending[i].c_str()) > tier(descending[i + 1].c_str()));
  }
}

TEST_CASE("red stable letters sit at the top, blue stable letters stay unranked") {
  auto graphs = testing::suite_graphs();
  {
    // Red loop graph.
    const BundleGraph& graph = graphs[4].graph;
    Coloring coloring = validate_and_color(graph);
    Precedence prec = canonical_precedence(graph, coloring);
    const Alphabet& a = prec.alphabet();
    int top = prec.tier(a.parse_letter("t.l^-1"));
    CHECK(top > prec.tier(a.parse_letter("t.l")));
    for (const auto& token : a.tokens()) {
      Letter plus = a.parse_letter(token);
      CHECK(top >= prec.tier(plus));
      CHECK(top >= prec.tier(plus.inverse()));
    }
  }
  {
    // Blue loop graph.
    const BundleGraph& graph = graphs[5].graph;
    Coloring coloring = validate_and_color(graph);
    Precedence prec = canonical_precedence(graph, coloring);
    const Alphabet& a = prec.alphabet();
    CHECK_FALSE(prec.ranked(a.parse_letter("t.k")));
    CHECK_FALSE(prec.ranked(a.parse_letter("t.k^-1")));
    CHECK(prec.ranked(a.parse_letter("r.k")));
  }
}

TEST_CASE("every restricted rule decreases under the canonical precedence") {
  for (const auto& [name, graph] : testing::suite_graphs()) {
    INFO(name);
    Coloring coloring = validate_and_color(graph);
    SystemPartition partition = generate_restricted(graph, coloring);
    Precedence prec = canonical_precedence(graph, coloring);
    for (const Rule& rule : partition.restricted.rules()) {
      INFO(partition.restricted.print(rule.lhs), " -> ", partition.restricted.print(rule.rhs));
      CHECK(rpo_greater(rule.lhs, rule.rhs, prec));
    }
  }
}

TEST_CASE("disorder on the worked examples") {
  RewritingSystem free_x = parse_rws_string(
      "letters: x\n"
      "x x^-1 -> 1\n"
      "x^-1 x -> 1\n");
  SystemPartition free_part(free_x, std::vector<bool>(2, false));
  CHECK(disorder(free_part.restricted.word("x x"), free_part) == 0);
  CHECK(disorder(free_part.restricted.word("x x^-1 x"), free_part) == 1);

  RewritingSystem swap = parse_rws_string(
      "letters: x a\n"
      "x a -> a x\n");
  SystemPartition swap_part(swap, std::vector<bool>(4, false));
  CHECK(disorder(swap_part.restricted.word("x a a"), swap_part) == 2);

  SplitMix64 rng(1);
  Word too_long = testing::random_word(swap.alphabet(), 20, rng);
  CHECK_THROWS_AS(disorder(too_long, swap_part, 12), OrderError);
}

TEST_CASE("disorder is zero exactly on irreducible words and steps down by one") {
  BundleGraph graph = testing::suite_graphs()[5].graph;  // blue loop m2
  Coloring coloring = validate_and_color(graph);
  SystemPartition partition = generate_restricted(graph, coloring);
  DisorderCache cache;
  SplitMix64 rng(3);

  for (int trial = 0; trial < 400; ++trial) {
    Word w;
    do {
      w = testing::random_word(partition.restricted.alphabet(), rng.below(6), rng);
    } while (std::any_of(w.begin(), w.end(), [&](Letter l) { return partition.is_excluded(l); }));

    long long d = disorder(w, partition, 12, &cache);
    CHECK((d == 0) == is_irreducible(w, partition.restricted));
    auto successors = reduction_successors(w, partition.restricted);
    if (successors.empty()) continue;
    bool some_equal = false;
    for (const Word& s : successors) {
      long long ds = disorder(s, partition, 12, &cache);
      CHECK(d >= 1 + ds);
      some_equal |= (d == 1 + ds);
    }
    CHECK(some_equal);
  }
}

TEST_CASE("segment profiles split at excluded letters") {
  BundleGraph graph = testing::suite_graphs()[5].graph;  // blue loop m2, letters x a b r s t
  Coloring coloring = validate_and_color(graph);
  SystemPartition partition = generate_restricted(graph, coloring);
  const Alphabet& a = partition.restricted.alphabet();
  DisorderCache cache;

  SegmentProfile lone_t = segment_profile(a.parse_word("t.k"), partition, 12, &cache);
  CHECK(lone_t.values == std::vector<long long>{1, 0, 0, 0, 0});

  SegmentProfile xt = segment_profile(a.parse_word("x.v t.k"), partition, 12, &cache);
  CHECK(xt.values == std::vector<long long>{1, 0, 1, 0, 0});

  SegmentProfile tr = segment_profile(a.parse_word("t.k r.k"), partition, 12, &cache);
  CHECK(tr.values == std::vector<long long>{1, 0, 0, 0, 1});

  // The stable-letter rule x t -> t r pushes weight into a later segment.
  CHECK(segment_profile_greater(xt, tr));
  CHECK_FALSE(segment_profile_greater(tr, xt));

  // More excluded letters dominate everything else.
  SegmentProfile two_t = segment_profile(a.parse_word("t.k t.k"), partition, 12, &cache);
  CHECK(segment_profile_greater(two_t, xt));

  Word same = a.parse_word("r.k s.k");
  CHECK_FALSE(segment_profile_greater(same, same, partition, 12, &cache));
}

TEST_CASE("every full-system rule decreases the segment profile") {
  for (const auto& [name, graph] : testing::suite_graphs()) {
    INFO(name);
    Coloring coloring = validate_and_color(graph);
    RewritingSystem full = generate_system(graph, coloring);
    SystemPartition partition = generate_restricted(graph, coloring);
    DisorderCache cache;
    for (const Rule& rule : full.rules()) {
      INFO(full.print(rule.lhs), " -> ", full.print(rule.rhs));
      CHECK(segment_profile_greater(rule.lhs, rule.rhs, partition, 12, &cache));
    }
  }
}

TEST_CASE("applying any rule anywhere decreases the segment profile") {
  BundleGraph graph = testing::suite_graphs()[5].graph;  // blue loop m2
  Coloring coloring = validate_and_color(graph);
  RewritingSystem full = generate_system(graph, coloring);
  SystemPartition partition = generate_restricted(graph, coloring);
  DisorderCache cache;
  SplitMix64 rng(17);

  for (int trial = 0; trial < 250; ++trial) {
    Word w = testing::random_word(full.alphabet(), rng.below(6), rng);
    SegmentProfile before = segment_profile(w, partition, 12, &cache);
    for (const Redex& m : all_matches(w, full)) {
      Word after = rewrite_once(w, m.position, full.rule(static_cast<size_t>(m.rule)));
      CHECK(segment_profile_greater(before, segment_profile(after, partition, 12, &cache)));
    }
  }
}

TEST_CASE("disorder rejects excluded letters") {
  BundleGraph graph = testing::suite_graphs()[5].graph;
  Coloring coloring = validate_and_color(graph);
  SystemPartition partition = generate_restricted(graph, coloring);
  CHECK_THROWS_AS(disorder(partition.restricted.word("t.k"), partition), OrderError);
}
