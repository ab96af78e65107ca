#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fcrs/bundle_graph.hpp"
#include "fcrs/knuth_bendix.hpp"
#include "fcrs/rewriting.hpp"
#include "fcrs/rng.hpp"
#include "fcrs/verify.hpp"
#include "helpers.hpp"

using namespace fcrs;

namespace {

RewritingSystem free_group_on_x() {
  return parse_rws_string(
      "letters: x\n"
      "x x^-1 -> 1\n"
      "x^-1 x -> 1\n");
}

RewritingSystem single_commutation() {
  return parse_rws_string(
      "letters: x a\n"
      "x a -> a x\n");
}

}  // namespace

TEST_CASE("find_redex picks the leftmost match") {
  RewritingSystem swap = single_commutation();
  CHECK_FALSE(find_redex(swap.word("a x"), swap).has_value());

  auto redex = find_redex(swap.word("x a"), swap);
  REQUIRE(redex.has_value());
  CHECK(redex->position == 0);
  CHECK(redex->rule == 0);

  RewritingSystem free_x = free_group_on_x();
  auto tie = find_redex(free_x.word("x x^-1 x"), free_x);
  REQUIRE(tie.has_value());
  CHECK(tie->position == 0);  // matches at 0 and 1; leftmost wins
  CHECK(tie->rule == 0);
}

TEST_CASE("find_redex prefers the longest lhs at one position, then lowest index") {
  RewritingSystem sys = parse_rws_string(
      "letters: a b c\n"
      "a b -> b\n"
      "a b c -> c\n"
      "b c -> b\n");
  auto redex = find_redex(sys.word("a b c"), sys);
  REQUIRE(redex.has_value());
  CHECK(redex->position == 0);
  CHECK(redex->rule == 1);
}

TEST_CASE("rewrite_once splices the rhs in place of the lhs") {
  RewritingSystem swap = single_commutation();
  CHECK(swap.print(rewrite_once(swap.word("x a"), 0, swap.rule(0))) == "a x");

  RewritingSystem free_x = free_group_on_x();
  CHECK(free_x.print(rewrite_once(free_x.word("x^-1 x x^-1"), 1, free_x.rule(0))) == "x^-1");

  RewritingSystem tb = two_bundle_system(1, 1, 0);
  auto blue = std::find_if(tb.rules().begin(), tb.rules().end(), [&](const Rule& r) {
    return r.lhs == tb.word("a1 b1");
  });
  REQUIRE(blue != tb.rules().end());
  CHECK(tb.print(rewrite_once(tb.word("a1 b1"), 0, *blue)) == "y b1 a1");

  CHECK_THROWS_AS(rewrite_once(swap.word("a x"), 0, swap.rule(0)), std::logic_error);
  CHECK_THROWS_AS(rewrite_once(swap.word("x"), 0, swap.rule(0)), std::logic_error);
}

TEST_CASE("reduce reaches the irreducible word") {
  RewritingSystem tb = two_bundle_system(1, 1, 0);
  CHECK(tb.print(reduce(tb.word("a1 a1^-1"), tb)) == "1");
  // The blue vertex surface relator must die.
  CHECK(tb.print(reduce(tb.word("a1 b1 a1^-1 b1^-1 y^-1"), tb)) == "1");

  RewritingSystem edge = parse_rws_string(
      "letters: x y\n"
      "x y -> y x\n"
      "x y^-1 -> y^-1 x\n"
      "x^-1 y -> y x^-1\n"
      "x^-1 y^-1 -> y^-1 x^-1\n");
  CHECK(edge.print(reduce(edge.word("x y^-1 x"), edge)) == "y^-1 x x");

  ReduceStats stats;
  reduce(tb.word("a1 b1 a1^-1 b1^-1 y^-1"), tb, kDefaultStepCap, &stats);
  CHECK(stats.steps == 4);
}

TEST_CASE("reduce raises a cap error carrying the partial word") {
  RewritingSystem pingpong = parse_rws_string(
      "letters: a b\n"
      "a -> b\n"
      "b -> a\n");
  try {
    reduce(pingpong.word("a"), pingpong, 10);
    FAIL("expected ReductionCapExceeded");
  } catch (const ReductionCapExceeded& e) {
    CHECK(e.steps() == 10);
    CHECK(e.partial().size() == 1);
  }
}

TEST_CASE("is_irreducible is a pure factor scan") {
  RewritingSystem swap = single_commutation();
  CHECK(is_irreducible(swap.word(""), swap));
  CHECK(is_irreducible(swap.word("a x"), swap));
  CHECK_FALSE(is_irreducible(swap.word("a x a"), swap));

  RewritingSystem tb = two_bundle_system(1, 1, 0);
  CHECK(is_irreducible(tb.word("y b1 a1 y"), tb));
}

TEST_CASE("reduction successors, one word per match, deduplicated") {
  RewritingSystem free_x = free_group_on_x();
  auto successors = reduction_successors(free_x.word("x x^-1 x"), free_x);
  REQUIRE(successors.size() == 1);
  CHECK(free_x.print(successors[0]) == "x");

  CHECK(reduction_successors(free_x.word("x x"), free_x).empty());

  RewritingSystem swap = single_commutation();
  auto swapped = reduction_successors(swap.word("x a x"), swap);
  REQUIRE(swapped.size() == 1);
  CHECK(swap.print(swapped[0]) == "a x x");
}

TEST_CASE("rewriting changes length by exactly rhs minus lhs") {
  RewritingSystem tb = two_bundle_system(2, 1, 2);
  SplitMix64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Word w = testing::random_word(tb.alphabet(), 1 + rng.below(7), rng);
    for (const Redex& m : all_matches(w, tb)) {
      const Rule& rule = tb.rule(static_cast<size_t>(m.rule));
      Word next = rewrite_once(w, m.position, rule);
      CHECK(next.size() == w.size() + rule.rhs.size() - rule.lhs.size());
    }
  }
}

TEST_CASE("reduce is deterministic") {
  RewritingSystem tb = two_bundle_system(1, 1, 0);
  SplitMix64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = testing::random_word(tb.alphabet(), rng.below(8), rng);
    CHECK(reduce(w, tb) == reduce(w, tb));
  }
}

TEST_CASE("randomized strategies agree with the leftmost strategy on a complete system") {
  RewritingSystem z2 = free_abelian_system(2);
  REQUIRE(check_complete(z2).complete());
  SweepResult sweep = confluence_sweep(z2, 8, 20, 99, true);
  CHECK(sweep.ok);
  CHECK(sweep.words_checked > 0);
}

namespace {

// Position-by-position, rule-by-rule reference for the automaton search.
std::optional<Redex> naive_find_redex(const Word& w, const RewritingSystem& sys) {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    int best = -1;
    size_t best_len = 0;
    for (size_t r = 0; r < sys.rule_count(); ++r) {
      const Word& lhs = sys.rule(r).lhs;
      if (pos + lhs.size() > w.size() || lhs.size() <= best_len) continue;
      if (w.subword(pos, lhs.size()) == lhs) {
        best = static_cast<int>(r);
        best_len = lhs.size();
      }
    }
    if (best >= 0) return Redex{pos, best};
  }
  return std::nullopt;
}

Word naive_reduce(Word w, const RewritingSystem& sys) {
  while (auto redex = naive_find_redex(w, sys)) {
    w = rewrite_once(w, redex->position, sys.rule(static_cast<size_t>(redex->rule)));
  }
  return w;
}

}  // namespace

TEST_CASE("automaton search matches the naive scan, including nested patterns") {
  RewritingSystem nested = parse_rws_string(
      "letters: a b c\n"
      "a b c a -> c\n"
      "b c -> c b\n"
      "c a -> a\n"
      "a a -> 1\n"
      "b b b -> b\n");
  RewritingSystem tb = two_bundle_system(2, 1, -1);
  SplitMix64 rng(271828);
  for (const RewritingSystem& sys : {nested, tb}) {
    for (int trial = 0; trial < 3000; ++trial) {
      Word w = testing::random_word(sys.alphabet(), rng.below(10), rng);
      CHECK(find_redex(w, sys) == naive_find_redex(w, sys));
    }
  }
}

TEST_CASE("incremental rescanning reduces to the same normal form as the naive loop") {
  RewritingSystem nested = parse_rws_string(
      "letters: a b c\n"
      "a b c a -> c\n"
      "b c -> c b\n"
      "c a -> a\n"
      "a a -> 1\n"
      "b b b -> b\n");
  RewritingSystem tb = two_bundle_system(1, 1, 2);
  SplitMix64 rng(161803);
  for (const RewritingSystem& sys : {nested, tb}) {
    for (int trial = 0; trial < 800; ++trial) {
      Word w = testing::random_word(sys.alphabet(), rng.below(9), rng);
      CHECK(reduce(w, sys) == naive_reduce(w, sys));
    }
  }
}

TEST_CASE("rws text round-trips rule for rule") {
  for (const auto& [name, sys] : fixtures()) {
    INFO(name);
    RewritingSystem reparsed = parse_rws_string(to_rws_string(sys), name);
    CHECK(reparsed == sys);
  }
}

TEST_CASE("rws parser reports malformed input with line numbers") {
  CHECK_THROWS_AS(parse_rws_string("a -> b\n"), ParseError);        // rule before letters
  CHECK_THROWS_AS(parse_rws_string("letters: a\nb -> a\n"), ParseError);  // unknown letter
  CHECK_THROWS_AS(parse_rws_string("letters: a\n1 -> a\n"), ParseError);  // empty lhs
  CHECK_THROWS_AS(parse_rws_string("letters: a\na a\n"), ParseError);     // missing arrow
  CHECK_THROWS_AS(parse_rws_string("letters: a\ntag: nope\na -> 1\n"), ParseError);
  CHECK_THROWS_AS(parse_rws_string("letters: a\na -> 1\na -> 1\n"), ParseError);  // duplicate

  RewritingSystem sys = parse_rws_string(
      "# comment\n"
      "letters: a b\n"
      "tag: edge\n"
      "a b -> b a\n");
  CHECK(sys.rule_count() == 1);
  CHECK(sys.rules()[0].tag == RuleTag::edge);
}
