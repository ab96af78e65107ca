// Command-line front end: generate systems from bundle-graph files, reduce
// words, check completeness, run completion, count growth, verify the rule
// orders, and decompose normal forms of two-bundle systems.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "fcrs/bundle_graph.hpp"
#include "fcrs/knuth_bendix.hpp"
#include "fcrs/normal_forms.hpp"
#include "fcrs/orders.hpp"
#include "fcrs/rewriting.hpp"
#include "fcrs/verify.hpp"
#include "fcrs/word.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUsageError = 1;
constexpr int kRefuted = 2;
constexpr int kInconclusive = 3;

using nlohmann::json;

struct Options {
  bool structured = false;
  std::string graph_path;
  std::string system_path;
  std::string out_path = "-";
  std::string variant = "full";
  std::string precedence_spec;
  std::string word_text;
  size_t step_cap = fcrs::kDefaultStepCap;
  size_t rule_cap = fcrs::kDefaultRuleCap;
  size_t max_len = 8;
  uint64_t seed = 1;
  size_t sweep_len = 0;
  bool serial = false;
  bool verbose = false;
  bool skip_check = false;
};

void emit(const Options& opt, const json& object, const std::string& plain) {
  if (opt.structured)
    std::cout << object.dump() << '\n';
  else
    std::cout << plain << '\n';
}

fcrs::RewritingSystem load_system(const Options& opt) {
  if (!opt.system_path.empty() && !opt.graph_path.empty())
    throw fcrs::ParseError("pass either --system or --graph, not both");
  if (!opt.system_path.empty()) return fcrs::load_rws_file(opt.system_path);
  if (opt.graph_path.empty()) throw fcrs::ParseError("one of --system or --graph is required");
  fcrs::BundleGraph graph = fcrs::load_gob_file(opt.graph_path);
  fcrs::Coloring coloring = fcrs::validate_and_color(graph);
  if (opt.variant == "restricted")
    return fcrs::generate_restricted(graph, coloring).restricted;
  return fcrs::generate_system(graph, coloring);
}

void write_system(const fcrs::RewritingSystem& sys, const std::string& out_path) {
  if (out_path == "-") {
    std::cout << fcrs::to_rws_string(sys);
    return;
  }
  fcrs::save_rws_file(sys, out_path);
}

std::map<std::string, size_t> tag_counts(const fcrs::RewritingSystem& sys) {
  std::map<std::string, size_t> counts;
  for (const auto& rule : sys.rules()) ++counts[std::string(fcrs::tag_name(rule.tag))];
  return counts;
}

int cmd_generate(const Options& opt) {
  fcrs::BundleGraph graph = fcrs::load_gob_file(opt.graph_path);
  fcrs::Coloring coloring = fcrs::validate_and_color(graph);
  fcrs::RewritingSystem sys = opt.variant == "restricted"
                                  ? fcrs::generate_restricted(graph, coloring).restricted
                                  : fcrs::generate_system(graph, coloring);
  write_system(sys, opt.out_path);

  json summary{{"command", "generate"},
               {"variant", opt.variant},
               {"rules", sys.rule_count()},
               {"generators", sys.alphabet().generator_count()},
               {"tags", tag_counts(sys)}};
  std::ostream& info = opt.out_path == "-" ? std::cerr : std::cout;
  if (opt.structured) {
    info << summary.dump() << '\n';
  } else {
    info << sys.rule_count() << " rules over " << sys.alphabet().generator_count()
         << " generators (" << opt.variant << ")\n";
  }
  return kOk;
}

int cmd_reduce(const Options& opt) {
  fcrs::RewritingSystem sys = load_system(opt);
  fcrs::Word w = sys.word(opt.word_text);
  fcrs::ReduceStats stats;
  fcrs::Word nf = fcrs::reduce(w, sys, opt.step_cap, &stats);
  emit(opt, json{{"command", "reduce"}, {"normal_form", sys.print(nf)}, {"steps", stats.steps}},
       sys.print(nf));
  if (!opt.structured) std::cout << "steps: " << stats.steps << '\n';
  return kOk;
}

int cmd_check(const Options& opt) {
  fcrs::RewritingSystem sys = load_system(opt);
  std::vector<fcrs::CriticalPair> pairs = fcrs::critical_pairs(sys);
  std::vector<fcrs::ResolutionReport> reports =
      fcrs::resolve_all(sys, pairs, opt.step_cap, !opt.serial);

  if (opt.sweep_len > 0) {
    fcrs::SweepResult sweep =
        fcrs::confluence_sweep(sys, opt.sweep_len, 20, opt.seed, !opt.serial, opt.step_cap);
    if (!sweep.ok) {
      std::cout << "STRATEGY DIVERGENCE " << sys.print(sweep.witness) << " => "
                << sys.print(sweep.expected_nf) << " | " << sys.print(sweep.conflicting_nf)
                << '\n';
      return kRefuted;
    }
    if (!opt.structured)
      std::cout << "# " << sweep.words_checked << " words agree under 20 randomized strategies\n";
  }

  size_t resolved = 0, refuted = 0, timeouts = 0;
  for (const auto& report : reports) {
    switch (report.outcome) {
      case fcrs::ResolutionReport::Outcome::resolved: ++resolved; break;
      case fcrs::ResolutionReport::Outcome::refuted: ++refuted; break;
      case fcrs::ResolutionReport::Outcome::timeout: ++timeouts; break;
    }
    if (opt.verbose || !report.resolved()) {
      if (opt.structured) {
        json line{{"source", sys.print(report.pair.source)},
                  {"resolved", report.resolved()},
                  {"left", sys.print(report.left_normal_form)},
                  {"right", sys.print(report.right_normal_form)}};
        if (report.joined_at) line["joined"] = sys.print(*report.joined_at);
        std::cout << line.dump() << '\n';
      } else {
        std::cout << fcrs::describe(report, sys.alphabet()) << '\n';
      }
    }
  }

  bool complete = refuted == 0 && timeouts == 0;
  emit(opt,
       json{{"command", "check"},
            {"pairs", pairs.size()},
            {"resolved", resolved},
            {"refuted", refuted},
            {"inconclusive", timeouts},
            {"complete", complete}},
       std::to_string(pairs.size()) + " pairs, " +
           (complete ? "all resolved"
                     : std::to_string(refuted) + " unresolved, " + std::to_string(timeouts) +
                           " inconclusive"));
  if (refuted > 0) return kRefuted;
  if (timeouts > 0) return kInconclusive;
  return kOk;
}

int cmd_complete(const Options& opt) {
  fcrs::RewritingSystem sys = fcrs::load_rws_file(opt.system_path);
  fcrs::Precedence prec = fcrs::Precedence::parse(sys.alphabet(), opt.precedence_spec);
  fcrs::CompletionResult result =
      fcrs::complete(sys, prec, fcrs::CompletionLimits{opt.rule_cap, opt.step_cap});

  switch (result.status) {
    case fcrs::CompletionResult::Status::completed: {
      write_system(*result.system, opt.out_path);
      json summary{{"command", "complete"},
                   {"rules", result.system->rule_count()},
                   {"rounds", result.rounds}};
      std::ostream& info = opt.out_path == "-" ? std::cerr : std::cout;
      if (opt.structured)
        info << summary.dump() << '\n';
      else
        info << "completed with " << result.system->rule_count() << " rules in " << result.rounds
             << " rounds\n";
      return kOk;
    }
    case fcrs::CompletionResult::Status::unorientable:
      std::cerr << result.detail << '\n';
      return kRefuted;
    case fcrs::CompletionResult::Status::cap_exceeded:
      std::cerr << result.detail << '\n';
      return kInconclusive;
  }
  return kUsageError;
}

int cmd_growth(const Options& opt) {
  fcrs::RewritingSystem sys = load_system(opt);
  bool verified = false;
  if (!opt.skip_check) {
    fcrs::CompletenessSummary summary = fcrs::check_complete(sys, opt.step_cap, !opt.serial);
    verified = summary.complete();
  }
  if (!verified && !opt.structured)
    std::cout << "# warning: completeness not verified; counts may not be group growth\n";
  std::vector<uint64_t> counts = fcrs::growth_series(sys, opt.max_len);
  for (size_t len = 0; len < counts.size(); ++len) {
    emit(opt, json{{"len", len}, {"count", counts[len]}, {"verified", verified}},
         std::to_string(len) + "\t" + std::to_string(counts[len]));
  }
  return kOk;
}

int cmd_order_check(const Options& opt) {
  fcrs::BundleGraph graph = fcrs::load_gob_file(opt.graph_path);
  fcrs::Coloring coloring = fcrs::validate_and_color(graph);
  fcrs::RewritingSystem full = fcrs::generate_system(graph, coloring);
  fcrs::SystemPartition partition = fcrs::generate_restricted(graph, coloring);
  fcrs::Precedence prec = fcrs::canonical_precedence(graph, coloring);

  if (opt.verbose) std::cout << "precedence: " << prec.describe() << '\n';

  size_t rpo_failures = 0;
  for (const auto& rule : partition.restricted.rules()) {
    if (!fcrs::rpo_greater(rule.lhs, rule.rhs, prec)) {
      ++rpo_failures;
      std::cout << "NOT RPO-DECREASING " << full.print(rule.lhs) << " -> " << full.print(rule.rhs)
                << '\n';
    }
  }

  fcrs::DisorderCache cache;
  size_t profile_failures = 0;
  for (const auto& rule : full.rules()) {
    if (!fcrs::segment_profile_greater(rule.lhs, rule.rhs, partition,
                                       fcrs::kDefaultDisorderLengthCap, &cache)) {
      ++profile_failures;
      std::cout << "NOT PROFILE-DECREASING " << full.print(rule.lhs) << " -> "
                << full.print(rule.rhs) << '\n';
    }
  }

  emit(opt,
       json{{"command", "order-check"},
            {"restricted_rules", partition.restricted.rule_count()},
            {"rpo_failures", rpo_failures},
            {"full_rules", full.rule_count()},
            {"profile_failures", profile_failures}},
       std::to_string(partition.restricted.rule_count()) + " restricted rules RPO-checked (" +
           std::to_string(rpo_failures) + " failures), " + std::to_string(full.rule_count()) +
           " full rules profile-checked (" + std::to_string(profile_failures) + " failures)");
  return (rpo_failures || profile_failures) ? kRefuted : kOk;
}

int cmd_decompose(const Options& opt) {
  fcrs::BundleGraph graph = fcrs::load_gob_file(opt.graph_path);
  fcrs::Coloring coloring = fcrs::validate_and_color(graph);
  fcrs::RewritingSystem sys = fcrs::generate_system(graph, coloring);
  fcrs::TwoBundleLetters letters = fcrs::TwoBundleLetters::from_graph(graph, coloring);

  fcrs::Word nf = fcrs::reduce(sys.word(opt.word_text), sys, opt.step_cap);
  fcrs::BlockDecomposition blocks = fcrs::block_decompose(nf, sys, letters);

  json out{{"command", "decompose"}, {"normal_form", sys.print(nf)}, {"blocks", json::array()}};
  for (const auto& block : blocks.blocks) {
    out["blocks"].push_back({{"blue", sys.print(block.blue)},
                             {"fiber", sys.print(block.fiber_pair)},
                             {"red", sys.print(block.red)}});
    if (!opt.structured)
      std::cout << "[" << sys.print(block.blue) << " | " << sys.print(block.fiber_pair) << " | "
                << sys.print(block.red) << "]\n";
  }
  if (opt.structured)
    std::cout << out.dump() << '\n';
  else
    std::cout << "blocks: " << blocks.length() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rewriting-system toolkit for fundamental groups of graphs of circle bundles"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--structured", opt.structured, "emit one JSON object per line");

  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--step-cap", opt.step_cap, "reduction step cap")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "seed for randomized strategies");
  };

  CLI::App* generate = app.add_subcommand("generate", "emit the rewriting system of a graph");
  generate->add_option("--graph", opt.graph_path, "bundle graph file (.gob)")->required();
  generate->add_option("--out", opt.out_path, "output .rws path, '-' for stdout");
  generate->add_option("--variant", opt.variant, "full or restricted")
      ->check(CLI::IsMember({"full", "restricted"}));

  CLI::App* reduce = app.add_subcommand("reduce", "reduce a word to its normal form");
  reduce->add_option("--system", opt.system_path, "rewriting system file (.rws)");
  reduce->add_option("--graph", opt.graph_path, "bundle graph file (.gob)");
  reduce->add_option("--variant", opt.variant, "full or restricted (with --graph)")
      ->check(CLI::IsMember({"full", "restricted"}));
  reduce->add_option("word", opt.word_text, "word as quoted whitespace-separated letters")
      ->required();
  add_caps(reduce);

  CLI::App* check = app.add_subcommand("check", "resolve all critical pairs");
  check->add_option("--system", opt.system_path, "rewriting system file (.rws)");
  check->add_option("--graph", opt.graph_path, "bundle graph file (.gob)");
  check->add_option("--variant", opt.variant, "full or restricted (with --graph)")
      ->check(CLI::IsMember({"full", "restricted"}));
  check->add_flag("--serial", opt.serial, "disable parallel pair resolution");
  check->add_flag("--verbose", opt.verbose, "print every pair, not just failures");
  check->add_option("--sweep-len", opt.sweep_len,
                    "also probe every word up to this length with randomized strategies");
  add_caps(check);

  CLI::App* completion = app.add_subcommand("complete", "run completion with an RPO precedence");
  completion->add_option("--system", opt.system_path, "rewriting system file (.rws)")->required();
  completion->add_option("--prec", opt.precedence_spec,
                         "letters from greatest to least, e.g. 'x^-1 x y^-1 y'")
      ->required();
  completion->add_option("--out", opt.out_path, "output .rws path, '-' for stdout");
  completion->add_option("--rule-cap", opt.rule_cap, "divergence cap on the rule count")
      ->check(CLI::PositiveNumber);
  add_caps(completion);

  CLI::App* growth = app.add_subcommand("growth", "count irreducible words by length");
  growth->add_option("--system", opt.system_path, "rewriting system file (.rws)");
  growth->add_option("--graph", opt.graph_path, "bundle graph file (.gob)");
  growth->add_option("--max-len", opt.max_len, "largest length to count");
  growth->add_flag("--skip-check", opt.skip_check, "skip the completeness check");
  growth->add_flag("--serial", opt.serial, "disable parallel pair resolution");
  add_caps(growth);

  CLI::App* order_check =
      app.add_subcommand("order-check", "verify that every rule decreases in the term orders");
  order_check->add_option("--graph", opt.graph_path, "bundle graph file (.gob)")->required();
  order_check->add_flag("--verbose", opt.verbose, "print the letter precedence");

  CLI::App* decompose =
      app.add_subcommand("decompose", "block decomposition of a two-bundle normal form");
  decompose->add_option("--graph", opt.graph_path, "two-vertex bundle graph file (.gob)")
      ->required();
  decompose->add_option("word", opt.word_text, "word as quoted whitespace-separated letters")
      ->required();
  add_caps(decompose);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (generate->parsed()) return cmd_generate(opt);
    if (reduce->parsed()) return cmd_reduce(opt);
    if (check->parsed()) return cmd_check(opt);
    if (completion->parsed()) return cmd_complete(opt);
    if (growth->parsed()) return cmd_growth(opt);
    if (order_check->parsed()) return cmd_order_check(opt);
    if (decompose->parsed()) return cmd_decompose(opt);
  } catch (const fcrs::UnsupportedGluing& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const fcrs::ReductionCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
