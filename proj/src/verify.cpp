#include "fcrs/verify.hpp"

#include <atomic>
#include <unordered_map>
#include <unordered_set>

#include "fcrs/rng.hpp"

namespace fcrs {

Word decode_word(const RewritingSystem& sys, size_t length, uint64_t index) {
  size_t letters = sys.alphabet().letter_count();
  std::vector<Letter> out(length);
  for (size_t pos = length; pos > 0; --pos) {
    out[pos - 1] = Letter(static_cast<int32_t>(index % letters));
    index /= letters;
  }
  return Word(std::move(out));
}

SweepResult confluence_sweep(const RewritingSystem& sys, size_t max_len, size_t strategies,
                             uint64_t seed, bool parallel, size_t step_cap) {
  SweepResult result;
  size_t letters = sys.alphabet().letter_count();
  std::atomic<bool> failed{false};
#ifndef _OPENMP
  (void)parallel;
#endif

  for (size_t len = 0; len <= max_len; ++len) {
    uint64_t total = 1;
    for (size_t i = 0; i < len; ++i) total *= letters;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 512) if (parallel)
#endif
    for (int64_t idx = 0; idx < static_cast<int64_t>(total); ++idx) {
      if (failed.load(std::memory_order_relaxed)) continue;
      Word w = decode_word(sys, len, static_cast<uint64_t>(idx));
      Word nf = reduce(w, sys, step_cap);
      for (size_t s = 0; s < strategies; ++s) {
        uint64_t strategy_seed = mix_seed(seed, mix_seed(len * 0x10001 + s, static_cast<uint64_t>(idx)));
        Word alt = random_reduce(w, sys, strategy_seed, step_cap);
        if (alt != nf) {
          bool expected = false;
          if (failed.compare_exchange_strong(expected, true)) {
            result.ok = false;
            result.witness = w;
            result.expected_nf = nf;
            result.conflicting_nf = alt;
            result.note = "randomized strategy " + std::to_string(s) + " diverged";
          }
          break;
        }
      }
    }
    result.words_checked += total;
    if (failed.load()) break;
  }
  return result;
}

namespace {

struct ExhaustiveState {
  const RewritingSystem& sys;
  std::unordered_map<Word, Word, WordHash> memo;
  std::unordered_set<Word, WordHash> on_stack;
  SweepResult* result;

  // Normal form of w with every maximal sequence checked to agree.
  // References into the memo stay valid across rehashing.
  const Word& unique_nf(const Word& w) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::vector<Word> successors = reduction_successors(w, sys);
    if (successors.empty()) return memo.emplace(w, w).first->second;

    if (!on_stack.insert(w).second)
      throw ReductionCapExceeded(w, 0);  // rewriting cycle; not Noetherian

    const Word* nf = nullptr;
    for (const Word& s : successors) {
      const Word& snf = unique_nf(s);
      if (!nf) {
        nf = &snf;
      } else if (*nf != snf && result->ok) {
        result->ok = false;
        result->witness = w;
        result->expected_nf = *nf;
        result->conflicting_nf = snf;
        result->note = "two maximal reduction sequences end at different words";
      }
    }
    on_stack.erase(w);
    return memo.emplace(w, *nf).first->second;
  }
};

}  // namespace

SweepResult unique_normal_forms_exhaustive(const RewritingSystem& sys, size_t max_len,
                                           size_t step_cap) {
  (void)step_cap;
  SweepResult result;
  ExhaustiveState state{sys, {}, {}, &result};
  size_t letters = sys.alphabet().letter_count();
  for (size_t len = 0; len <= max_len && result.ok; ++len) {
    uint64_t total = 1;
    for (size_t i = 0; i < len; ++i) total *= letters;
    for (uint64_t idx = 0; idx < total; ++idx) {
      state.unique_nf(decode_word(sys, len, idx));
      ++result.words_checked;
      if (!result.ok) break;
    }
  }
  return result;
}

}  // namespace fcrs
