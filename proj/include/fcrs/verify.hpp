#pragma once

#include <cstdint>
#include <string>

#include "fcrs/rewriting.hpp"
#include "fcrs/word.hpp"

namespace fcrs {

struct SweepResult {
  uint64_t words_checked = 0;
  bool ok = true;
  Word witness;       // first word whose reductions disagreed
  Word expected_nf;   // normal form under the deterministic strategy
  Word conflicting_nf;
  std::string note;
};

/// Decodes the `index`-th word of the given length over the system's
/// alphabet (base-|letters| digits, most significant first).
Word decode_word(const RewritingSystem& sys, size_t length, uint64_t index);

/// Checks that every word up to max_len reaches the deterministic normal
/// form under `strategies` randomized maximal reductions. The word space is
/// split across OpenMP threads when `parallel` is set; results are identical
/// either way and independent of the thread count.
SweepResult confluence_sweep(const RewritingSystem& sys, size_t max_len, size_t strategies,
                             uint64_t seed, bool parallel = false,
                             size_t step_cap = kDefaultStepCap);

/// Serial reference check: follows every maximal reduction sequence of every
/// word up to max_len (memoized over the full reduction graph) and demands a
/// unique endpoint. Complete but exponential; keep the scale small.
SweepResult unique_normal_forms_exhaustive(const RewritingSystem& sys, size_t max_len,
                                           size_t step_cap = kDefaultStepCap);

}  // namespace fcrs
