#pragma once

#include <cstdint>
#include <optional>

#include "demazure/braid.hpp"
#include "demazure/heckecat.hpp"

// Verification suites over the structural identities of the other modules.
// Every suite is deterministic: randomness comes from an explicitly seeded
// generator with a fixed, platform-independent update (splitmix64).

namespace demazure {

enum class Suite { Coprojector, BraidAction, ReducedWords, Descent, Garside, Collapse };

std::optional<Suite> parse_suite(std::string_view name);  // "coproj", "braid", ...
std::string suite_name(Suite suite);
std::vector<Suite> all_suites();

struct CheckResult {
  std::string identity;
  std::size_t cases = 0;
  bool passed = true;
  std::string counterexample;  // empty iff passed
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct HarnessOptions {
  int radius = -1;          // -1: 2 for rank <= 2, else 1
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  int max_word_len = 8;     // random word length cap
  int garside_len = 0;      // 0: 6 for rank <= 2, else 4
  std::size_t max_group = kDefaultGroupBound;
};

SuiteReport run_suite(const RootDatum& datum, Suite suite, const HarnessOptions& options);

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform enough over [0, n) for test sampling.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Word random_word(SplitMix64& rng, int rank, int max_len);

// Support inside the radius-3 box, 1..6 terms, coefficients in [-5,5]\{0}.
LaurentChar random_char(SplitMix64& rng, int rank);

// Equivalence class of a word under single applications of the defining
// braid relations, by breadth-first closure.  Independent of the normal-form
// machinery; this is the brute-force side of the word-problem check.
std::vector<BraidWord> braid_rewrite_class(const RootDatum& datum, const BraidWord& word);

}  // namespace demazure
