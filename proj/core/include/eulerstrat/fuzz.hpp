#pragma once

// Randomized cross-checking of every identity in the library. Each trial
// draws a random map with link systems on both ends and random functions on
// source and target, then runs all formula reports and oracle checks. The
// first failure of each check is shrunk by greedily deleting strata while the
// failure persists.

#include <cstdint>
#include <string>
#include <vector>

#include "eulerstrat/documents.hpp"
#include "eulerstrat/random.hpp"

namespace eulerstrat {

struct FuzzOptions {
  std::size_t max_strata = 8;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  /// Adds 1 to one kernel entry per trial (with validation waived), which
  /// breaks chi o f_* = chi and the identities that depend on it.
  bool inject_fault = false;
};

struct FuzzCase {
  MapInstance map;
  ConstrFn alpha;         // on the source
  ConstrFn target_alpha;  // on the target
};

struct FuzzCheck {
  std::string name;
  bool (*run)(const FuzzCase&);
};

/// All checks in reporting order.
const std::vector<FuzzCheck>& fuzz_checks();

struct FuzzTally {
  std::string check;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct FuzzCounterexample {
  std::size_t trial = 0;
  std::string check;
  std::string message;  // exception text, empty for a plain failed identity
  FuzzCase original;
  FuzzCase minimized;
};

struct FuzzResult {
  FuzzOptions options;
  std::vector<FuzzTally> tallies;
  std::vector<FuzzCounterexample> counterexamples;

  std::size_t failures() const;
  bool pass() const { return failures() == 0; }
};

FuzzCase random_case(Rng& rng, std::size_t max_strata, bool inject_fault);

/// Deletes strata one at a time (target strata other than the dense one, then
/// source strata) while `check` keeps failing.
FuzzCase minimize(const FuzzCase& failing, const FuzzCheck& check);

FuzzResult run_fuzz(const FuzzOptions& options);

Json fuzz_to_json(const FuzzResult& result);
std::string fuzz_to_text(const FuzzResult& result);

}  // namespace eulerstrat
