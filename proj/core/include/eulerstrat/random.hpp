#pragma once

// Deterministic random instances for property tests and fuzzing. Draws use
// the raw mt19937_64 stream with modular reduction so that a seed yields the
// same instances on every standard library.

#include <random>

#include "eulerstrat/instance.hpp"

namespace eulerstrat {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi].
Int draw(Rng& rng, Int lo, Int hi);
bool coin(Rng& rng, int percent);

struct RandomPosetOptions {
  std::size_t max_strata = 8;
  bool force_dense = true;
  /// All maximal strata share the top dimension.
  bool pure_dimensional = true;
  Int chi_range = 4;
};

/// Stratum specs and covering pairs; chi_c drawn from [-chi_range, chi_range].
struct PosetSpec {
  std::vector<StratumSpec> strata;
  std::vector<OrderPair> pairs;
};

PosetSpec random_poset_spec(Rng& rng, const RandomPosetOptions& options);
PosetPtr random_poset(Rng& rng, const RandomPosetOptions& options);

/// A complete link system. Each pair gets either a cone value, link Betti
/// numbers, or both (consistent).
LinkSystem random_links(Rng& rng, const PosetPtr& space, Int range = 3);
std::vector<LinkEntry> random_link_entries(Rng& rng, const PosetPtr& space, Int range = 3);

ConstrFn random_function(Rng& rng, const PosetPtr& space, Int range = 9);

/// Random unipotent matrix supported on the order, entries in [-range, range].
TriangularMatrix random_unipotent(Rng& rng, const PosetPtr& space, Int range = 9);

/// A map whose source chi_c values are chosen to make the kernel column
/// consistent. Both ends carry complete link systems; the target has a dense
/// stratum and the source is pure dimensional.
MapInstance random_map(Rng& rng, std::size_t max_strata);

}  // namespace eulerstrat
