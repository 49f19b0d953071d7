#pragma once

#include <optional>

#include "eulerstrat/class_formulas.hpp"

namespace eulerstrat {

/// A validated space together with its (possibly partial) link system.
struct SpaceInstance {
  PosetPtr poset;
  LinkSystem links;
};

/// A validated proper map with link systems on both ends.
struct MapInstance {
  SpaceInstance source;
  SpaceInstance target;
  ProperMapKernel kernel;

  static MapInstance identity(const SpaceInstance& space);
};

/// Whether `f` reads a caller-supplied function (on the source for map
/// formulas, on the target for eq11). The others fix alpha themselves:
/// 1_X for eq6/eq7/eq15/eq16, ic_X (see ic_space) for eq17/eq18, 1_Y for c1/c2.
bool accepts_function(Formula f);

/// Runs one formula on a map. `alpha` defaults to 1_X (1_Y for eq11).
/// Throws InputError when `alpha` is given to a formula that fixes its own.
FormulaReport run_formula(const MapInstance& map, Formula f, const std::optional<ConstrFn>& alpha = std::nullopt);

}  // namespace eulerstrat
