#pragma once

#include <span>
#include <string>
#include <vector>

#include "eulerstrat/documents.hpp"

namespace eulerstrat {

/// A built-in worked example. Space entries are checked through the identity
/// map on the space.
struct CatalogEntry {
  std::string name;
  std::string description;
  Document document;
  std::vector<Formula> formulas;
};

/// smooth-singleton, two-chain, blow-up, nodal-cubic, nodal-cubic-normalization,
/// identity-nodal-cubic.
std::span<const CatalogEntry> catalog();

/// Throws UnknownExampleError.
const CatalogEntry& find_example(std::string_view name);

MapInstance build_example(const CatalogEntry& entry);

/// Runs every formula of the entry.
std::vector<FormulaReport> run_example(const CatalogEntry& entry);

}  // namespace eulerstrat
