#pragma once

// JSON documents for spaces, maps and functions, and the machine-readable
// report encoding. Integers only; floats are rejected. Emission is
// deterministic (fixed key order, two-space indent, trailing newline), and
// parse followed by emit reproduces an emitted document byte for byte.
//
// SpaceDocument:
//   { "name": str,
//     "strata": [ {"id": str, "complex_dim": int, "chi_c": int}, ... ],
//     "order_pairs": [ [lower, upper], ... ],
//     "dense": str,                                   (optional)
//     "links": [ {"lower": str, "upper": str,         (optional)
//                 "ichi_cone": int, "link_ih_betti": [int, ...]} ] }
//
// MapDocument:
//   { "name": str,
//     "source": SpaceDocument | "relative/path.json",
//     "target": SpaceDocument | "relative/path.json",
//     "kernel": [ {"target": str, "source": str, "chi": int}, ... ],
//     "validate_kernel": bool }                       (optional, default true)
//
// Function document: { stratum id: int, ... }; strata not listed are 0.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eulerstrat/instance.hpp"
#include <nlohmann/json.hpp>

namespace eulerstrat {

using Json = nlohmann::ordered_json;

struct SpaceDocument {
  std::string name;
  std::vector<StratumSpec> strata;
  std::vector<OrderPair> order_pairs;
  std::optional<std::string> dense;
  std::optional<std::vector<LinkEntry>> links;

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

struct KernelEntry {
  std::string target;
  std::string source;
  Int chi = 0;

  friend bool operator==(const KernelEntry&, const KernelEntry&) = default;
};

/// Either an inline space or a path relative to the map document.
using SpaceRef = std::variant<SpaceDocument, std::string>;

struct MapDocument {
  std::string name;
  SpaceRef source;
  SpaceRef target;
  std::vector<KernelEntry> kernel;
  std::optional<bool> validate_kernel;

  friend bool operator==(const MapDocument&, const MapDocument&) = default;
};

using Document = std::variant<SpaceDocument, MapDocument>;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(std::string_view text);
/// Reads and parses a file (ParseError if unreadable).
Json read_json_file(const std::filesystem::path& path);

SpaceDocument parse_space(const Json& j);
MapDocument parse_map(const Json& j);
/// A map document if it has a "kernel" field, a space document otherwise.
Document parse_document(const Json& j);

Json to_json(const SpaceDocument& doc);
Json to_json(const MapDocument& doc);

/// Canonical text form: dump with two-space indent plus a newline.
std::string emit(const Json& j);

/// Validates and builds. Link entries are optional; an absent list gives an
/// empty (possibly incomplete) link system.
SpaceInstance build_space(const SpaceDocument& doc);

/// Resolves space references against `base_dir`. `waive_validation` forces
/// KernelValidation::waive regardless of the document flag.
MapInstance build_map(const MapDocument& doc, const std::filesystem::path& base_dir = {},
                      bool waive_validation = false);

/// Document form of a built space; `links` entries are written as ichi_cone
/// values for every pair the system knows.
SpaceDocument space_document(std::string name, const SpaceInstance& space);
MapDocument map_document(std::string name, const MapInstance& map);

ConstrFn parse_function(const Json& j, const PosetPtr& space);
Json function_to_json(const ConstrFn& f);

Json report_to_json(const FormulaReport& report);
Json value_to_json(const ReportValue& value);

/// Text of one formula report, with per-term breakdown.
std::string report_to_text(const FormulaReport& report);

}  // namespace eulerstrat
