#include "eulerstrat/catalog.hpp"

namespace eulerstrat {

namespace {

const std::vector<Formula> kSpaceFormulas{Formula::eq11, Formula::c1, Formula::c2};

std::vector<Formula> map_formulas() {
  std::vector<Formula> out;
  for (auto f : all_formulas()) out.push_back(f);
  return out;
}

// P^1: one smooth stratum.
SpaceDocument projective_line() { return {"projective-line", {{"P1", 1, 2}}, {}, "P1", std::nullopt}; }

// Nodal cubic curve: the node, and its complement, a P^1 with two points
// removed. The link of the node is two disjoint circles.
SpaceDocument nodal_cubic() {
  return {"nodal-cubic",
          {{"node", 0, 1}, {"smooth", 1, 0}},
          {{"node", "smooth"}},
          "smooth",
          std::vector<LinkEntry>{{"node", "smooth", 2, std::vector<Int>{2, 2}}}};
}

// P^2 stratified by a point and its complement; the link of the point is S^3.
SpaceDocument plane_with_point() {
  return {"projective-plane-with-point",
          {{"p", 0, 1}, {"open", 2, 2}},
          {{"p", "open"}},
          "open",
          std::vector<LinkEntry>{{"p", "open", std::nullopt, std::vector<Int>{1, 0, 0, 0}}}};
}

std::vector<KernelEntry> identity_kernel(const SpaceDocument& space) {
  std::vector<KernelEntry> out;
  for (const auto& s : space.strata) out.push_back({s.id, s.id, 1});
  return out;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> out;

  out.push_back({"smooth-singleton", "the projective line, a single smooth stratum", projective_line(), kSpaceFormulas});

  out.push_back({"two-chain",
                 "generic two-stratum chain W < S with cone value 2",
                 SpaceDocument{"two-chain",
                               {{"W", 0, 1}, {"S", 2, 2}},
                               {{"W", "S"}},
                               "S",
                               std::vector<LinkEntry>{{"W", "S", 2, std::nullopt}}},
                 kSpaceFormulas});

  // Blow-up of P^2 at a point: X has chi = chi(P^2) - 1 + chi(P^1) = 4, the
  // exceptional fiber is a P^1.
  SpaceDocument blown_up{"blown-up-plane", {{"X", 2, 4}}, {}, "X", std::nullopt};
  out.push_back({"blow-up",
                 "blow-up of the projective plane at a point",
                 MapDocument{"blow-up", blown_up, plane_with_point(), {{"open", "X", 1}, {"p", "X", 2}}, std::nullopt},
                 map_formulas()});

  out.push_back({"nodal-cubic", "the nodal cubic curve", nodal_cubic(), kSpaceFormulas});

  // Normalization P^1 -> nodal cubic: two points over the node.
  out.push_back({"nodal-cubic-normalization",
                 "normalization of the nodal cubic by the projective line",
                 MapDocument{"nodal-cubic-normalization",
                             projective_line(),
                             nodal_cubic(),
                             {{"node", "P1", 2}, {"smooth", "P1", 1}},
                             std::nullopt},
                 map_formulas()});

  out.push_back({"identity-nodal-cubic",
                 "identity map of the nodal cubic",
                 MapDocument{"identity-nodal-cubic", nodal_cubic(), nodal_cubic(), identity_kernel(nodal_cubic()),
                             std::nullopt},
                 map_formulas()});
  return out;
}

}  // namespace

std::span<const CatalogEntry> catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

const CatalogEntry& find_example(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw UnknownExampleError("unknown example '" + std::string(name) + "'");
}

MapInstance build_example(const CatalogEntry& entry) {
  if (const auto* space = std::get_if<SpaceDocument>(&entry.document)) return MapInstance::identity(build_space(*space));
  return build_map(std::get<MapDocument>(entry.document));
}

std::vector<FormulaReport> run_example(const CatalogEntry& entry) {
  auto map = build_example(entry);
  std::vector<FormulaReport> out;
  for (auto f : entry.formulas) out.push_back(run_formula(map, f));
  return out;
}

}  // namespace eulerstrat
