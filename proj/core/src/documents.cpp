#include "eulerstrat/documents.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace eulerstrat {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError((path.empty() ? std::string("document") : path) + ": " + what);
}

void require_object(const Json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, _] : j.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(path, "unknown field '" + key + "'");
  }
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field '") + key + "'");
  return *it;
}

Int as_int(const Json& j, const std::string& path) {
  if (j.is_number_float()) fail(path, "floating-point values are not allowed");
  if (j.is_number_unsigned()) {
    auto u = j.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) fail(path, "integer out of 64-bit range");
    return static_cast<Int>(u);
  }
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<Int>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }

SpaceDocument parse_space_at(const Json& j, const std::string& path) {
  require_object(j, path, {"name", "strata", "order_pairs", "dense", "links"});
  SpaceDocument doc;
  doc.name = as_string(field(j, path, "name"), dot(path, "name"));

  const auto strata_path = dot(path, "strata");
  const auto& strata = as_array(field(j, path, "strata"), strata_path);
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const auto p = at(strata_path, i);
    require_object(strata[i], p, {"id", "complex_dim", "chi_c"});
    doc.strata.push_back({as_string(field(strata[i], p, "id"), dot(p, "id")),
                          as_int(field(strata[i], p, "complex_dim"), dot(p, "complex_dim")),
                          as_int(field(strata[i], p, "chi_c"), dot(p, "chi_c"))});
  }

  const auto pairs_path = dot(path, "order_pairs");
  if (j.contains("order_pairs")) {
    const auto& pairs = as_array(j["order_pairs"], pairs_path);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto p = at(pairs_path, i);
      if (!pairs[i].is_array() || pairs[i].size() != 2) fail(p, "expected [lower, upper]");
      doc.order_pairs.push_back({as_string(pairs[i][0], at(p, 0)), as_string(pairs[i][1], at(p, 1))});
    }
  }

  if (j.contains("dense")) doc.dense = as_string(j["dense"], dot(path, "dense"));

  if (j.contains("links")) {
    const auto links_path = dot(path, "links");
    const auto& links = as_array(j["links"], links_path);
    doc.links.emplace();
    for (std::size_t i = 0; i < links.size(); ++i) {
      const auto p = at(links_path, i);
      require_object(links[i], p, {"lower", "upper", "ichi_cone", "link_ih_betti"});
      LinkEntry e;
      e.lower = as_string(field(links[i], p, "lower"), dot(p, "lower"));
      e.upper = as_string(field(links[i], p, "upper"), dot(p, "upper"));
      if (links[i].contains("ichi_cone")) e.ichi_cone = as_int(links[i]["ichi_cone"], dot(p, "ichi_cone"));
      if (links[i].contains("link_ih_betti")) {
        const auto bp = dot(p, "link_ih_betti");
        const auto& b = as_array(links[i]["link_ih_betti"], bp);
        e.link_ih_betti.emplace();
        for (std::size_t k = 0; k < b.size(); ++k) e.link_ih_betti->push_back(as_int(b[k], at(bp, k)));
      }
      if (!e.ichi_cone && !e.link_ih_betti) fail(p, "needs ichi_cone or link_ih_betti");
      doc.links->push_back(std::move(e));
    }
  }
  return doc;
}

SpaceRef parse_space_ref(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  return parse_space_at(j, path);
}

Json space_ref_to_json(const SpaceRef& ref) {
  if (const auto* p = std::get_if<std::string>(&ref)) return Json(*p);
  return to_json(std::get<SpaceDocument>(ref));
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": invalid JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

SpaceDocument parse_space(const Json& j) { return parse_space_at(j, ""); }

MapDocument parse_map(const Json& j) {
  require_object(j, "", {"name", "source", "target", "kernel", "validate_kernel"});
  MapDocument doc;
  doc.name = as_string(field(j, "", "name"), "name");
  doc.source = parse_space_ref(field(j, "", "source"), "source");
  doc.target = parse_space_ref(field(j, "", "target"), "target");
  const auto& kernel = as_array(field(j, "", "kernel"), "kernel");
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    const auto p = at("kernel", i);
    require_object(kernel[i], p, {"target", "source", "chi"});
    doc.kernel.push_back({as_string(field(kernel[i], p, "target"), dot(p, "target")),
                          as_string(field(kernel[i], p, "source"), dot(p, "source")),
                          as_int(field(kernel[i], p, "chi"), dot(p, "chi"))});
  }
  if (j.contains("validate_kernel")) {
    if (!j["validate_kernel"].is_boolean()) fail("validate_kernel", "expected true or false");
    doc.validate_kernel = j["validate_kernel"].get<bool>();
  }
  return doc;
}

Document parse_document(const Json& j) {
  if (j.is_object() && j.contains("kernel")) return parse_map(j);
  return parse_space(j);
}

Json to_json(const SpaceDocument& doc) {
  Json j = Json::object();
  j["name"] = doc.name;
  j["strata"] = Json::array();
  for (const auto& s : doc.strata)
    j["strata"].push_back(Json{{"id", s.id}, {"complex_dim", s.complex_dim}, {"chi_c", s.chi_c}});
  j["order_pairs"] = Json::array();
  for (const auto& p : doc.order_pairs) j["order_pairs"].push_back(Json::array({p.lower, p.upper}));
  if (doc.dense) j["dense"] = *doc.dense;
  if (doc.links) {
    j["links"] = Json::array();
    for (const auto& e : *doc.links) {
      Json l = Json::object();
      l["lower"] = e.lower;
      l["upper"] = e.upper;
      if (e.ichi_cone) l["ichi_cone"] = *e.ichi_cone;
      if (e.link_ih_betti) l["link_ih_betti"] = *e.link_ih_betti;
      j["links"].push_back(std::move(l));
    }
  }
  return j;
}

Json to_json(const MapDocument& doc) {
  Json j = Json::object();
  j["name"] = doc.name;
  j["source"] = space_ref_to_json(doc.source);
  j["target"] = space_ref_to_json(doc.target);
  j["kernel"] = Json::array();
  for (const auto& k : doc.kernel) j["kernel"].push_back(Json{{"target", k.target}, {"source", k.source}, {"chi", k.chi}});
  if (doc.validate_kernel) j["validate_kernel"] = *doc.validate_kernel;
  return j;
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

SpaceInstance build_space(const SpaceDocument& doc) {
  auto poset = build_poset(doc.strata, doc.order_pairs,
                           doc.dense ? std::optional<std::string_view>(*doc.dense) : std::nullopt);
  if (doc.links) return {poset, LinkSystem(poset, *doc.links)};
  return {poset, LinkSystem(poset)};
}

MapInstance build_map(const MapDocument& doc, const std::filesystem::path& base_dir, bool waive_validation) {
  auto resolve = [&](const SpaceRef& ref) {
    if (const auto* p = std::get_if<std::string>(&ref)) return build_space(parse_space(read_json_file(base_dir / *p)));
    return build_space(std::get<SpaceDocument>(ref));
  };
  auto source = resolve(doc.source);
  auto target = resolve(doc.target);

  const auto ns = source.poset->size();
  std::vector<Int> entries(target.poset->size() * ns, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& k : doc.kernel) {
    auto v = target.poset->index_of(k.target);
    auto u = source.poset->index_of(k.source);
    if (!seen.emplace(v, u).second)
      throw InputError("duplicate kernel entry (" + k.target + ", " + k.source + ")");
    entries[v * ns + u] = k.chi;
  }
  const bool waive = waive_validation || (doc.validate_kernel && !*doc.validate_kernel);
  ProperMapKernel kernel(source.poset, target.poset, std::move(entries),
                         waive ? KernelValidation::waive : KernelValidation::check);
  return {std::move(source), std::move(target), std::move(kernel)};
}

SpaceDocument space_document(std::string name, const SpaceInstance& space) {
  const auto& p = *space.poset;
  SpaceDocument doc;
  doc.name = std::move(name);
  for (std::size_t i = 0; i < p.size(); ++i) doc.strata.push_back(p.stratum(i));
  doc.order_pairs = p.relations();
  if (p.dense()) doc.dense = p.id(*p.dense());
  std::vector<LinkEntry> links;
  for (const auto& rel : doc.order_pairs) {
    auto w = p.index_of(rel.lower);
    auto v = p.index_of(rel.upper);
    if (space.links.has(w, v)) links.push_back({rel.lower, rel.upper, space.links.cone(w, v), std::nullopt});
  }
  if (!links.empty()) doc.links = std::move(links);
  return doc;
}

MapDocument map_document(std::string name, const MapInstance& map) {
  MapDocument doc;
  doc.name = name;
  doc.source = space_document(name + "-source", map.source);
  doc.target = space_document(name + "-target", map.target);
  const auto& k = map.kernel;
  for (std::size_t v = 0; v < k.target()->size(); ++v)
    for (std::size_t u = 0; u < k.source()->size(); ++u)
      if (k(v, u) != 0) doc.kernel.push_back({k.target()->id(v), k.source()->id(u), k(v, u)});
  if (k.validation() == KernelValidation::waive) doc.validate_kernel = false;
  return doc;
}

ConstrFn parse_function(const Json& j, const PosetPtr& space) {
  if (!j.is_object()) fail("function", "expected an object mapping stratum ids to integers");
  std::vector<Int> values(space->size(), 0);
  for (const auto& [key, value] : j.items()) {
    auto i = space->find(key);
    if (!i) throw UnknownStratumError("function: unknown stratum '" + key + "'");
    values[*i] = as_int(value, "function." + key);
  }
  return {space, std::move(values)};
}

Json function_to_json(const ConstrFn& f) {
  Json j = Json::object();
  for (std::size_t v = 0; v < f.size(); ++v) j[f.space()->id(v)] = f[v];
  return j;
}

Json value_to_json(const ReportValue& value) {
  if (value.kind() == ReportValue::Kind::integer) return value.scalar();
  Json j = Json::object();
  for (const auto& [name, c] : value.components()) j[name] = c;
  return j;
}

Json report_to_json(const FormulaReport& report) {
  Json j = Json::object();
  j["formula"] = report.formula;
  j["pass"] = report.pass;
  j["lhs"] = value_to_json(report.lhs);
  j["rhs"] = value_to_json(report.rhs);
  j["terms"] = Json::array();
  for (const auto& t : report.terms) {
    Json term = Json::object();
    term["stratum"] = t.label;
    term["coefficient"] = t.coefficient;
    term["coefficient_expr"] = t.coefficient_expr;
    term["basis_value"] = value_to_json(t.basis_value);
    term["contribution"] = value_to_json(t.contribution);
    j["terms"].push_back(std::move(term));
  }
  return j;
}

std::string report_to_text(const FormulaReport& report) {
  std::string s = report.formula + ": " + (report.pass ? "PASS" : "FAIL") + "\n";
  s += "  lhs = " + report.lhs.to_text() + "\n";
  s += "  rhs = " + report.rhs.to_text() + "\n";
  if (report.lhs.kind() == ReportValue::Kind::integer) s += "  " + report.equation_text() + "\n";
  for (const auto& t : report.terms)
    s += "  [" + t.label + "] " + t.coefficient_expr + " * " + t.basis_value.to_text() + " -> " +
         t.contribution.to_text() + "\n";
  return s;
}

}  // namespace eulerstrat
