#include "eulerstrat/cli/commands.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "eulerstrat/catalog.hpp"
#include "eulerstrat/fuzz.hpp"

namespace eulerstrat::cli {

namespace {

struct Loaded {
  bool is_map = false;
  std::string name;
  MapInstance map;
};

Loaded load(const Options& options) {
  auto doc = parse_document(read_json_file(options.path));
  if (const auto* space = std::get_if<SpaceDocument>(&doc))
    return {false, space->name, MapInstance::identity(build_space(*space))};
  const auto& map = std::get<MapDocument>(doc);
  return {true, map.name, build_map(map, options.path.parent_path(), options.skip_kernel_validation)};
}

ConstrFn load_function(const Options& options, const PosetPtr& space) {
  if (!options.function_path) return constant(space, 1);
  return parse_function(read_json_file(*options.function_path), space);
}

void write_json(std::ostream& out, const Json& j) { out << emit(j); }

std::string stratum_list(const StratPoset& space) {
  std::ostringstream s;
  for (std::size_t i = 0; i < space.size(); ++i)
    s << (i ? ", " : "") << space.id(i) << " (dim " << space.complex_dim(i) << ", chi_c " << space.chi_c(i) << ")";
  return s.str();
}

std::size_t known_links(const SpaceInstance& space) {
  std::size_t n = 0;
  for (const auto& rel : space.poset->relations())
    if (space.links.has(space.poset->index_of(rel.lower), space.poset->index_of(rel.upper))) ++n;
  return n;
}

Json space_summary(const SpaceInstance& space) {
  Json j;
  Json strata = Json::array();
  for (std::size_t i = 0; i < space.poset->size(); ++i) strata.push_back(space.poset->id(i));
  j["canonical_order"] = std::move(strata);
  if (auto d = space.poset->dense())
    j["dense"] = space.poset->id(*d);
  else
    j["dense"] = nullptr;
  j["relations"] = space.poset->relations().size();
  j["links_known"] = known_links(space);
  j["links_complete"] = space.links.complete();
  return j;
}

void print_space_summary(std::ostream& out, const std::string& label, const SpaceInstance& space) {
  const auto& p = *space.poset;
  out << label << ": " << p.size() << " strata: " << stratum_list(p) << "\n";
  out << "  dense: " << (p.dense() ? p.id(*p.dense()) : std::string("none")) << "\n";
  const auto relations = p.relations().size();
  out << "  links: " << known_links(space) << " of " << relations << " pairs"
      << (space.links.complete() ? " (complete)" : " (partial)") << "\n";
}

Json matrix_json(const TriangularMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) rows.push_back(m.row(r));
  return rows;
}

void print_matrix(std::ostream& out, const std::string& title, const TriangularMatrix& m) {
  const auto& space = *m.space();
  std::size_t width = 1;
  for (std::size_t i = 0; i < space.size(); ++i) width = std::max(width, space.id(i).size());
  for (auto e : m.entries()) width = std::max(width, std::to_string(e).size());
  out << title << "\n" << std::setw(static_cast<int>(width) + 2) << "";
  for (std::size_t c = 0; c < space.size(); ++c) out << " " << std::setw(static_cast<int>(width)) << space.id(c);
  out << "\n";
  for (std::size_t r = 0; r < space.size(); ++r) {
    out << "  " << std::setw(static_cast<int>(width)) << space.id(r);
    for (std::size_t c = 0; c < space.size(); ++c) out << " " << std::setw(static_cast<int>(width)) << m(r, c);
    out << "\n";
  }
}

Json coefficients_json(const BasisCoefficients& c) {
  Json j = Json::object();
  for (std::size_t v = 0; v < c.space->size(); ++v) j[c.space->id(v)] = c.coefficients[v];
  return j;
}

std::string coefficients_text(const BasisCoefficients& c) {
  return ReportValue::of(ConstrFn(c.space, c.coefficients)).to_text();
}

std::vector<Formula> selected_formulas(const Options& options, std::span<const Formula> fallback) {
  if (options.formula) return {*options.formula};
  return {fallback.begin(), fallback.end()};
}

int emit_reports(const Options& options, std::ostream& out, const std::vector<FormulaReport>& reports) {
  bool pass = true;
  for (const auto& r : reports) pass = pass && r.pass;
  if (options.json) {
    if (reports.size() == 1) {
      write_json(out, report_to_json(reports.front()));
    } else {
      Json j;
      j["pass"] = pass;
      Json all = Json::array();
      for (const auto& r : reports) all.push_back(report_to_json(r));
      j["reports"] = std::move(all);
      write_json(out, j);
    }
  } else {
    for (const auto& r : reports) out << report_to_text(r);
    if (reports.size() > 1) out << (pass ? "all formulas pass" : "some formulas FAIL") << "\n";
  }
  return pass ? exit_pass : exit_fail;
}

// The function for formula `f`: read on the source, or on the target for
// eq11. When every formula runs on a map, eq11 keeps its default.
std::optional<ConstrFn> formula_function(const Options& options, const Loaded& in, Formula f, bool all) {
  if (!options.function_path) return std::nullopt;
  if (!accepts_function(f)) {
    if (all) return std::nullopt;
    throw InputError("formula " + std::string(to_string(f)) + " fixes its own function; --function is not allowed");
  }
  if (f == Formula::eq11) {
    if (all && in.is_map) return std::nullopt;
    return load_function(options, in.map.target.poset);
  }
  return load_function(options, in.map.source.poset);
}

}  // namespace

std::string error_kind(const std::exception& e) {
#define EULERSTRAT_KIND(T) \
  if (dynamic_cast<const T*>(&e)) return #T;
  EULERSTRAT_KIND(CycleError)
  EULERSTRAT_KIND(DimOrderError)
  EULERSTRAT_KIND(UnknownStratumError)
  EULERSTRAT_KIND(DuplicateStratumError)
  EULERSTRAT_KIND(InvalidDenseError)
  EULERSTRAT_KIND(NoDenseStratumError)
  EULERSTRAT_KIND(MissingLinkDataError)
  EULERSTRAT_KIND(InvalidLinkDataError)
  EULERSTRAT_KIND(InvalidCodimError)
  EULERSTRAT_KIND(SpaceMismatchError)
  EULERSTRAT_KIND(KernelConsistencyError)
  EULERSTRAT_KIND(UnknownExampleError)
  EULERSTRAT_KIND(ParseError)
  EULERSTRAT_KIND(InputError)
  EULERSTRAT_KIND(OverflowError)
  EULERSTRAT_KIND(Error)
#undef EULERSTRAT_KIND
  return "error";
}

int cmd_validate(const Options& options, std::ostream& out) {
  const auto in = load(options);
  if (options.json) {
    Json j;
    j["name"] = in.name;
    j["kind"] = in.is_map ? "map" : "space";
    j["valid"] = true;
    if (in.is_map) {
      j["source"] = space_summary(in.map.source);
      j["target"] = space_summary(in.map.target);
      j["kernel_validation"] = in.map.kernel.validation() == KernelValidation::check ? "checked" : "waived";
      Json bad = Json::array();
      for (auto u : in.map.kernel.inconsistent_columns()) bad.push_back(in.map.source.poset->id(u));
      j["inconsistent_columns"] = std::move(bad);
    } else {
      j["space"] = space_summary(in.map.source);
    }
    write_json(out, j);
    return exit_pass;
  }
  out << (in.is_map ? "map " : "space ") << in.name << ": valid\n";
  if (in.is_map) {
    print_space_summary(out, "source", in.map.source);
    print_space_summary(out, "target", in.map.target);
    const auto bad = in.map.kernel.inconsistent_columns();
    if (in.map.kernel.validation() == KernelValidation::check) {
      out << "kernel: consistent\n";
    } else {
      out << "kernel: validation waived, " << bad.size() << " inconsistent column" << (bad.size() == 1 ? "" : "s");
      for (std::size_t i = 0; i < bad.size(); ++i) out << (i ? ", " : ": ") << in.map.source.poset->id(bad[i]);
      out << "\n";
    }
  } else {
    print_space_summary(out, "space", in.map.source);
  }
  return exit_pass;
}

int cmd_bases(const Options& options, std::ostream& out) {
  const auto in = load(options);
  const auto& space = in.map.target;
  space.links.require_complete();
  const auto closed = closure_matrix(space.poset);
  const auto ic = ic_transition_matrix(space.links);
  const std::vector<std::pair<std::string, TriangularMatrix>> matrices{
      {"closed-to-open", closed},
      {"open-to-closed", invert_unipotent(closed)},
      {"hat-to-closed", hat_closed_table(space.poset)},
      {"ic-to-open", ic},
      {"open-to-ic", invert_unipotent(ic)},
      {"hat-ic-to-ic", hat_ic_table(space.links)},
  };
  if (options.json) {
    Json j;
    Json order = Json::array();
    for (std::size_t i = 0; i < space.poset->size(); ++i) order.push_back(space.poset->id(i));
    j["order"] = std::move(order);
    Json m = Json::object();
    for (const auto& [name, matrix] : matrices) m[name] = matrix_json(matrix);
    j["matrices"] = std::move(m);
    write_json(out, j);
    return exit_pass;
  }
  out << "canonical order:";
  for (std::size_t i = 0; i < space.poset->size(); ++i) out << " " << space.poset->id(i);
  out << "\ncolumn V holds the coordinates of the V-th basis element\n";
  for (const auto& [name, matrix] : matrices) print_matrix(out, name, matrix);
  return exit_pass;
}

int cmd_decompose(const Options& options, std::ostream& out) {
  const auto in = load(options);
  const auto& space = in.map.target;
  space.links.require_complete();
  const auto alpha = load_function(options, space.poset);
  const std::vector<BasisCoefficients> parts{
      {Basis::open_indicator, space.poset, std::vector<Int>(alpha.values().begin(), alpha.values().end())},
      decompose_closed(alpha),
      decompose_hat(alpha),
      decompose_hat_dense(alpha),
      decompose_ic_basis(space.links, alpha),
      decompose_ic(space.links, alpha),
  };
  bool pass = true;
  std::vector<bool> ok;
  for (const auto& p : parts) {
    ok.push_back(recompose(p, space.links) == alpha);
    pass = pass && ok.back();
  }
  if (options.json) {
    Json j;
    j["function"] = function_to_json(alpha);
    Json all = Json::array();
    for (std::size_t i = 0; i < parts.size(); ++i)
      all.push_back({{"basis", to_string(parts[i].basis)},
                     {"coefficients", coefficients_json(parts[i])},
                     {"recomposes", static_cast<bool>(ok[i])}});
    j["decompositions"] = std::move(all);
    j["pass"] = pass;
    write_json(out, j);
  } else {
    out << "function " << ReportValue::of(alpha).to_text() << "\n";
    for (std::size_t i = 0; i < parts.size(); ++i)
      out << "  " << std::left << std::setw(13) << to_string(parts[i].basis) << std::right
          << coefficients_text(parts[i]) << (ok[i] ? "" : "  (recomposition FAILED)") << "\n";
  }
  return pass ? exit_pass : exit_fail;
}

int cmd_pushforward(const Options& options, std::ostream& out) {
  const auto in = load(options);
  const auto alpha = load_function(options, in.map.source.poset);
  const auto image = pushforward(in.map.kernel, alpha);
  const auto report = decompose_pushforward_hat(in.map.kernel, alpha);
  if (options.json) {
    Json j;
    j["function"] = function_to_json(alpha);
    j["pushforward"] = function_to_json(image);
    j["report"] = report_to_json(report);
    write_json(out, j);
  } else {
    out << "function    " << ReportValue::of(alpha).to_text() << "\n";
    out << "pushforward " << ReportValue::of(image).to_text() << "\n";
    out << report_to_text(report);
  }
  return report.pass ? exit_pass : exit_fail;
}

int cmd_verify(const Options& options, std::ostream& out) {
  const auto in = load(options);
  const bool all = !options.formula;
  std::vector<FormulaReport> reports;
  for (auto f : selected_formulas(options, all_formulas()))
    reports.push_back(run_formula(in.map, f, formula_function(options, in, f, all)));
  return emit_reports(options, out, reports);
}

int cmd_fuzz(const Options& options, std::ostream& out) {
  if (options.strata < 1) throw InputError("--strata must be at least 1");
  if (options.trials < 1) throw InputError("--trials must be at least 1");
  FuzzOptions fuzz;
  fuzz.max_strata = options.strata;
  fuzz.trials = options.trials;
  fuzz.seed = options.seed;
  fuzz.inject_fault = options.inject_fault;
  const auto result = run_fuzz(fuzz);
  if (options.json)
    write_json(out, fuzz_to_json(result));
  else
    out << fuzz_to_text(result);
  return result.pass() ? exit_pass : exit_fail;
}

int cmd_catalog(const Options& options, std::ostream& out) {
  const auto& action = options.catalog_action;
  if (action == "list") {
    if (options.json) {
      Json all = Json::array();
      for (const auto& e : catalog()) {
        Json formulas = Json::array();
        for (auto f : e.formulas) formulas.push_back(to_string(f));
        all.push_back({{"name", e.name},
                       {"kind", std::holds_alternative<MapDocument>(e.document) ? "map" : "space"},
                       {"description", e.description},
                       {"formulas", std::move(formulas)}});
      }
      write_json(out, all);
    } else {
      for (const auto& e : catalog())
        out << std::left << std::setw(27) << e.name << std::setw(6)
            << (std::holds_alternative<MapDocument>(e.document) ? "map" : "space") << std::right << e.description
            << "\n";
    }
    return exit_pass;
  }
  if (options.catalog_name.empty()) throw InputError("catalog " + action + " needs an example name");
  const auto& entry = find_example(options.catalog_name);
  if (action == "emit") {
    std::visit([&](const auto& doc) { out << emit(to_json(doc)); }, entry.document);
    return exit_pass;
  }
  if (action != "run") throw InputError("unknown catalog action '" + action + "'");
  if (options.formula && std::find(entry.formulas.begin(), entry.formulas.end(), *options.formula) == entry.formulas.end())
    throw InputError("example " + entry.name + " does not run " + std::string(to_string(*options.formula)));
  const auto map = build_example(entry);
  std::vector<FormulaReport> reports;
  for (auto f : selected_formulas(options, entry.formulas)) reports.push_back(run_formula(map, f));
  return emit_reports(options, out, reports);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stratified Euler characteristic and characteristic class identities", "eulerstrat"};
  app.require_subcommand(1);
  Options options;
  std::string formula;
  std::string path;
  std::string function_path;

  std::vector<std::string> formula_names;
  for (auto f : all_formulas()) formula_names.emplace_back(to_string(f));

  auto add_path = [&](CLI::App* sub, const std::string& what) {
    sub->add_option("path", path, what)->required();
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", options.json, "machine-readable output"); };
  auto add_waiver = [&](CLI::App* sub) {
    sub->add_flag("--skip-kernel-validation", options.skip_kernel_validation,
                  "accept map kernels that violate column consistency");
  };
  auto add_function = [&](CLI::App* sub) {
    sub->add_option("--function", function_path, "function document (stratum id -> integer)");
  };
  auto add_formula = [&](CLI::App* sub) {
    sub->add_option("--formula", formula, "formula to check (default: all)")->check(CLI::IsMember(formula_names));
  };

  auto* validate = app.add_subcommand("validate", "validate a space or map document");
  add_path(validate, "space or map document");
  add_json(validate);
  add_waiver(validate);

  auto* bases = app.add_subcommand("bases", "transition matrices among the open, closed, hat and ic bases");
  add_path(bases, "space document (a map uses its target)");
  add_json(bases);
  add_waiver(bases);

  auto* decompose = app.add_subcommand("decompose", "coefficients of a function in every basis");
  add_path(decompose, "space document (a map uses its target)");
  add_function(decompose);
  add_json(decompose);
  add_waiver(decompose);

  auto* push = app.add_subcommand("pushforward", "push a function forward along a map");
  add_path(push, "map document");
  add_function(push);
  add_json(push);
  add_waiver(push);

  auto* verify = app.add_subcommand("verify", "check stratified multiplicative formulas");
  add_path(verify, "map document, or a space document for its identity map");
  add_formula(verify);
  add_function(verify);
  add_json(verify);
  add_waiver(verify);

  auto* fuzz = app.add_subcommand("fuzz", "randomized cross-checks of every identity");
  fuzz->add_option("--seed", options.seed, "random seed");
  fuzz->add_option("--trials", options.trials, "number of random instances");
  fuzz->add_option("--strata", options.strata, "maximum strata per space");
  fuzz->add_flag("--inject-fault", options.inject_fault, "perturb one kernel entry per trial");
  add_json(fuzz);

  auto* cat = app.add_subcommand("catalog", "built-in worked examples");
  cat->add_option("action", options.catalog_action, "list, run or emit")
      ->required()
      ->check(CLI::IsMember({"list", "run", "emit"}));
  cat->add_option("name", options.catalog_name, "example name");
  add_formula(cat);
  add_json(cat);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) err << sub->help();
    return exit_input;
  }

  options.path = path;
  if (!function_path.empty()) options.function_path = function_path;
  if (!formula.empty()) options.formula = parse_formula(formula);

  try {
    if (validate->parsed()) return cmd_validate(options, out);
    if (bases->parsed()) return cmd_bases(options, out);
    if (decompose->parsed()) return cmd_decompose(options, out);
    if (push->parsed()) return cmd_pushforward(options, out);
    if (verify->parsed()) return cmd_verify(options, out);
    if (fuzz->parsed()) return cmd_fuzz(options, out);
    return cmd_catalog(options, out);
  } catch (const Error& e) {
    err << "error: " << error_kind(e) << ": " << e.what() << "\n";
    return exit_input;
  }
}

}  // namespace eulerstrat::cli
