#include "eulerstrat/fuzz.hpp"

#include <sstream>

namespace eulerstrat {

namespace {

const PosetPtr& target_of(const FuzzCase& c) { return c.map.target.poset; }
const LinkSystem& target_links(const FuzzCase& c) { return c.map.target.links; }

bool hat_roundtrip(const FuzzCase& c) { return recompose(decompose_hat(c.target_alpha)) == c.target_alpha; }

bool hat_dense_roundtrip(const FuzzCase& c) { return recompose(decompose_hat_dense(c.target_alpha)) == c.target_alpha; }

bool ic_roundtrip(const FuzzCase& c) {
  const auto& links = target_links(c);
  return recompose(decompose_ic(links, c.target_alpha), links) == c.target_alpha &&
         recompose(decompose_ic_basis(links, c.target_alpha), links) == c.target_alpha;
}

bool hat_pointwise(const FuzzCase& c) {
  const auto& space = target_of(c);
  for (std::size_t v = 0; v < space->size(); ++v)
    if (recompose(hat_closed(space, v)) != indicator(space, v)) return false;
  return true;
}

bool ic_hat_pointwise(const FuzzCase& c) {
  const auto& space = target_of(c);
  for (std::size_t v = 0; v < space->size(); ++v)
    if (recompose(hat_ic(target_links(c), v), target_links(c)) != indicator(space, v)) return false;
  return true;
}

bool hat_table_is_inverse(const FuzzCase& c) {
  const auto& space = target_of(c);
  return hat_closed_table(space) == invert_unipotent(closure_matrix(space));
}

bool ic_hat_table_is_inverse(const FuzzCase& c) {
  const auto a = ic_transition_matrix(target_links(c));
  const auto inv = invert_unipotent(a);
  return hat_ic_table(target_links(c)) == inv && inv * a == TriangularMatrix(target_of(c));
}

KClass class_of(const FuzzCase& c) {
  const auto v = c.target_alpha.values();
  return {target_of(c), std::vector<Int>(v.begin(), v.end())};
}

bool k_roundtrip(const FuzzCase& c) {
  const auto& links = target_links(c);
  const auto k = class_of(c);
  const auto stalks = k_stalks(k, links);
  // Treat the function itself as a stalk vector as well.
  return k_decompose(stalks, links) == k && k_stalks(k_decompose(c.target_alpha, links), links) == c.target_alpha;
}

bool k_two_routes(const FuzzCase& c) {
  const auto& links = target_links(c);
  return k_expand(c.target_alpha, links) == k_decompose(c.target_alpha, links);
}

bool k_compat(const FuzzCase& c) {
  const auto k = class_of(c);
  return k_function(k, target_links(c)) == k_stalks(k, target_links(c));
}

bool hat_values(const FuzzCase& c) {
  const auto& space = target_of(c);
  const auto chi = chi_hom(space);
  const auto ichi = ichi_hom(target_links(c));
  for (std::size_t v = 0; v < space->size(); ++v) {
    if (hat_value(chi, v) != space->chi_c(v)) return false;
    if (ichat_value(target_links(c), ichi, v) != space->chi_c(v)) return false;
  }
  return true;
}

bool chi_pushforward(const FuzzCase& c) { return euler(pushforward(c.map.kernel, c.alpha)) == euler(c.alpha); }

bool same_numbers(const FormulaReport& a, const FormulaReport& b) {
  if (a.lhs != b.lhs || a.rhs != b.rhs || a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    const auto& x = a.terms[i];
    const auto& y = b.terms[i];
    if (x.label != y.label || x.coefficient != y.coefficient || x.basis_value != y.basis_value ||
        x.contribution != y.contribution)
      return false;
  }
  return a.pass && b.pass;
}

bool degree_hat(const FuzzCase& c) {
  const auto& k = c.map.kernel;
  return same_numbers(verify_hat_class(k, c.alpha, chi_hom(k.target()), Formula::eq5),
                      verify_chi_mult(k, c.alpha, Formula::eq4));
}

bool degree_ic(const FuzzCase& c) {
  const auto& k = c.map.kernel;
  const auto& links = target_links(c);
  return same_numbers(verify_ic_class(k, c.alpha, links, ichi_hom(links), Formula::eq14),
                      verify_ichi_mult(k, c.alpha, links, Formula::eq13));
}

template <Formula F>
bool formula_holds(const FuzzCase& c) {
  if (!accepts_function(F)) return run_formula(c.map, F).pass;
  return run_formula(c.map, F, F == Formula::eq11 ? c.target_alpha : c.alpha).pass;
}

template <Formula... Fs>
void add_formulas(std::vector<FuzzCheck>& out) {
  (out.push_back({std::string(to_string(Fs)), &formula_holds<Fs>}), ...);
}

std::vector<FuzzCheck> make_checks() {
  std::vector<FuzzCheck> out{
      {"hat-roundtrip", &hat_roundtrip},
      {"hat-dense-roundtrip", &hat_dense_roundtrip},
      {"ic-roundtrip", &ic_roundtrip},
      {"hat-pointwise", &hat_pointwise},
      {"ic-hat-pointwise", &ic_hat_pointwise},
      {"hat-table-inverse", &hat_table_is_inverse},
      {"ic-hat-table-inverse", &ic_hat_table_is_inverse},
      {"k-roundtrip", &k_roundtrip},
      {"k-two-routes", &k_two_routes},
      {"k-compat", &k_compat},
      {"hat-values", &hat_values},
      {"chi-pushforward", &chi_pushforward},
      {"degree-hat", &degree_hat},
      {"degree-ic", &degree_ic},
  };
  add_formulas<Formula::eq3, Formula::eq4, Formula::eq5, Formula::eq6, Formula::eq7, Formula::eq11, Formula::eq12,
               Formula::eq13, Formula::eq14, Formula::eq15, Formula::eq16, Formula::eq17, Formula::eq18, Formula::c1,
               Formula::c2>(out);
  return out;
}

// Outcome of one check: failed cleanly, threw, or passed.
struct Outcome {
  bool pass = true;
  std::string message;
};

Outcome run_check(const FuzzCheck& check, const FuzzCase& c) {
  try {
    return {check.run(c), {}};
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
}

bool fails_cleanly(const FuzzCheck& check, const FuzzCase& c) {
  try {
    return !check.run(c);
  } catch (const std::exception&) {
    return false;
  }
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t drop) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != drop) keep.push_back(i);
  return keep;
}

ConstrFn restrict_function(const ConstrFn& f, const PosetPtr& sub, std::span<const std::size_t> keep) {
  std::vector<Int> values;
  for (auto i : keep) values.push_back(f[i]);
  return {sub, std::move(values)};
}

// Rebuilds the source with chi_c values that make the kernel consistent again.
SpaceInstance rebalance_source(const SpaceInstance& source, const PosetPtr& target, std::span<const Int> entries) {
  const auto ns = source.poset->size();
  std::vector<StratumSpec> strata;
  for (std::size_t u = 0; u < ns; ++u) {
    auto s = source.poset->stratum(u);
    s.chi_c = 0;
    for (std::size_t v = 0; v < target->size(); ++v) s.chi_c = checked_fma(s.chi_c, target->chi_c(v), entries[v * ns + u]);
    strata.push_back(std::move(s));
  }
  auto poset = build_poset(strata, source.poset->relations());
  auto keep = all_but(ns, ns);
  return {poset, source.links.restrict_to(poset, keep)};
}

std::optional<FuzzCase> drop_target(const FuzzCase& c, std::size_t t) {
  const auto& map = c.map;
  const auto& target = map.target.poset;
  if (target->dense() == t) return std::nullopt;
  const auto keep = all_but(target->size(), t);
  auto sub = target->restrict_to(keep);
  const auto ns = map.source.poset->size();
  std::vector<Int> entries;
  for (auto v : keep)
    for (std::size_t u = 0; u < ns; ++u) entries.push_back(map.kernel(v, u));

  SpaceInstance target_space{sub, map.target.links.restrict_to(sub, keep)};
  auto source = map.source;
  auto validation = map.kernel.validation();
  if (validation == KernelValidation::check) {
    source = rebalance_source(map.source, sub, entries);
  }
  ProperMapKernel kernel(source.poset, sub, std::move(entries), validation);
  const auto values = c.alpha.values();
  auto alpha = ConstrFn(source.poset, std::vector<Int>(values.begin(), values.end()));
  return FuzzCase{{std::move(source), std::move(target_space), std::move(kernel)}, std::move(alpha),
                  restrict_function(c.target_alpha, sub, keep)};
}

std::optional<FuzzCase> drop_source(const FuzzCase& c, std::size_t s) {
  const auto& map = c.map;
  const auto& source = map.source.poset;
  if (source->size() == 1) return std::nullopt;
  const auto keep = all_but(source->size(), s);
  auto sub = source->restrict_to(keep);
  const auto nt = map.target.poset->size();
  std::vector<Int> entries;
  for (std::size_t v = 0; v < nt; ++v)
    for (auto u : keep) entries.push_back(map.kernel(v, u));
  ProperMapKernel kernel(sub, map.target.poset, std::move(entries), map.kernel.validation());
  return FuzzCase{{{sub, map.source.links.restrict_to(sub, keep)}, map.target, std::move(kernel)},
                  restrict_function(c.alpha, sub, keep), c.target_alpha};
}

Json case_to_json(const FuzzCase& c) {
  Json j;
  j["map"] = to_json(map_document("counterexample", c.map));
  j["function"] = function_to_json(c.alpha);
  j["target_function"] = function_to_json(c.target_alpha);
  return j;
}

}  // namespace

const std::vector<FuzzCheck>& fuzz_checks() {
  static const std::vector<FuzzCheck> checks = make_checks();
  return checks;
}

std::size_t FuzzResult::failures() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.failed;
  return n;
}

FuzzCase random_case(Rng& rng, std::size_t max_strata, bool inject_fault) {
  auto map = random_map(rng, max_strata);
  if (inject_fault) {
    const auto nt = map.target.poset->size();
    const auto ns = map.source.poset->size();
    std::vector<Int> entries(map.kernel.entries().begin(), map.kernel.entries().end());
    // Perturb an entry whose target stratum has nonzero chi_c when one
    // exists, so that the kernel really becomes inconsistent.
    std::vector<std::size_t> rows;
    for (std::size_t v = 0; v < nt; ++v)
      if (map.target.poset->chi_c(v) != 0) rows.push_back(v);
    const auto v = rows.empty() ? std::size_t{0}
                                : rows[static_cast<std::size_t>(draw(rng, 0, static_cast<Int>(rows.size()) - 1))];
    const auto u = static_cast<std::size_t>(draw(rng, 0, static_cast<Int>(ns) - 1));
    entries[v * ns + u] = checked_add(entries[v * ns + u], 1);
    map.kernel = ProperMapKernel(map.source.poset, map.target.poset, std::move(entries), KernelValidation::waive);
  }
  auto alpha = random_function(rng, map.source.poset);
  auto target_alpha = random_function(rng, map.target.poset);
  return {std::move(map), std::move(alpha), std::move(target_alpha)};
}

FuzzCase minimize(const FuzzCase& failing, const FuzzCheck& check) {
  FuzzCase current = failing;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    const auto nt = current.map.target.poset->size();
    const auto ns = current.map.source.poset->size();
    for (std::size_t i = 0; i < nt + ns && !shrunk; ++i) {
      std::optional<FuzzCase> candidate;
      try {
        candidate = i < nt ? drop_target(current, i) : drop_source(current, i - nt);
      } catch (const Error&) {
        continue;
      }
      if (candidate && fails_cleanly(check, *candidate)) {
        current = std::move(*candidate);
        shrunk = true;
      }
    }
  }
  return current;
}

FuzzResult run_fuzz(const FuzzOptions& options) {
  FuzzResult result;
  result.options = options;
  const auto& checks = fuzz_checks();
  for (const auto& check : checks) result.tallies.push_back({check.name, 0, 0});

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    Rng rng(options.seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
    const auto c = random_case(rng, options.max_strata, options.inject_fault);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      auto outcome = run_check(checks[i], c);
      auto& tally = result.tallies[i];
      if (outcome.pass) {
        ++tally.passed;
        continue;
      }
      if (tally.failed++ > 0) continue;
      auto minimized = outcome.message.empty() ? minimize(c, checks[i]) : c;
      result.counterexamples.push_back({trial, checks[i].name, std::move(outcome.message), c, std::move(minimized)});
    }
  }
  return result;
}

Json fuzz_to_json(const FuzzResult& result) {
  Json j;
  j["seed"] = result.options.seed;
  j["trials"] = result.options.trials;
  j["max_strata"] = result.options.max_strata;
  j["inject_fault"] = result.options.inject_fault;
  j["pass"] = result.pass();
  j["failures"] = result.failures();
  Json checks = Json::array();
  for (const auto& t : result.tallies) checks.push_back({{"check", t.check}, {"passed", t.passed}, {"failed", t.failed}});
  j["checks"] = std::move(checks);
  Json examples = Json::array();
  for (const auto& c : result.counterexamples) {
    Json e;
    e["trial"] = c.trial;
    e["check"] = c.check;
    if (!c.message.empty()) e["message"] = c.message;
    e["original_strata"] = {{"source", c.original.map.source.poset->size()},
                            {"target", c.original.map.target.poset->size()}};
    e["minimized"] = case_to_json(c.minimized);
    examples.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(examples);
  return j;
}

std::string fuzz_to_text(const FuzzResult& result) {
  std::ostringstream out;
  out << "fuzz seed=" << result.options.seed << " trials=" << result.options.trials
      << " max_strata=" << result.options.max_strata << (result.options.inject_fault ? " inject-fault" : "") << "\n";
  for (const auto& t : result.tallies)
    out << "  " << (t.failed ? "FAIL " : "ok   ") << t.check << "  " << t.passed << " passed, " << t.failed
        << " failed\n";
  for (const auto& c : result.counterexamples) {
    out << "counterexample for " << c.check << " (trial " << c.trial << "): target "
        << c.original.map.target.poset->size() << " -> " << c.minimized.map.target.poset->size() << " strata, source "
        << c.original.map.source.poset->size() << " -> " << c.minimized.map.source.poset->size() << " strata\n";
    if (!c.message.empty()) out << "  error: " << c.message << "\n";
    out << emit(case_to_json(c.minimized));
  }
  out << (result.pass() ? "PASS" : "FAIL") << " (" << result.failures() << " failures)\n";
  return out.str();
}

}  // namespace eulerstrat
