// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <functional>
#include <iostream>
#include <sstream>

#include "eulerstrat/catalog.hpp"
#include "eulerstrat/cli/commands.hpp"
#include "eulerstrat/fuzz.hpp"
#include "oracles.hpp"

using namespace eulerstrat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<Int> v(const ConstrFn& f) { return oracle::values(f); }

Outcome basis_round_trips() {
  Outcome o;
  Rng rng(1001);
  for (int trial = 0; trial < 10000 && o.pass; ++trial) {
    auto p = random_poset(rng, {10, true, true, 4});
    auto links = random_links(rng, p, 5);
    auto alpha = random_function(rng, p);
    const auto t = std::to_string(trial);

    auto hat = decompose_hat(alpha);
    o.require(recompose(hat) == alpha, "decompose_hat, trial " + t);
    // Independent route: hat functions in the closed basis, summed pointwise.
    std::vector<Int> closed(p->size(), 0);
    for (std::size_t u = 0; u < p->size(); ++u) {
      const auto h = hat_closed(p, u);
      for (std::size_t w = 0; w < p->size(); ++w) closed[w] += hat.coefficients[u] * h.coefficients[w];
    }
    o.require(oracle::closed_sum(*p, closed) == v(alpha), "hat oracle, trial " + t);

    o.require(recompose(decompose_hat_dense(alpha)) == alpha, "decompose_hat_dense, trial " + t);

    auto ic = decompose_ic(links, alpha);
    o.require(recompose(ic, links) == alpha, "decompose_ic, trial " + t);
    std::vector<Int> in_ic(p->size(), 0);
    const auto top = p->require_dense();
    for (std::size_t u = 0; u < p->size(); ++u) {
      if (u == top) {
        in_ic[top] += ic.coefficients[top];
        continue;
      }
      const auto h = hat_ic(links, u);
      for (std::size_t w = 0; w < p->size(); ++w) in_ic[w] += ic.coefficients[u] * h.coefficients[w];
    }
    o.require(oracle::ic_sum(links, in_ic) == v(alpha), "ic oracle, trial " + t);
  }
  return o;
}

Outcome inversion() {
  Outcome o;
  Rng rng(1002);
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    auto p = random_poset(rng, {10, coin(rng, 50), coin(rng, 50), 4});
    auto a = random_unipotent(rng, p);
    auto inv = invert_unipotent(a);
    const std::vector<Int> entries(a.entries().begin(), a.entries().end());
    o.require(std::vector<Int>(inv.entries().begin(), inv.entries().end()) == oracle::gauss_inverse(entries, p->size()),
              "trial " + std::to_string(trial));
  }
  return o;
}

Outcome pointwise_hats() {
  Outcome o;
  Rng rng(1003);
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    auto p = random_poset(rng, {10, true, true, 4});
    auto links = random_links(rng, p, 5);
    for (std::size_t u = 0; u < p->size(); ++u) {
      o.require(oracle::closed_sum(*p, hat_closed(p, u).coefficients) == v(indicator(p, u)),
                "hat of stratum " + p->id(u) + ", trial " + std::to_string(trial));
      o.require(oracle::ic_sum(links, hat_ic(links, u).coefficients) == v(indicator(p, u)),
                "ic-hat of stratum " + p->id(u) + ", trial " + std::to_string(trial));
    }
  }
  return o;
}

Outcome k_classes() {
  Outcome o;
  Rng rng(1004);
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    auto p = random_poset(rng, {10, true, true, 4});
    auto links = random_links(rng, p, 5);
    auto coefficients = random_function(rng, p);
    KClass f{p, v(coefficients)};
    const auto t = std::to_string(trial);
    const auto stalks = k_stalks(f, links);
    o.require(v(stalks) == oracle::ic_sum(links, f.coefficients), "stalk oracle, trial " + t);
    o.require(k_decompose(stalks, links) == f, "k_decompose after k_stalk, trial " + t);
    o.require(k_stalks(k_decompose(coefficients, links), links) == coefficients, "k_stalk after k_decompose, trial " + t);
    o.require(k_expand(stalks, links) == f, "direct expansion, trial " + t);
    const auto fn = k_function(f, links);
    for (std::size_t w = 0; w < p->size(); ++w)
      o.require(fn[w] == stalks[w], "k_function at " + p->id(w) + ", trial " + t);
  }
  return o;
}

Outcome chi_of_pushforward() {
  Outcome o;
  Rng rng(1005);
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    auto map = random_map(rng, 10);
    auto alpha = random_function(rng, map.source.poset);
    const auto image = pushforward(map.kernel, alpha);
    o.require(euler(image) == euler(alpha), "library, trial " + std::to_string(trial));
    o.require(oracle::euler(*map.target.poset, oracle::push(map.kernel, v(alpha))) ==
                  oracle::euler(*map.source.poset, v(alpha)),
              "oracle, trial " + std::to_string(trial));
  }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  struct Case {
    const char* example;
    Formula formula;
    const char* text;
  };
  const Case cases[] = {
      {"blow-up", Formula::eq6, "4 = 1*3 + (2 - 1)*1"},
      {"blow-up", Formula::eq15, "4 = 1*3 + (2 - 1*1)*1"},
      {"nodal-cubic", Formula::c1, "1 = 1*2 + (1 - 2)*1"},
      {"nodal-cubic-normalization", Formula::eq17, "2 = 1*2 + (2 - 1*2)*1"},
  };
  for (const auto& c : cases) {
    const auto r = run_formula(build_example(find_example(c.example)), c.formula);
    const auto label = std::string(c.example) + " " + std::string(to_string(c.formula));
    o.require(r.pass, label + " does not pass");
    o.require(r.equation_text() == c.text, label + " reads " + r.equation_text());
  }
  return o;
}

bool same_numbers(const FormulaReport& a, const FormulaReport& b) {
  if (a.lhs != b.lhs || a.rhs != b.rhs || a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].coefficient != b.terms[i].coefficient || a.terms[i].basis_value != b.terms[i].basis_value ||
        a.terms[i].contribution != b.terms[i].contribution)
      return false;
  return true;
}

Outcome class_identities() {
  Outcome o;
  Rng rng(1007);
  for (int trial = 0; trial < 1000 && o.pass; ++trial) {
    auto map = random_map(rng, 8);
    auto alpha = random_function(rng, map.source.poset);
    const auto& k = map.kernel;
    const auto& links = map.target.links;
    const auto t = ", trial " + std::to_string(trial);
    for (auto f : {Formula::eq5, Formula::eq7, Formula::eq14, Formula::eq16, Formula::eq18, Formula::c2}) {
      const auto r = accepts_function(f) ? run_formula(map, f, alpha) : run_formula(map, f);
      o.require(r.pass, std::string(to_string(f)) + t);
    }
    // chi substituted for the universal homomorphism.
    const auto one = constant(map.source.poset, 1);
    const auto ic_x = ic_space(map.source.links);
    const auto chi = chi_hom(k.target());
    const auto ichi = ichi_hom(links);
    o.require(same_numbers(verify_hat_class(k, alpha, chi, Formula::eq5), verify_chi_mult(k, alpha, Formula::eq4)),
              "eq5 under chi" + t);
    o.require(same_numbers(verify_hat_class(k, one, chi, Formula::eq7), verify_chi_mult(k, one, Formula::eq6)),
              "eq7 under chi" + t);
    o.require(same_numbers(verify_ic_class(k, alpha, links, ichi, Formula::eq14),
                           verify_ichi_mult(k, alpha, links, Formula::eq13)),
              "eq14 under I-chi" + t);
    o.require(same_numbers(verify_ic_class(k, one, links, ichi, Formula::eq16),
                           verify_ichi_mult(k, one, links, Formula::eq15)),
              "eq16 under I-chi" + t);
    o.require(same_numbers(verify_ic_class(k, ic_x, links, ichi, Formula::eq18),
                           verify_ichi_mult(k, ic_x, links, Formula::eq17)),
              "eq18 under I-chi" + t);
    const auto id = ProperMapKernel::identity(k.target());
    const auto one_y = constant(k.target(), 1);
    o.require(same_numbers(verify_ic_class(id, one_y, links, ichi, Formula::c2), verify_compare(links)),
              "c2 under I-chi" + t);
  }
  return o;
}

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = cli::run(args, o, e);
  out = o.str();
  return code;
}

Outcome fault_injection() {
  Outcome o;
  const auto result = run_fuzz({8, 100, 0, true});
  o.require(!result.pass(), "no failure detected");
  o.require(!result.counterexamples.empty(), "no counterexample emitted");
  for (const auto& c : result.counterexamples) {
    const auto& checks = fuzz_checks();
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const FuzzCheck& k) { return k.name == c.check; });
    o.require(it != checks.end() && (!c.message.empty() || !it->run(c.minimized)),
              "minimized counterexample for " + c.check + " does not fail");
  }
  std::string out;
  o.require(run_cli({"fuzz", "--seed", "0", "--trials", "100", "--inject-fault", "--json"}, out) == 1,
            "cli exit code is not 1");
  o.require(out.find("\"minimized\"") != std::string::npos, "cli report has no minimized counterexample");
  return o;
}

Outcome reproducibility() {
  Outcome o;
  for (const char* fault : {"", "--inject-fault"}) {
    std::vector<std::string> args{"fuzz", "--seed", "2024", "--trials", "100", "--strata", "8", "--json"};
    if (*fault) args.emplace_back(fault);
    std::string first, second;
    run_cli(args, first);
    run_cli(args, second);
    o.require(!first.empty() && first == second, std::string("reports differ") + (*fault ? " with faults" : ""));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 basis round trips (10^4 posets)", basis_round_trips},
      {"2 recursion inverse matches rational elimination (10^3 matrices)", inversion},
      {"3 pointwise hat identities (10^3 linked posets)", pointwise_hats},
      {"4 K-class round trips and function compatibility (10^3 classes)", k_classes},
      {"5 chi of pushforward equals chi (10^3 kernels)", chi_of_pushforward},
      {"6 worked examples", worked_examples},
      {"7 universal class identities and degree substitution (10^3 instances)", class_identities},
      {"8 fault injection is detected and minimized", fault_injection},
      {"9 fuzz reports are reproducible", reproducibility},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name;
    if (!o.pass) std::cout << " -- " << o.detail;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
