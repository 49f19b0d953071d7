#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerstrat/hom.hpp"

namespace eulerstrat {

/// The identities this library checks, named as on the command line.
enum class Formula { eq3, eq4, eq5, eq6, eq7, eq11, eq12, eq13, eq14, eq15, eq16, eq17, eq18, c1, c2 };

std::string_view to_string(Formula f);
std::optional<Formula> parse_formula(std::string_view name);
std::span<const Formula> all_formulas();

/// An integer, a constructible function, or a formal class, flattened to
/// labelled integer components for printing and comparison.
class ReportValue {
 public:
  enum class Kind { integer, function, formal_class };

  ReportValue() = default;
  static ReportValue of(Int v);
  static ReportValue of(const ConstrFn& f);
  static ReportValue composite(Kind kind, std::vector<std::pair<std::string, Int>> components);
  template <class Family>
  static ReportValue of(const FormalClass<Family>& c) {
    ReportValue out;
    out.kind_ = Kind::formal_class;
    for (std::size_t v = 0; v < c.space()->size(); ++v)
      out.components_.emplace_back(FormalClass<Family>::symbol_name(*c.space(), v), c[v]);
    return out;
  }

  Kind kind() const { return kind_; }
  Int scalar() const { return scalar_; }
  const std::vector<std::pair<std::string, Int>>& components() const { return components_; }

  /// "4", "{W: 2, S: 1}", "2 c*[S] - c*[W]".
  std::string to_text() const;

  friend bool operator==(const ReportValue&, const ReportValue&) = default;

 private:
  Kind kind_ = Kind::integer;
  Int scalar_ = 0;
  std::vector<std::pair<std::string, Int>> components_;
};

/// One summand of a right-hand side: coefficient * basis value.
struct FormulaTerm {
  std::string label;             // stratum id; the leading term uses the dense stratum
  std::string coefficient_expr;  // e.g. "(2 - 1*1)"
  Int coefficient = 0;
  ReportValue basis_value;
  ReportValue contribution;

  friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

struct FormulaReport {
  std::string formula;
  ReportValue lhs;
  ReportValue rhs;
  std::vector<FormulaTerm> terms;
  bool pass = false;

  /// "4 = 1*3 + (2 - 1)*1" for integer-valued reports.
  std::string equation_text() const;
};

/// Sums the term contributions into `rhs` and sets `pass` to lhs == rhs.
void finalize(FormulaReport& report);

}  // namespace eulerstrat
