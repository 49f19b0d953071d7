#include "eulerstrat/report.hpp"

#include <array>

namespace eulerstrat {

namespace {

constexpr std::array kFormulas{Formula::eq3,  Formula::eq4,  Formula::eq5,  Formula::eq6,  Formula::eq7,
                               Formula::eq11, Formula::eq12, Formula::eq13, Formula::eq14, Formula::eq15,
                               Formula::eq16, Formula::eq17, Formula::eq18, Formula::c1,   Formula::c2};

}  // namespace

std::string_view to_string(Formula f) {
  switch (f) {
    case Formula::eq3: return "eq3";
    case Formula::eq4: return "eq4";
    case Formula::eq5: return "eq5";
    case Formula::eq6: return "eq6";
    case Formula::eq7: return "eq7";
    case Formula::eq11: return "eq11";
    case Formula::eq12: return "eq12";
    case Formula::eq13: return "eq13";
    case Formula::eq14: return "eq14";
    case Formula::eq15: return "eq15";
    case Formula::eq16: return "eq16";
    case Formula::eq17: return "eq17";
    case Formula::eq18: return "eq18";
    case Formula::c1: return "c1";
    case Formula::c2: return "c2";
  }
  return "?";
}

std::optional<Formula> parse_formula(std::string_view name) {
  for (auto f : kFormulas)
    if (to_string(f) == name) return f;
  return std::nullopt;
}

std::span<const Formula> all_formulas() { return kFormulas; }

ReportValue ReportValue::of(Int v) {
  ReportValue out;
  out.scalar_ = v;
  return out;
}

ReportValue ReportValue::of(const ConstrFn& f) {
  ReportValue out;
  out.kind_ = Kind::function;
  for (std::size_t v = 0; v < f.size(); ++v) out.components_.emplace_back(f.space()->id(v), f[v]);
  return out;
}

ReportValue ReportValue::composite(Kind kind, std::vector<std::pair<std::string, Int>> components) {
  ReportValue out;
  out.kind_ = kind;
  out.components_ = std::move(components);
  return out;
}

std::string ReportValue::to_text() const {
  switch (kind_) {
    case Kind::integer:
      return std::to_string(scalar_);
    case Kind::function: {
      std::string s = "{";
      for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) s += ", ";
        s += components_[i].first + ": " + std::to_string(components_[i].second);
      }
      return s + "}";
    }
    case Kind::formal_class: {
      std::string s;
      for (const auto& [name, c] : components_) {
        if (c == 0) continue;
        if (s.empty()) {
          s = c == 1 ? "" : c == -1 ? "-" : std::to_string(c) + " ";
        } else {
          s += c < 0 ? " - " : " + ";
          Int mag = c < 0 ? -c : c;
          if (mag != 1) s += std::to_string(mag) + " ";
        }
        s += name;
      }
      return s.empty() ? "0" : s;
    }
  }
  return {};
}

std::string FormulaReport::equation_text() const {
  std::string s = lhs.to_text() + " = ";
  if (terms.empty()) return s + "0";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    const bool wrap = terms[i].basis_value.kind() != ReportValue::Kind::integer;
    s += terms[i].coefficient_expr + "*" + (wrap ? "(" : "") + terms[i].basis_value.to_text() + (wrap ? ")" : "");
  }
  return s;
}

void finalize(FormulaReport& report) {
  if (report.terms.empty()) {
    report.rhs = ReportValue::of(Int{0});
    report.pass = report.lhs == report.rhs;
    return;
  }
  const auto& first = report.terms.front().contribution;
  Int scalar = 0;
  auto comps = first.components();
  for (auto& c : comps) c.second = 0;
  for (const auto& term : report.terms) {
    const auto& c = term.contribution;
    if (c.kind() != first.kind() || c.components().size() != comps.size())
      throw InputError("report terms of different shapes");
    scalar = checked_add(scalar, c.scalar());
    for (std::size_t k = 0; k < comps.size(); ++k) comps[k].second = checked_add(comps[k].second, c.components()[k].second);
  }
  report.rhs = first.kind() == ReportValue::Kind::integer ? ReportValue::of(scalar)
                                                           : ReportValue::composite(first.kind(), std::move(comps));
  report.pass = report.lhs == report.rhs;
}

}  // namespace eulerstrat
