#pragma once

// Proper maps, abstracted as fiberwise compactly supported Euler
// characteristics, and the stratified multiplicative formulas for chi and
// I-chi.
//
// A kernel entry k(V, U) is chi_c(f^-1(v) intersected with U) for a point v
// of the target stratum V. Taking it constant along V is the combinatorial
// form of f being a stratified submersion.

#include <functional>
#include <string>
#include <vector>

#include "eulerstrat/report.hpp"

namespace eulerstrat {

enum class KernelValidation { check, waive };

class ProperMapKernel {
 public:
  /// `entries` is row-major, target strata by source strata. With
  /// KernelValidation::check, throws KernelConsistencyError unless
  /// sum_V chi_c(V) k(V, U) = chi_c(U) for every source stratum U.
  ProperMapKernel(PosetPtr source, PosetPtr target, std::vector<Int> entries,
                  KernelValidation validation = KernelValidation::check);

  static ProperMapKernel identity(const PosetPtr& space);

  const PosetPtr& source() const { return source_; }
  const PosetPtr& target() const { return target_; }
  Int operator()(std::size_t target_stratum, std::size_t source_stratum) const {
    return entries_[target_stratum * source_->size() + source_stratum];
  }
  std::span<const Int> entries() const { return entries_; }
  KernelValidation validation() const { return validation_; }

  /// Source strata whose column violates the consistency identity.
  std::vector<std::size_t> inconsistent_columns() const;
  bool consistent() const { return inconsistent_columns().empty(); }

 private:
  PosetPtr source_;
  PosetPtr target_;
  std::vector<Int> entries_;
  KernelValidation validation_;
};

/// Kernel of g o f: the matrix product k_g k_f.
ProperMapKernel compose(const ProperMapKernel& second, const ProperMapKernel& first);

/// f_*(alpha)(V) = sum_U alpha(U) k(V, U).
ConstrFn pushforward(const ProperMapKernel& kernel, const ConstrFn& alpha);

/// f_*(alpha) = chi(alpha|F) 1_Y + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F)) hat 1_{closure V}
/// as functions on the target.
FormulaReport decompose_pushforward_hat(const ProperMapKernel& kernel, const ConstrFn& alpha);

/// chi(alpha) = chi(alpha|F) chi(Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F)) chi-hat(closure V),
/// with chi(alpha) evaluated on the source. `label` is eq4, or eq6 when alpha = 1_X.
FormulaReport verify_chi_mult(const ProperMapKernel& kernel, const ConstrFn& alpha, Formula label = Formula::eq4);

/// f_*(alpha) = chi(alpha|F) ic_Y + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F) cone(V, S)) hat-ic(closure V).
FormulaReport verify_ic_pushforward(const ProperMapKernel& kernel, const ConstrFn& alpha, const LinkSystem& target_links,
                                    Formula label = Formula::eq12);

/// chi(alpha) = chi(alpha|F) I-chi(Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F) cone(V, S)) I-chi-hat(closure V).
/// `label` is eq13, eq15 (alpha = 1_X) or eq17 (alpha = ic_X). For eq17 the
/// fiber terms f_*(ic_X)(V) stand for I-chi of the preimage of the open cone
/// on the link, and f_*(ic_X)(S) for I-chi of the general fiber.
FormulaReport verify_ichi_mult(const ProperMapKernel& kernel, const ConstrFn& alpha, const LinkSystem& target_links,
                               Formula label = Formula::eq13);

/// chi(Y) = I-chi(Y) + sum_{V<S} (1 - cone(V, S)) I-chi-hat(closure V).
FormulaReport verify_compare(const LinkSystem& links);

/// alpha = alpha(S) ic_Y + sum_{V<S} (alpha(V) - alpha(S) cone(V, S)) hat-ic(closure V).
FormulaReport verify_decompose_ic(const LinkSystem& links, const ConstrFn& alpha);

namespace detail {

inline Int scale_value(Int k, Int g) { return checked_mul(k, g); }
inline ConstrFn scale_value(Int k, const ConstrFn& g) { return g.scaled(k); }
template <class Family>
FormalClass<Family> scale_value(Int k, const FormalClass<Family>& g) {
  return g.scaled(k);
}

/// Assembles
///   lhs = fiber(S) leading + sum_{V<S} (fiber(V) - fiber(S) * t(V)) hat(V)
/// where t(V) = cone(V, S) when `links` is given and 1 otherwise.
template <class G>
FormulaReport stratified_report(Formula label, ReportValue lhs, const ConstrFn& fiber, const LinkSystem* links,
                                const G& leading, const std::function<G(std::size_t)>& hat) {
  const auto& target = *fiber.space();
  const auto top = target.require_dense();
  const bool compare = label == Formula::c1 || label == Formula::c2;

  FormulaReport report;
  report.formula = std::string(to_string(label));
  report.lhs = std::move(lhs);

  const Int general = fiber[top];
  report.terms.push_back(
      {target.id(top), std::to_string(general), general, ReportValue::of(leading), ReportValue::of(scale_value(general, leading))});

  for (std::size_t v = 0; v < target.size(); ++v) {
    if (v == top) continue;
    Int t = links ? links->cone(v, top) : 1;
    Int coefficient = checked_sub(fiber[v], checked_mul(general, t));
    std::string expr = "(" + std::to_string(fiber[v]) + " - ";
    if (compare)
      expr += std::to_string(t);
    else
      expr += std::to_string(general) + (links ? "*" + std::to_string(t) : "");
    expr += ")";
    G basis = hat(v);
    report.terms.push_back(
        {target.id(v), std::move(expr), coefficient, ReportValue::of(basis), ReportValue::of(scale_value(coefficient, basis))});
  }
  finalize(report);
  return report;
}

}  // namespace detail

}  // namespace eulerstrat
