#pragma once

// Class-level stratified multiplicative formulas. The left side
// f_*(c_*(alpha)) is computed as phi(f_*(alpha)) (c_* commutes with proper
// pushforward); the right side is assembled from phi-hat values. With the
// universal phi these are coefficientwise identities in FormalClass; with
// phi = chi they reduce to the numeric formulas.

#include "eulerstrat/pushforward.hpp"

namespace eulerstrat {

/// phi(f_* alpha) = chi(alpha|F) phi(1_Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F)) phi-hat(closure V)
/// for a closed-basis phi on the target.
template <class G>
FormulaReport verify_hat_class(const ProperMapKernel& kernel, const ConstrFn& alpha, const HomSpec<G>& phi,
                               Formula label) {
  if (!same_space(kernel.target(), phi.space)) throw SpaceMismatchError("homomorphism is not on the map's target");
  auto fiber = pushforward(kernel, alpha);
  const auto top = kernel.target()->require_dense();
  std::function<G(std::size_t)> hat = [&](std::size_t v) { return hat_value(phi, v); };
  return detail::stratified_report<G>(label, ReportValue::of(evaluate(phi, fiber)), fiber, nullptr, phi.values[top], hat);
}

/// phi(f_* alpha) = chi(alpha|F) phi(ic_Y) + sum_{V<S} (chi(alpha|F_V) - chi(alpha|F) cone(V, S)) I-phi-hat(closure V)
/// for an ic-basis phi on the target.
template <class G>
FormulaReport verify_ic_class(const ProperMapKernel& kernel, const ConstrFn& alpha, const LinkSystem& target_links,
                              const HomSpec<G>& phi, Formula label) {
  if (!same_space(kernel.target(), phi.space) || !same_space(kernel.target(), target_links.space()))
    throw SpaceMismatchError("homomorphism or link system is not on the map's target");
  auto fiber = pushforward(kernel, alpha);
  const auto top = kernel.target()->require_dense();
  std::function<G(std::size_t)> hat = [&](std::size_t v) { return ichat_value(target_links, phi, v); };
  return detail::stratified_report<G>(label, ReportValue::of(evaluate(phi, fiber, target_links)), fiber, &target_links,
                                      phi.values[top], hat);
}

/// Universal check of eq5, eq7 (closed symbols) or eq14, eq16, eq18, c2 (ic
/// symbols). The caller supplies alpha (1_X for eq7 and eq16, ic_X for eq18).
/// For c2 the kernel and alpha are ignored: the identity map and 1_Y are used.
FormulaReport verify_class_formula(const ProperMapKernel& kernel, const ConstrFn& alpha, const LinkSystem& target_links,
                                   Formula which);

}  // namespace eulerstrat
