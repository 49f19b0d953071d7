#include "eulerstrat/pushforward.hpp"

namespace eulerstrat {

ProperMapKernel::ProperMapKernel(PosetPtr source, PosetPtr target, std::vector<Int> entries,
                                 KernelValidation validation)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)), validation_(validation) {
  if (entries_.size() != source_->size() * target_->size())
    throw InputError("kernel size does not match target x source strata");
  if (validation_ == KernelValidation::check) {
    auto bad = inconsistent_columns();
    if (!bad.empty()) {
      auto u = bad.front();
      Int sum = 0;
      for (std::size_t v = 0; v < target_->size(); ++v) sum = checked_fma(sum, target_->chi_c(v), (*this)(v, u));
      throw KernelConsistencyError("kernel column for source stratum '" + source_->id(u) + "' gives " +
                                   std::to_string(sum) + ", expected chi_c = " + std::to_string(source_->chi_c(u)));
    }
  }
}

ProperMapKernel ProperMapKernel::identity(const PosetPtr& space) {
  const auto n = space->size();
  std::vector<Int> entries(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) entries[i * n + i] = 1;
  return {space, space, std::move(entries)};
}

std::vector<std::size_t> ProperMapKernel::inconsistent_columns() const {
  std::vector<std::size_t> bad;
  for (std::size_t u = 0; u < source_->size(); ++u) {
    Int sum = 0;
    for (std::size_t v = 0; v < target_->size(); ++v) sum = checked_fma(sum, target_->chi_c(v), (*this)(v, u));
    if (sum != source_->chi_c(u)) bad.push_back(u);
  }
  return bad;
}

ProperMapKernel compose(const ProperMapKernel& second, const ProperMapKernel& first) {
  if (!same_space(first.target(), second.source())) throw SpaceMismatchError("kernels are not composable");
  const auto& mid = *first.target();
  const auto nt = second.target()->size();
  const auto ns = first.source()->size();
  std::vector<Int> entries(nt * ns, 0);
  for (std::size_t v = 0; v < nt; ++v)
    for (std::size_t w = 0; w < mid.size(); ++w) {
      Int a = second(v, w);
      if (a == 0) continue;
      for (std::size_t u = 0; u < ns; ++u) entries[v * ns + u] = checked_fma(entries[v * ns + u], a, first(w, u));
    }
  const bool checked = first.validation() == KernelValidation::check && second.validation() == KernelValidation::check;
  return {first.source(), second.target(), std::move(entries), checked ? KernelValidation::check : KernelValidation::waive};
}

ConstrFn pushforward(const ProperMapKernel& kernel, const ConstrFn& alpha) {
  if (!same_space(kernel.source(), alpha.space())) throw SpaceMismatchError("function does not live on the map's source");
  const auto& target = kernel.target();
  std::vector<Int> out(target->size(), 0);
  for (std::size_t v = 0; v < out.size(); ++v)
    for (std::size_t u = 0; u < alpha.size(); ++u)
      if (alpha[u] != 0) out[v] = checked_fma(out[v], alpha[u], kernel(v, u));
  return {target, std::move(out)};
}

FormulaReport decompose_pushforward_hat(const ProperMapKernel& kernel, const ConstrFn& alpha) {
  auto fiber = pushforward(kernel, alpha);
  const auto& target = kernel.target();
  auto table = hat_closed_table(target);
  std::function<ConstrFn(std::size_t)> hat = [&](std::size_t v) {
    return recompose(BasisCoefficients{Basis::closed_indicator, target, table.column(v)});
  };
  return detail::stratified_report<ConstrFn>(Formula::eq3, ReportValue::of(fiber), fiber, nullptr,
                                             constant(target, 1), hat);
}

FormulaReport verify_chi_mult(const ProperMapKernel& kernel, const ConstrFn& alpha, Formula label) {
  auto fiber = pushforward(kernel, alpha);
  const auto& target = kernel.target();
  const auto top = target->require_dense();
  auto chi = chi_hom(target);
  std::function<Int(std::size_t)> hat = [&](std::size_t v) { return hat_value(chi, v); };
  return detail::stratified_report<Int>(label, ReportValue::of(euler(alpha)), fiber, nullptr, chi.values[top], hat);
}

FormulaReport verify_ic_pushforward(const ProperMapKernel& kernel, const ConstrFn& alpha, const LinkSystem& target_links,
                                    Formula label) {
  if (!same_space(kernel.target(), target_links.space())) throw SpaceMismatchError("link system is not on the map's target");
  auto fiber = pushforward(kernel, alpha);
  const auto top = kernel.target()->require_dense();
  auto table = hat_ic_table(target_links);
  std::function<ConstrFn(std::size_t)> hat = [&](std::size_t v) {
    return recompose(BasisCoefficients{Basis::ic, kernel.target(), table.column(v)}, target_links);
  };
  return detail::stratified_report<ConstrFn>(label, ReportValue::of(fiber), fiber, &target_links,
                                             ic_function(target_links, top), hat);
}

FormulaReport verify_ichi_mult(const ProperMapKernel& kernel, const ConstrFn& alpha, const LinkSystem& target_links,
                               Formula label) {
  if (!same_space(kernel.target(), target_links.space())) throw SpaceMismatchError("link system is not on the map's target");
  auto fiber = pushforward(kernel, alpha);
  const auto top = kernel.target()->require_dense();
  auto ichi = ichi_hom(target_links);
  std::function<Int(std::size_t)> hat = [&](std::size_t v) { return ichat_value(target_links, ichi, v); };
  return detail::stratified_report<Int>(label, ReportValue::of(euler(alpha)), fiber, &target_links, ichi.values[top], hat);
}

FormulaReport verify_compare(const LinkSystem& links) {
  const auto& space = links.space();
  return verify_ichi_mult(ProperMapKernel::identity(space), constant(space, 1), links, Formula::c1);
}

FormulaReport verify_decompose_ic(const LinkSystem& links, const ConstrFn& alpha) {
  return verify_ic_pushforward(ProperMapKernel::identity(links.space()), alpha, links, Formula::eq11);
}

}  // namespace eulerstrat
