#include "eulerstrat/constructible.hpp"

namespace eulerstrat {

ConstrFn::ConstrFn(PosetPtr space) : space_(std::move(space)), values_(space_->size(), 0) {}

ConstrFn::ConstrFn(PosetPtr space, std::vector<Int> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (values_.size() != space_->size())
    throw InputError("function has " + std::to_string(values_.size()) + " values for " +
                     std::to_string(space_->size()) + " strata");
}

ConstrFn ConstrFn::scaled(Int k) const {
  std::vector<Int> out(values_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(k, values_[i]);
  return {space_, std::move(out)};
}

namespace {

template <class Op>
ConstrFn pointwise(const ConstrFn& a, const ConstrFn& b, Op op) {
  if (!same_space(a.space(), b.space())) throw SpaceMismatchError("functions live on different spaces");
  std::vector<Int> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a[i], b[i]);
  return {a.space(), std::move(out)};
}

}  // namespace

ConstrFn operator+(const ConstrFn& a, const ConstrFn& b) { return pointwise(a, b, checked_add); }
ConstrFn operator-(const ConstrFn& a, const ConstrFn& b) { return pointwise(a, b, checked_sub); }
ConstrFn operator*(const ConstrFn& a, const ConstrFn& b) { return pointwise(a, b, checked_mul); }

ConstrFn indicator(const PosetPtr& space, std::size_t v) {
  if (v >= space->size()) throw UnknownStratumError("stratum index out of range");
  std::vector<Int> values(space->size(), 0);
  values[v] = 1;
  return {space, std::move(values)};
}

ConstrFn closed_indicator(const PosetPtr& space, std::size_t v) {
  if (v >= space->size()) throw UnknownStratumError("stratum index out of range");
  std::vector<Int> values(space->size(), 0);
  for (auto w : space->down_set(v)) values[w] = 1;
  return {space, std::move(values)};
}

ConstrFn constant(const PosetPtr& space, Int c) { return {space, std::vector<Int>(space->size(), c)}; }

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::open_indicator: return "open";
    case Basis::closed_indicator: return "closed";
    case Basis::hat: return "hat";
    case Basis::dense_hat: return "dense-hat";
    case Basis::ic: return "ic";
    case Basis::dense_ic_hat: return "dense-ic-hat";
  }
  return "?";
}

BasisCoefficients hat_closed(const PosetPtr& space, std::size_t v) {
  if (v >= space->size()) throw UnknownStratumError("stratum index out of range");
  const auto n = space->size();
  const auto below = space->down_set(v);
  // hat[u] for u in the down-set of v, each an expansion over closed indicators.
  std::vector<std::vector<Int>> hat(n);
  for (auto u : below) {
    std::vector<Int> h(n, 0);
    h[u] = 1;
    for (auto w : below) {
      if (!space->less(w, u)) continue;
      for (std::size_t k = 0; k < n; ++k) h[k] = checked_sub(h[k], hat[w][k]);
    }
    hat[u] = std::move(h);
  }
  return {Basis::closed_indicator, space, std::move(hat[v])};
}

TriangularMatrix hat_closed_table(const PosetPtr& space) {
  const auto n = space->size();
  std::vector<Int> table(n * n, 0);  // row-major; column u is hat(u)
  for (std::size_t u = 0; u < n; ++u) {
    table[u * n + u] = 1;
    for (std::size_t w = 0; w < u; ++w) {
      if (!space->less(w, u)) continue;
      for (std::size_t k = 0; k <= w; ++k)
        table[k * n + u] = checked_sub(table[k * n + u], table[k * n + w]);
    }
  }
  return {space, std::move(table)};
}

BasisCoefficients decompose_hat(const ConstrFn& alpha) {
  return {Basis::hat, alpha.space(), {alpha.values().begin(), alpha.values().end()}};
}

BasisCoefficients decompose_hat_dense(const ConstrFn& alpha) {
  const auto& space = *alpha.space();
  const auto top = space.require_dense();
  std::vector<Int> c(space.size());
  for (std::size_t v = 0; v < c.size(); ++v) c[v] = v == top ? alpha[top] : checked_sub(alpha[v], alpha[top]);
  return {Basis::dense_hat, alpha.space(), std::move(c)};
}

BasisCoefficients decompose_closed(const ConstrFn& alpha) {
  auto mobius = invert_unipotent(closure_matrix(alpha.space()));
  return {Basis::closed_indicator, alpha.space(), mobius.apply(alpha.values())};
}

ConstrFn recompose(const BasisCoefficients& c) {
  const auto& space = c.space;
  const auto n = space->size();
  if (c.coefficients.size() != n) throw InputError("coefficient vector does not match the number of strata");
  switch (c.basis) {
    case Basis::open_indicator:
      return {space, c.coefficients};
    case Basis::closed_indicator:
      return {space, closure_matrix(space).apply(c.coefficients)};
    case Basis::hat:
    case Basis::dense_hat: {
      // Sum of coefficient * hat function, with hat functions expanded
      // through the closed-indicator basis.
      auto table = hat_closed_table(space);
      std::vector<Int> closed(n, 0);
      std::optional<std::size_t> top;
      if (c.basis == Basis::dense_hat) top = space->require_dense();
      for (std::size_t v = 0; v < n; ++v) {
        Int coef = c.coefficients[v];
        if (coef == 0) continue;
        if (top && v == *top) {
          closed[v] = checked_add(closed[v], coef);  // 1_Y = 1_{closure S}
          continue;
        }
        for (std::size_t w = 0; w <= v; ++w)
          if (Int h = table(w, v)) closed[w] = checked_fma(closed[w], coef, h);
      }
      return {space, closure_matrix(space).apply(closed)};
    }
    case Basis::ic:
    case Basis::dense_ic_hat:
      break;
  }
  throw InputError("recomposing in the '" + std::string(to_string(c.basis)) + "' basis needs a link system");
}

Int euler(const ConstrFn& alpha) {
  Int acc = 0;
  for (std::size_t v = 0; v < alpha.size(); ++v) acc = checked_fma(acc, alpha[v], alpha.space()->chi_c(v));
  return acc;
}

Int closure_euler(const StratPoset& space, std::size_t v) {
  Int acc = 0;
  for (auto w : space.down_set(v)) acc = checked_add(acc, space.chi_c(w));
  return acc;
}

}  // namespace eulerstrat
