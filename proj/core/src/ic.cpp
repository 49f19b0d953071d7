#include "eulerstrat/ic.hpp"

namespace eulerstrat {

Int cone_euler(std::span<const Int> link_betti, Int codim) {
  if (codim < 1) throw InvalidCodimError("codimension must be at least 1, got " + std::to_string(codim));
  if (link_betti.size() > static_cast<std::size_t>(2 * codim))
    throw InvalidLinkDataError("link of complex codimension " + std::to_string(codim) + " has at most " +
                               std::to_string(2 * codim) + " Betti numbers");
  Int acc = 0;
  for (std::size_t j = 0; j < link_betti.size(); ++j) {
    if (link_betti[j] < 0) throw InvalidLinkDataError("negative link Betti number");
    if (static_cast<Int>(j) >= codim) continue;
    acc = j % 2 == 0 ? checked_add(acc, link_betti[j]) : checked_sub(acc, link_betti[j]);
  }
  return acc;
}

// ---------------------------------------------------------------------------

LinkSystem::LinkSystem(PosetPtr space) : space_(std::move(space)), values_(space_->size() * space_->size()) {}

LinkSystem::LinkSystem(PosetPtr space, std::span<const LinkEntry> entries) : LinkSystem(std::move(space)) {
  const auto n = space_->size();
  for (const auto& e : entries) {
    auto w = space_->index_of(e.lower);
    auto v = space_->index_of(e.upper);
    const std::string pair = "(" + e.lower + ", " + e.upper + ")";
    if (!space_->less(w, v)) throw InvalidLinkDataError("link entry " + pair + " is not a strict order relation");
    if (values_[w * n + v]) throw InvalidLinkDataError("duplicate link entry " + pair);
    if (!e.ichi_cone && !e.link_ih_betti)
      throw InvalidLinkDataError("link entry " + pair + " has neither ichi_cone nor link_ih_betti");
    std::optional<Int> value = e.ichi_cone;
    if (e.link_ih_betti) {
      Int derived = cone_euler(*e.link_ih_betti, space_->complex_dim(v) - space_->complex_dim(w));
      if (value && *value != derived)
        throw InvalidLinkDataError("link entry " + pair + ": ichi_cone " + std::to_string(*value) +
                                   " disagrees with link Betti numbers (" + std::to_string(derived) + ")");
      value = derived;
    }
    values_[w * n + v] = value;
  }
}

bool LinkSystem::has(std::size_t lower, std::size_t upper) const {
  return lower == upper || !space_->leq(lower, upper) || values_[lower * space_->size() + upper].has_value();
}

Int LinkSystem::cone(std::size_t lower, std::size_t upper) const {
  if (lower == upper) return 1;
  if (!space_->leq(lower, upper)) return 0;
  const auto& v = values_[lower * space_->size() + upper];
  if (!v)
    throw MissingLinkDataError("missing link data for pair (" + space_->id(lower) + ", " + space_->id(upper) + ")");
  return *v;
}

bool LinkSystem::complete() const {
  const auto n = space_->size();
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = w + 1; v < n; ++v)
      if (!has(w, v)) return false;
  return true;
}

void LinkSystem::require_complete() const {
  const auto n = space_->size();
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = w + 1; v < n; ++v) (void)cone(w, v);
}

LinkSystem LinkSystem::with_value(std::size_t lower, std::size_t upper, Int value) const {
  if (!space_->less(lower, upper)) throw InvalidLinkDataError("link value on a pair that is not a strict relation");
  LinkSystem out = *this;
  out.values_[lower * space_->size() + upper] = value;
  return out;
}

LinkSystem LinkSystem::restrict_to(const PosetPtr& sub, std::span<const std::size_t> keep) const {
  LinkSystem out(sub);
  const auto n = space_->size();
  for (auto w : keep)
    for (auto v : keep) {
      if (!space_->less(w, v) || !values_[w * n + v]) continue;
      auto sw = sub->index_of(space_->id(w));
      auto sv = sub->index_of(space_->id(v));
      out.values_[sw * sub->size() + sv] = values_[w * n + v];
    }
  return out;
}

// ---------------------------------------------------------------------------

ConstrFn ic_function(const LinkSystem& links, std::size_t v) {
  const auto& space = links.space();
  if (v >= space->size()) throw UnknownStratumError("stratum index out of range");
  std::vector<Int> values(space->size(), 0);
  for (auto w : space->down_set(v)) values[w] = links.cone(w, v);
  return {space, std::move(values)};
}

ConstrFn ic_space(const LinkSystem& links) {
  const auto& space = *links.space();
  const auto n = space.size();
  const Int top_dim = space.complex_dim(n - 1);
  ConstrFn acc(links.space());
  for (std::size_t v = 0; v < n; ++v) {
    bool maximal = true;
    for (std::size_t u = v + 1; u < n && maximal; ++u) maximal = !space.less(v, u);
    if (!maximal) continue;
    if (space.complex_dim(v) != top_dim)
      throw InputError("space is not pure dimensional: maximal stratum '" + space.id(v) + "' has dimension " +
                       std::to_string(space.complex_dim(v)) + " < " + std::to_string(top_dim));
    acc = acc + ic_function(links, v);
  }
  return acc;
}

TriangularMatrix ic_transition_matrix(const LinkSystem& links) {
  const auto& space = links.space();
  const auto n = space->size();
  std::vector<Int> entries(n * n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (auto w : space->down_set(v)) entries[w * n + v] = links.cone(w, v);
  return {space, std::move(entries)};
}

BasisCoefficients hat_ic(const LinkSystem& links, std::size_t v) {
  const auto& space = links.space();
  if (v >= space->size()) throw UnknownStratumError("stratum index out of range");
  const auto n = space->size();
  const auto below = space->down_set(v);
  std::vector<std::vector<Int>> hat(n);
  for (auto u : below) {
    std::vector<Int> h(n, 0);
    h[u] = 1;
    for (auto w : below) {
      if (!space->less(w, u)) continue;
      Int t = links.cone(w, u);
      if (t == 0) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (hat[w][k]) h[k] = checked_sub(h[k], checked_mul(hat[w][k], t));
    }
    hat[u] = std::move(h);
  }
  return {Basis::ic, space, std::move(hat[v])};
}

TriangularMatrix hat_ic_table(const LinkSystem& links) {
  const auto& space = links.space();
  const auto n = space->size();
  std::vector<Int> table(n * n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    table[u * n + u] = 1;
    for (std::size_t w = 0; w < u; ++w) {
      if (!space->less(w, u)) continue;
      Int t = links.cone(w, u);
      if (t == 0) continue;
      for (std::size_t k = 0; k <= w; ++k)
        if (Int h = table[k * n + w]) table[k * n + u] = checked_sub(table[k * n + u], checked_mul(h, t));
    }
  }
  return {space, std::move(table)};
}

BasisCoefficients decompose_ic(const LinkSystem& links, const ConstrFn& alpha) {
  if (!same_space(links.space(), alpha.space())) throw SpaceMismatchError("function and link system differ in space");
  const auto& space = *alpha.space();
  const auto top = space.require_dense();
  std::vector<Int> c(space.size());
  for (std::size_t v = 0; v < c.size(); ++v)
    c[v] = v == top ? alpha[top] : checked_sub(alpha[v], checked_mul(alpha[top], links.cone(v, top)));
  return {Basis::dense_ic_hat, alpha.space(), std::move(c)};
}

BasisCoefficients decompose_ic_basis(const LinkSystem& links, const ConstrFn& alpha) {
  if (!same_space(links.space(), alpha.space())) throw SpaceMismatchError("function and link system differ in space");
  auto inverse = invert_unipotent(ic_transition_matrix(links));
  return {Basis::ic, alpha.space(), inverse.apply(alpha.values())};
}

ConstrFn recompose(const BasisCoefficients& c, const LinkSystem& links) {
  if (c.basis != Basis::ic && c.basis != Basis::dense_ic_hat) return recompose(c);
  if (!same_space(links.space(), c.space)) throw SpaceMismatchError("expansion and link system differ in space");
  const auto& space = c.space;
  const auto n = space->size();
  if (c.coefficients.size() != n) throw InputError("coefficient vector does not match the number of strata");
  std::vector<Int> ic_coords = c.coefficients;
  if (c.basis == Basis::dense_ic_hat) {
    const auto top = space->require_dense();
    auto table = hat_ic_table(links);
    ic_coords.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      Int coef = c.coefficients[v];
      if (coef == 0) continue;
      if (v == top) {
        ic_coords[v] = checked_add(ic_coords[v], coef);
        continue;
      }
      for (std::size_t w = 0; w <= v; ++w)
        if (Int h = table(w, v)) ic_coords[w] = checked_fma(ic_coords[w], coef, h);
    }
  }
  return {space, ic_transition_matrix(links).apply(ic_coords)};
}

// ---------------------------------------------------------------------------

Int k_stalk(const KClass& f, const LinkSystem& links, std::size_t w) {
  const auto& space = *links.space();
  if (w >= space.size()) throw UnknownStratumError("stratum index out of range");
  if (f.coefficients.size() != space.size()) throw SpaceMismatchError("class and link system differ in space");
  Int acc = f.coefficients[w];
  for (auto v : space.up_set(w))
    if (v != w && f.coefficients[v] != 0) acc = checked_fma(acc, links.cone(w, v), f.coefficients[v]);
  return acc;
}

ConstrFn k_stalks(const KClass& f, const LinkSystem& links) {
  std::vector<Int> out(links.space()->size());
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = k_stalk(f, links, w);
  return {links.space(), std::move(out)};
}

ConstrFn k_function(const KClass& f, const LinkSystem& links) {
  ConstrFn acc(links.space());
  for (std::size_t v = 0; v < f.coefficients.size(); ++v)
    if (f.coefficients[v] != 0) acc = acc + ic_function(links, v).scaled(f.coefficients[v]);
  return acc;
}

KClass k_decompose(const ConstrFn& stalks, const LinkSystem& links) {
  if (!same_space(links.space(), stalks.space())) throw SpaceMismatchError("stalk data and link system differ in space");
  const auto& space = links.space();
  const auto top = space->require_dense();
  const auto n = space->size();
  std::vector<Int> coef(n, 0);
  coef[top] = stalks[top];

  // The dense stratum is last in the canonical order, so the strata below it
  // keep their indices in the restricted poset.
  std::vector<std::size_t> keep;
  for (std::size_t w = 0; w < n; ++w)
    if (w != top) keep.push_back(w);
  if (keep.empty()) return {space, std::move(coef)};

  auto lower = space->restrict_to(keep);
  auto lower_links = links.restrict_to(lower, keep);
  std::vector<Int> rhs(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    rhs[i] = checked_sub(stalks[keep[i]], checked_mul(links.cone(keep[i], top), stalks[top]));
  auto solved = invert_unipotent(ic_transition_matrix(lower_links)).apply(rhs);
  for (std::size_t i = 0; i < keep.size(); ++i) coef[keep[i]] = solved[i];
  return {space, std::move(coef)};
}

KClass k_expand(const ConstrFn& stalks, const LinkSystem& links) {
  if (!same_space(links.space(), stalks.space())) throw SpaceMismatchError("stalk data and link system differ in space");
  const auto& space = links.space();
  const auto top = space->require_dense();
  const auto n = space->size();
  std::vector<Int> coef(n, 0);
  coef[top] = stalks[top];
  for (std::size_t v = 0; v < n; ++v) {
    if (v == top) continue;
    Int weight = checked_sub(stalks[v], checked_mul(stalks[top], links.cone(v, top)));
    if (weight == 0) continue;
    auto hat = hat_ic(links, v);
    for (std::size_t w = 0; w < n; ++w)
      if (hat.coefficients[w]) coef[w] = checked_fma(coef[w], hat.coefficients[w], weight);
  }
  return {space, std::move(coef)};
}

}  // namespace eulerstrat
