#pragma once

// Group homomorphisms on constructible functions, specified by their values on
// a basis (closed indicators, or ic functions), and the free formal target
// used to check Chern-MacPherson class identities universally.
//
// Every concrete c_* factors through the universal homomorphism that sends a
// basis element to its own symbol, so an identity that holds coefficientwise
// in FormalClass holds for every realization in Borel-Moore homology.

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "eulerstrat/ic.hpp"

namespace eulerstrat {

/// Symbols c*[V] standing for c_*(1_{closure V}).
struct ClosedFamily {
  static constexpr std::string_view prefix = "c*";
  static constexpr Basis basis = Basis::closed_indicator;
};

/// Symbols Ic*[V] standing for c_*(ic_{closure V}).
struct IcFamily {
  static constexpr std::string_view prefix = "Ic*";
  static constexpr Basis basis = Basis::ic;
};

/// Element of the free abelian group on one symbol per stratum closure. The
/// family is part of the type, so closed and ic symbols never mix.
template <class Family>
class FormalClass {
 public:
  explicit FormalClass(PosetPtr space) : space_(std::move(space)), coef_(space_->size(), 0) {}
  FormalClass(PosetPtr space, std::vector<Int> coef) : space_(std::move(space)), coef_(std::move(coef)) {
    if (coef_.size() != space_->size()) throw InputError("formal class size does not match the space");
  }

  static FormalClass symbol(PosetPtr space, std::size_t v) {
    FormalClass out(std::move(space));
    out.coef_.at(v) = 1;
    return out;
  }

  const PosetPtr& space() const { return space_; }
  std::span<const Int> coefficients() const { return coef_; }
  Int operator[](std::size_t v) const { return coef_[v]; }

  static std::string symbol_name(const StratPoset& space, std::size_t v) {
    return std::string(Family::prefix) + "[" + space.id(v) + "]";
  }

  FormalClass scaled(Int k) const {
    FormalClass out(space_);
    for (std::size_t i = 0; i < coef_.size(); ++i) out.coef_[i] = checked_mul(k, coef_[i]);
    return out;
  }

  friend FormalClass operator+(const FormalClass& a, const FormalClass& b) {
    if (!same_space(a.space_, b.space_)) throw SpaceMismatchError("formal classes on different spaces");
    FormalClass out(a.space_);
    for (std::size_t i = 0; i < a.coef_.size(); ++i) out.coef_[i] = checked_add(a.coef_[i], b.coef_[i]);
    return out;
  }
  friend FormalClass operator-(const FormalClass& a, const FormalClass& b) { return a + b.scaled(-1); }
  friend bool operator==(const FormalClass& a, const FormalClass& b) {
    return same_space(a.space_, b.space_) && a.coef_ == b.coef_;
  }

 private:
  PosetPtr space_;
  std::vector<Int> coef_;
};

using ChernClass = FormalClass<ClosedFamily>;
using IcChernClass = FormalClass<IcFamily>;

/// Abelian-group operations for homomorphism targets.
template <class G>
struct GroupOps;

template <>
struct GroupOps<Int> {
  static Int zero(const PosetPtr&) { return 0; }
  static Int add(Int a, Int b) { return checked_add(a, b); }
  static Int scale(Int k, Int a) { return checked_mul(k, a); }
};

template <class Family>
struct GroupOps<FormalClass<Family>> {
  static FormalClass<Family> zero(const PosetPtr& space) { return FormalClass<Family>(space); }
  static FormalClass<Family> add(const FormalClass<Family>& a, const FormalClass<Family>& b) { return a + b; }
  static FormalClass<Family> scale(Int k, const FormalClass<Family>& a) { return a.scaled(k); }
};

/// phi given by its values on a basis: phi(1_{closure V}) when `basis` is
/// closed_indicator, phi(ic_{closure V}) when it is ic.
template <class G>
struct HomSpec {
  PosetPtr space;
  Basis basis = Basis::closed_indicator;
  std::vector<G> values;

  G zero() const { return GroupOps<G>::zero(space); }
};

namespace detail {

template <class G>
G combine(const HomSpec<G>& phi, std::span<const Int> coefficients) {
  G acc = phi.zero();
  for (std::size_t v = 0; v < coefficients.size(); ++v)
    if (coefficients[v] != 0) acc = GroupOps<G>::add(acc, GroupOps<G>::scale(coefficients[v], phi.values[v]));
  return acc;
}

template <class G>
void check_spec(const HomSpec<G>& phi, Basis expected) {
  if (phi.basis != expected)
    throw InputError("homomorphism is specified on the '" + std::string(to_string(phi.basis)) +
                     "' basis, expected '" + std::string(to_string(expected)) + "'");
  if (phi.values.size() != phi.space->size()) throw InputError("homomorphism needs one value per stratum");
}

}  // namespace detail

/// phi(alpha) for a closed-basis spec: expand alpha over closed indicators and
/// apply phi linearly.
template <class G>
G evaluate(const HomSpec<G>& phi, const ConstrFn& alpha) {
  detail::check_spec(phi, Basis::closed_indicator);
  if (!same_space(phi.space, alpha.space())) throw SpaceMismatchError("function and homomorphism differ in space");
  return detail::combine(phi, decompose_closed(alpha).coefficients);
}

/// phi(alpha) for an ic-basis spec.
template <class G>
G evaluate(const HomSpec<G>& phi, const ConstrFn& alpha, const LinkSystem& links) {
  detail::check_spec(phi, Basis::ic);
  if (!same_space(phi.space, alpha.space())) throw SpaceMismatchError("function and homomorphism differ in space");
  return detail::combine(phi, decompose_ic_basis(links, alpha).coefficients);
}

/// phi-hat(closure V) = phi(1_{closure V}) - sum_{W < V} phi-hat(closure W).
template <class G>
G hat_value(const HomSpec<G>& phi, std::size_t v) {
  detail::check_spec(phi, Basis::closed_indicator);
  const auto& space = *phi.space;
  if (v >= space.size()) throw UnknownStratumError("stratum index out of range");
  const auto below = space.down_set(v);
  std::vector<G> hat(space.size(), phi.zero());
  for (auto u : below) {
    G h = phi.values[u];
    for (auto w : below)
      if (space.less(w, u)) h = GroupOps<G>::add(h, GroupOps<G>::scale(-1, hat[w]));
    hat[u] = std::move(h);
  }
  return hat[v];
}

/// I-phi-hat(closure V) = phi(ic_{closure V}) - sum_{W < V} I-phi-hat(closure W) cone(W, V).
template <class G>
G ichat_value(const LinkSystem& links, const HomSpec<G>& phi, std::size_t v) {
  detail::check_spec(phi, Basis::ic);
  if (!same_space(phi.space, links.space())) throw SpaceMismatchError("link system and homomorphism differ in space");
  const auto& space = *phi.space;
  if (v >= space.size()) throw UnknownStratumError("stratum index out of range");
  const auto below = space.down_set(v);
  std::vector<G> hat(space.size(), phi.zero());
  for (auto u : below) {
    G h = phi.values[u];
    for (auto w : below)
      if (space.less(w, u)) h = GroupOps<G>::add(h, GroupOps<G>::scale(checked_neg(links.cone(w, u)), hat[w]));
    hat[u] = std::move(h);
  }
  return hat[v];
}

/// chi on the closed basis: phi(1_{closure V}) = chi(closure V).
HomSpec<Int> chi_hom(const PosetPtr& space);

/// I-chi on the ic basis: phi(ic_{closure V}) = chi(ic_{closure V}) = I-chi(closure V).
HomSpec<Int> ichi_hom(const LinkSystem& links);

/// Universal homomorphism into the closed-symbol family.
HomSpec<ChernClass> universal_closed_hom(const PosetPtr& space);

/// Universal homomorphism into the ic-symbol family.
HomSpec<IcChernClass> universal_ic_hom(const PosetPtr& space);

}  // namespace eulerstrat
