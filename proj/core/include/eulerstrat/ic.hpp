#pragma once

// Link systems, intersection-cohomology constructible functions ic_{closure V},
// the ic basis with its hat transform, and Grothendieck-group coefficient
// vectors of classes in the submodule generated by the normalized IC
// complexes.
//
// Cone truncation: for W < V of complex codimension c = dim V - dim W, the
// stalk Euler characteristic at W of the IC complex of closure V (normalized
// so that its hypercohomology is intersection cohomology) is
//   I-chi(open cone on L_{W,V}) = sum_{j < c} (-1)^j b_j,
// where b_j are the intersection Betti numbers of the real (2c-1)-dimensional
// link. This is the middle-perversity cone formula.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eulerstrat/constructible.hpp"

namespace eulerstrat {

/// Truncated alternating sum of link intersection Betti numbers.
/// Throws InvalidCodimError for codim < 1, InvalidLinkDataError for negative
/// Betti numbers or more than 2 * codim of them.
Int cone_euler(std::span<const Int> link_betti, Int codim);

/// One link record for the pair lower < upper. At least one encoding must be
/// present; if both are, they must agree.
struct LinkEntry {
  std::string lower;
  std::string upper;
  std::optional<Int> ichi_cone;
  std::optional<std::vector<Int>> link_ih_betti;

  friend bool operator==(const LinkEntry&, const LinkEntry&) = default;
};

/// I-chi(open cone on L_{W,V}) for pairs W < V. The diagonal value is 1 and
/// pairs that are not comparable have value 0. A system may be partial;
/// operations that touch a missing pair throw MissingLinkDataError.
class LinkSystem {
 public:
  /// Empty system (complete only when the order has no strict relations).
  explicit LinkSystem(PosetPtr space);
  /// Throws UnknownStratumError, InvalidLinkDataError, InvalidCodimError.
  LinkSystem(PosetPtr space, std::span<const LinkEntry> entries);

  const PosetPtr& space() const { return space_; }

  bool has(std::size_t lower, std::size_t upper) const;
  /// I-chi(open cone on L_{lower,upper}); 1 on the diagonal, 0 off the order.
  Int cone(std::size_t lower, std::size_t upper) const;

  bool complete() const;
  /// Throws MissingLinkDataError naming the first missing pair.
  void require_complete() const;

  /// Same data with value `value` on the comparable pair (lower, upper).
  LinkSystem with_value(std::size_t lower, std::size_t upper, Int value) const;

  /// Induced system on a sub-poset built by StratPoset::restrict_to(keep).
  LinkSystem restrict_to(const PosetPtr& sub, std::span<const std::size_t> keep) const;

 private:
  PosetPtr space_;
  std::vector<std::optional<Int>> values_;  // row-major (lower, upper)
};

/// ic_{closure V}: 1 on V, cone(W, V) on W < V, 0 off the closure.
ConstrFn ic_function(const LinkSystem& links, std::size_t v);

/// ic_X of a pure-dimensional space: the sum of ic_{closure V} over its
/// maximal strata, which must all have the top dimension (InputError otherwise).
ConstrFn ic_space(const LinkSystem& links);

/// Transition matrix from ic to open indicators: a(W, V) = cone(W, V).
TriangularMatrix ic_transition_matrix(const LinkSystem& links);

/// Expansion of hat-ic(closure V) over {ic_{closure W}} by
///   hat-ic(closure V) = ic_{closure V} - sum_{W < V} hat-ic(closure W) cone(W, V).
BasisCoefficients hat_ic(const LinkSystem& links, std::size_t v);

/// Every hat_ic expansion at once; column V holds hat_ic(V).
TriangularMatrix hat_ic_table(const LinkSystem& links);

/// alpha = alpha(S) ic_Y + sum_{V < S} (alpha(V) - alpha(S) cone(V, S)) hat-ic(closure V).
/// Throws NoDenseStratumError, MissingLinkDataError.
BasisCoefficients decompose_ic(const LinkSystem& links, const ConstrFn& alpha);

/// Plain expansion over {ic_{closure V}}.
BasisCoefficients decompose_ic_basis(const LinkSystem& links, const ConstrFn& alpha);

/// Recomposes an expansion in any basis.
ConstrFn recompose(const BasisCoefficients& c, const LinkSystem& links);

/// A class sum_V [IC'_{closure V}] L(V) in the submodule generated by the
/// normalized IC complexes, with K_0(pt) identified with the integers via
/// Euler characteristic.
struct KClass {
  PosetPtr space;
  std::vector<Int> coefficients;

  friend bool operator==(const KClass& a, const KClass& b) {
    return same_space(a.space, b.space) && a.coefficients == b.coefficients;
  }
};

/// Stalk class at a point of W: L(W) + sum_{V > W} cone(W, V) L(V).
Int k_stalk(const KClass& f, const LinkSystem& links, std::size_t w);

/// Stalks at every stratum.
ConstrFn k_stalks(const KClass& f, const LinkSystem& links);

/// The constructible function sum_V L(V) ic_{closure V} of a class.
ConstrFn k_function(const KClass& f, const LinkSystem& links);

/// Recovers the class from its stalks: L(S) is the dense stalk, and the
/// remaining coefficients solve the unipotent system on the strata below S
/// with right-hand side stalk(W) - cone(W, S) stalk(S).
/// Throws NoDenseStratumError.
KClass k_decompose(const ConstrFn& stalks, const LinkSystem& links);

/// The same class assembled directly as
///   [IC'_Y] stalk(S) + sum_{V < S} hat-IC(closure V) (stalk(V) - stalk(S) cone(V, S)).
KClass k_expand(const ConstrFn& stalks, const LinkSystem& links);

}  // namespace eulerstrat
