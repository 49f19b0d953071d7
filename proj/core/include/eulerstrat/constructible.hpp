#pragma once

// Constructible functions on a fixed stratification and their expansions in
// the open-indicator, closed-indicator and hat bases.

#include <span>
#include <string_view>
#include <vector>

#include "eulerstrat/poset.hpp"

namespace eulerstrat {

/// Integer-valued function constant on each stratum. Always total: one value
/// per stratum in canonical order.
class ConstrFn {
 public:
  /// The zero function.
  explicit ConstrFn(PosetPtr space);
  ConstrFn(PosetPtr space, std::vector<Int> values);

  const PosetPtr& space() const { return space_; }
  std::size_t size() const { return values_.size(); }
  std::span<const Int> values() const { return values_; }
  Int operator[](std::size_t stratum) const { return values_[stratum]; }
  Int at(std::string_view id) const { return values_[space_->index_of(id)]; }

  ConstrFn scaled(Int k) const;

  friend ConstrFn operator+(const ConstrFn& a, const ConstrFn& b);
  friend ConstrFn operator-(const ConstrFn& a, const ConstrFn& b);
  /// Pointwise product.
  friend ConstrFn operator*(const ConstrFn& a, const ConstrFn& b);
  friend bool operator==(const ConstrFn& a, const ConstrFn& b) {
    return same_space(a.space_, b.space_) && a.values_ == b.values_;
  }

 private:
  PosetPtr space_;
  std::vector<Int> values_;
};

/// 1_V.
ConstrFn indicator(const PosetPtr& space, std::size_t v);
/// 1_{closure V} = sum_{W <= V} 1_W.
ConstrFn closed_indicator(const PosetPtr& space, std::size_t v);
ConstrFn constant(const PosetPtr& space, Int c);

enum class Basis {
  open_indicator,    // {1_V}
  closed_indicator,  // {1_{closure V}}
  hat,               // {hat 1_{closure V}}
  dense_hat,         // 1_Y in the dense slot, hat 1_{closure V} for V < S
  ic,                // {ic_{closure V}}
  dense_ic_hat,      // ic_Y in the dense slot, hat ic(closure V) for V < S
};

std::string_view to_string(Basis b);

struct BasisCoefficients {
  Basis basis;
  PosetPtr space;
  std::vector<Int> coefficients;  // per stratum, canonical order

  friend bool operator==(const BasisCoefficients& a, const BasisCoefficients& b) {
    return a.basis == b.basis && same_space(a.space, b.space) && a.coefficients == b.coefficients;
  }
};

/// Expansion of hat 1_{closure V} over {1_{closure W}}, from the recursion
///   hat 1_{closure V} = 1_{closure V} - sum_{W < V} hat 1_{closure W}.
BasisCoefficients hat_closed(const PosetPtr& space, std::size_t v);

/// Every hat_closed expansion at once; column V holds hat_closed(V).
TriangularMatrix hat_closed_table(const PosetPtr& space);

/// alpha = sum_V alpha(V) hat 1_{closure V}.
BasisCoefficients decompose_hat(const ConstrFn& alpha);

/// alpha = alpha(S) 1_Y + sum_{V < S} (alpha(V) - alpha(S)) hat 1_{closure V}.
/// Throws NoDenseStratumError.
BasisCoefficients decompose_hat_dense(const ConstrFn& alpha);

/// Expansion over {1_{closure W}}: Moebius inversion of the closure order.
BasisCoefficients decompose_closed(const ConstrFn& alpha);

/// Recomposes open, closed, hat and dense_hat expansions. The ic bases need a
/// link system; see ic.hpp.
ConstrFn recompose(const BasisCoefficients& c);

/// Euler characteristic: sum_V alpha(V) chi_c(V). Equal to chi for complex
/// varieties.
Int euler(const ConstrFn& alpha);

/// chi(closure V) = sum_{W <= V} chi_c(W).
Int closure_euler(const StratPoset& space, std::size_t v);

}  // namespace eulerstrat
