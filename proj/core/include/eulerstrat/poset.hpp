#pragma once

// Finite stratification posets and unipotent triangular matrices over them.
//
// Strata are stored in a canonical linear extension: sorted by
// (complex_dim, id). Because V < W forces dim V < dim W, every stratum comes
// after all of its lower strata, so a matrix supported on {(W, V) : W <= V}
// is upper triangular in this order. All public indices refer to it.
//
// Strata are assumed connected. Nothing in the combinatorial data can check
// that; it is the caller's obligation.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerstrat/checked.hpp"

namespace eulerstrat {

struct StratumSpec {
  std::string id;
  Int complex_dim = 0;
  Int chi_c = 0;

  friend bool operator==(const StratumSpec&, const StratumSpec&) = default;
};

/// (lower, upper): lower lies in the closure of upper.
struct OrderPair {
  std::string lower;
  std::string upper;

  friend bool operator==(const OrderPair&, const OrderPair&) = default;
};

class StratPoset;
using PosetPtr = std::shared_ptr<const StratPoset>;

class StratPoset {
 public:
  std::size_t size() const { return strata_.size(); }

  const std::string& id(std::size_t i) const { return strata_[i].id; }
  Int complex_dim(std::size_t i) const { return strata_[i].complex_dim; }
  Int chi_c(std::size_t i) const { return strata_[i].chi_c; }
  const StratumSpec& stratum(std::size_t i) const { return strata_[i]; }

  /// Throws UnknownStratumError.
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;

  bool leq(std::size_t lower, std::size_t upper) const { return leq_[lower * size() + upper] != 0; }
  bool less(std::size_t lower, std::size_t upper) const { return lower != upper && leq(lower, upper); }

  std::optional<std::size_t> dense() const { return dense_; }
  /// Throws NoDenseStratumError.
  std::size_t require_dense() const;

  /// { W : W <= v } in canonical order, v last.
  std::vector<std::size_t> down_set(std::size_t v) const;
  /// { V : w <= V } in canonical order, w first.
  std::vector<std::size_t> up_set(std::size_t w) const;

  /// All strict relations (lower, upper), in canonical order of (upper, lower).
  std::vector<OrderPair> relations() const;

  /// Induced sub-poset on `keep` (indices into this poset). The dense stratum
  /// is re-detected on the result.
  PosetPtr restrict_to(std::span<const std::size_t> keep) const;

  friend bool operator==(const StratPoset& a, const StratPoset& b) {
    return a.strata_ == b.strata_ && a.leq_ == b.leq_ && a.dense_ == b.dense_;
  }

 private:
  friend PosetPtr build_poset(std::span<const StratumSpec>, std::span<const OrderPair>,
                              std::optional<std::string_view>);

  std::vector<StratumSpec> strata_;
  std::vector<char> leq_;  // row-major size() x size()
  std::optional<std::size_t> dense_;
};

/// Builds the reflexive-transitive closure of `order_pairs` and validates it.
///
/// Throws DuplicateStratumError, UnknownStratumError, CycleError (antisymmetry
/// fails), DimOrderError (V < W without dim V < dim W, or a negative
/// dimension) and InvalidDenseError (supplied dense is not the unique maximum).
/// If `dense` is not supplied it is detected when a unique maximum exists.
PosetPtr build_poset(std::span<const StratumSpec> strata, std::span<const OrderPair> order_pairs,
                     std::optional<std::string_view> dense = std::nullopt);

/// Same-space test: pointer identity or structural equality.
bool same_space(const PosetPtr& a, const PosetPtr& b);

/// Square integer matrix indexed by the strata of a poset, unipotent and
/// supported on the order: a(W, V) != 0 only if W <= V, a(V, V) == 1.
class TriangularMatrix {
 public:
  /// Identity.
  explicit TriangularMatrix(PosetPtr space);
  /// Row-major entries; validated against the invariants (InputError).
  TriangularMatrix(PosetPtr space, std::vector<Int> entries);

  const PosetPtr& space() const { return space_; }
  std::size_t size() const { return space_->size(); }
  Int operator()(std::size_t row, std::size_t col) const { return entries_[row * size() + col]; }
  std::span<const Int> entries() const { return entries_; }

  std::vector<Int> column(std::size_t col) const;
  std::vector<Int> row(std::size_t r) const;

  /// Matrix-vector product (checked).
  std::vector<Int> apply(std::span<const Int> x) const;

  friend TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b);
  friend bool operator==(const TriangularMatrix& a, const TriangularMatrix& b) {
    return same_space(a.space_, b.space_) && a.entries_ == b.entries_;
  }

 private:
  struct Unchecked {};
  TriangularMatrix(PosetPtr space, std::vector<Int> entries, Unchecked)
      : space_(std::move(space)), entries_(std::move(entries)) {}
  friend TriangularMatrix invert_unipotent(const TriangularMatrix&);
  friend TriangularMatrix closure_matrix(const PosetPtr&);

  PosetPtr space_;
  std::vector<Int> entries_;
};

/// Exact inverse by the order recursion
///   a'(V, V) = 1,  a'(W, V) = -sum_{W <= S < V} a'(W, S) a(S, V).
/// Throws OverflowError.
TriangularMatrix invert_unipotent(const TriangularMatrix& a);

/// Transition matrix from closed indicators to open indicators:
/// a(W, V) = 1 iff W <= V, so that 1_{closure V} = sum_W a(W, V) 1_W.
TriangularMatrix closure_matrix(const PosetPtr& space);

}  // namespace eulerstrat
