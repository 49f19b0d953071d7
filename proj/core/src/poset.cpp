#include "eulerstrat/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace eulerstrat {

std::optional<std::size_t> StratPoset::find(std::string_view id) const {
  for (std::size_t i = 0; i < strata_.size(); ++i)
    if (strata_[i].id == id) return i;
  return std::nullopt;
}

std::size_t StratPoset::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw UnknownStratumError("unknown stratum '" + std::string(id) + "'");
}

std::size_t StratPoset::require_dense() const {
  if (!dense_) throw NoDenseStratumError("space has no dense stratum (no unique maximum)");
  return *dense_;
}

std::vector<std::size_t> StratPoset::down_set(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w <= v; ++w)
    if (leq(w, v)) out.push_back(w);
  return out;
}

std::vector<std::size_t> StratPoset::up_set(std::size_t w) const {
  std::vector<std::size_t> out;
  for (std::size_t v = w; v < size(); ++v)
    if (leq(w, v)) out.push_back(v);
  return out;
}

std::vector<OrderPair> StratPoset::relations() const {
  std::vector<OrderPair> out;
  for (std::size_t v = 0; v < size(); ++v)
    for (std::size_t w = 0; w < v; ++w)
      if (leq(w, v)) out.push_back({id(w), id(v)});
  return out;
}

PosetPtr StratPoset::restrict_to(std::span<const std::size_t> keep) const {
  std::vector<StratumSpec> specs;
  specs.reserve(keep.size());
  for (auto i : keep) specs.push_back(strata_.at(i));
  std::vector<OrderPair> pairs;
  for (auto w : keep)
    for (auto v : keep)
      if (less(w, v)) pairs.push_back({id(w), id(v)});
  return build_poset(specs, pairs);
}

PosetPtr build_poset(std::span<const StratumSpec> strata, std::span<const OrderPair> order_pairs,
                     std::optional<std::string_view> dense) {
  auto poset = std::make_shared<StratPoset>();

  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& s : strata) {
    if (s.id.empty()) throw InputError("stratum id must be nonempty");
    if (s.complex_dim < 0) throw DimOrderError("stratum '" + s.id + "' has negative complex dimension");
    if (!seen.emplace(s.id, 0).second) throw DuplicateStratumError("duplicate stratum '" + s.id + "'");
  }
  if (strata.empty()) throw InputError("a stratified space needs at least one stratum");

  poset->strata_.assign(strata.begin(), strata.end());
  std::sort(poset->strata_.begin(), poset->strata_.end(), [](const auto& a, const auto& b) {
    return a.complex_dim != b.complex_dim ? a.complex_dim < b.complex_dim : a.id < b.id;
  });
  const std::size_t n = poset->strata_.size();
  for (std::size_t i = 0; i < n; ++i) seen[poset->strata_[i].id] = i;

  auto lookup = [&](const std::string& id) {
    auto it = seen.find(id);
    if (it == seen.end()) throw UnknownStratumError("order pair references unknown stratum '" + id + "'");
    return it->second;
  };

  std::vector<char>& rel = poset->leq_;
  rel.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& p : order_pairs) rel[lookup(p.lower) * n + lookup(p.upper)] = 1;

  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel[i * n + j] && rel[j * n + i])
        throw CycleError("order is not antisymmetric: '" + poset->strata_[i].id + "' and '" +
                         poset->strata_[j].id + "' lie in each other's closure");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rel[i * n + j] && poset->strata_[i].complex_dim >= poset->strata_[j].complex_dim)
        throw DimOrderError("'" + poset->strata_[i].id + "' < '" + poset->strata_[j].id +
                            "' but complex dimensions are " + std::to_string(poset->strata_[i].complex_dim) +
                            " and " + std::to_string(poset->strata_[j].complex_dim));

  auto is_maximum = [&](std::size_t top) {
    for (std::size_t i = 0; i < n; ++i)
      if (!rel[i * n + top]) return false;
    return true;
  };

  if (dense) {
    auto top = lookup(std::string(*dense));
    if (!is_maximum(top))
      throw InvalidDenseError("stratum '" + std::string(*dense) + "' is not the unique maximum");
    poset->dense_ = top;
  } else {
    // Any maximum is the last stratum of the linear extension.
    if (is_maximum(n - 1)) poset->dense_ = n - 1;
  }
  return poset;
}

bool same_space(const PosetPtr& a, const PosetPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------

TriangularMatrix::TriangularMatrix(PosetPtr space) : space_(std::move(space)) {
  const auto n = space_->size();
  entries_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) entries_[i * n + i] = 1;
}

TriangularMatrix::TriangularMatrix(PosetPtr space, std::vector<Int> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  const auto n = space_->size();
  if (entries_.size() != n * n) throw InputError("matrix size does not match the number of strata");
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = 0; v < n; ++v) {
      Int a = entries_[w * n + v];
      if (w == v && a != 1)
        throw InputError("matrix is not unipotent at stratum '" + space_->id(w) + "'");
      if (a != 0 && !space_->leq(w, v))
        throw InputError("matrix entry (" + space_->id(w) + ", " + space_->id(v) +
                         ") is nonzero off the order");
    }
}

std::vector<Int> TriangularMatrix::column(std::size_t col) const {
  std::vector<Int> out(size());
  for (std::size_t r = 0; r < size(); ++r) out[r] = (*this)(r, col);
  return out;
}

std::vector<Int> TriangularMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * size()),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * size())};
}

std::vector<Int> TriangularMatrix::apply(std::span<const Int> x) const {
  const auto n = size();
  if (x.size() != n) throw InputError("vector length does not match the number of strata");
  std::vector<Int> y(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (Int a = (*this)(r, c)) y[r] = checked_fma(y[r], a, x[c]);
  return y;
}

TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b) {
  if (!same_space(a.space_, b.space_)) throw SpaceMismatchError("matrices live on different spaces");
  const auto n = a.size();
  std::vector<Int> out(n * n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = r; k < n; ++k) {
      Int ark = a(r, k);
      if (ark == 0) continue;
      for (std::size_t c = k; c < n; ++c)
        if (Int bkc = b(k, c)) out[r * n + c] = checked_fma(out[r * n + c], ark, bkc);
    }
  return TriangularMatrix(a.space_, std::move(out), TriangularMatrix::Unchecked{});
}

TriangularMatrix invert_unipotent(const TriangularMatrix& a) {
  const auto& poset = *a.space();
  const auto n = a.size();
  std::vector<Int> inv(n * n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    inv[w * n + w] = 1;
    // Columns V > W in increasing canonical order; a'(W, S) for S < V is ready.
    for (std::size_t v = w + 1; v < n; ++v) {
      if (!poset.less(w, v)) continue;
      Int acc = 0;
      for (std::size_t s = w; s < v; ++s)
        if (poset.leq(w, s) && poset.less(s, v)) acc = checked_fma(acc, inv[w * n + s], a(s, v));
      inv[w * n + v] = checked_neg(acc);
    }
  }
  return TriangularMatrix(a.space(), std::move(inv), TriangularMatrix::Unchecked{});
}

TriangularMatrix closure_matrix(const PosetPtr& space) {
  const auto n = space->size();
  std::vector<Int> entries(n * n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = 0; v < n; ++v)
      if (space->leq(w, v)) entries[w * n + v] = 1;
  return TriangularMatrix(space, std::move(entries), TriangularMatrix::Unchecked{});
}

}  // namespace eulerstrat
