#pragma once

// Independent reference computations for the tests. Nothing here reuses the
// library's recursions: matrices are inverted by rational Gauss-Jordan
// elimination, closures by graph search, and basis expansions by direct
// pointwise summation.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

#include "eulerstrat/ic.hpp"
#include "eulerstrat/pushforward.hpp"

namespace oracle {

using eulerstrat::Int;
using Rational = boost::multiprecision::cpp_rational;

/// Inverse of an n x n integer matrix (row-major) over the rationals; throws
/// if it is singular or the inverse is not integral.
inline std::vector<Int> gauss_inverse(const std::vector<Int>& a, std::size_t n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a[r * n + c];
    m[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::runtime_error("singular matrix");
    std::swap(m[pivot], m[col]);
    const Rational p = m[col][col];
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Int> out(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto& x = m[r][n + c];
      if (denominator(x) != 1) throw std::runtime_error("inverse is not integral");
      out[r * n + c] = static_cast<Int>(numerator(x));
    }
  return out;
}

/// Solves a x = b for square a (row-major) over the rationals.
inline std::vector<Int> gauss_solve(const std::vector<Int>& a, const std::vector<Int>& b) {
  const auto n = b.size();
  const auto inv = gauss_inverse(a, n);
  std::vector<Int> x(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < n; ++c) s += Rational(inv[r * n + c]) * b[c];
    x[r] = static_cast<Int>(numerator(s));
  }
  return x;
}

/// Reflexive-transitive closure of the pairs by depth-first search.
inline std::vector<std::vector<bool>> reachability(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      if (reach[s][v]) continue;
      reach[s][v] = true;
      for (const auto& [a, b] : edges)
        if (a == v) stack.push_back(b);
    }
  }
  return reach;
}

inline Int cone_euler(const std::vector<Int>& betti, Int codim) {
  Int s = 0;
  for (Int j = 0; j < codim && j < static_cast<Int>(betti.size()); ++j) s += (j % 2 == 0 ? 1 : -1) * betti[j];
  return s;
}

/// sum_V c(V) 1_{closure V}, evaluated stratum by stratum.
inline std::vector<Int> closed_sum(const eulerstrat::StratPoset& p, const std::vector<Int>& c) {
  std::vector<Int> out(p.size(), 0);
  for (std::size_t w = 0; w < p.size(); ++w)
    for (std::size_t v = 0; v < p.size(); ++v)
      if (p.leq(w, v)) out[w] += c[v];
  return out;
}

/// ic_{closure V}(W) straight from the link data.
inline Int ic_value(const eulerstrat::LinkSystem& links, std::size_t v, std::size_t w) {
  const auto& p = *links.space();
  if (w == v) return 1;
  if (p.less(w, v)) return links.cone(w, v);
  return 0;
}

/// sum_V c(V) ic_{closure V}, evaluated stratum by stratum.
inline std::vector<Int> ic_sum(const eulerstrat::LinkSystem& links, const std::vector<Int>& c) {
  const auto n = links.space()->size();
  std::vector<Int> out(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = 0; v < n; ++v) out[w] += c[v] * ic_value(links, v, w);
  return out;
}

/// The ic transition matrix built entry by entry (row W, column V).
inline std::vector<Int> ic_matrix(const eulerstrat::LinkSystem& links) {
  const auto n = links.space()->size();
  std::vector<Int> m(n * n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t v = 0; v < n; ++v) m[w * n + v] = ic_value(links, v, w);
  return m;
}

inline Int euler(const eulerstrat::StratPoset& p, const std::vector<Int>& values) {
  Int s = 0;
  for (std::size_t v = 0; v < p.size(); ++v) s += values[v] * p.chi_c(v);
  return s;
}

inline std::vector<Int> push(const eulerstrat::ProperMapKernel& k, const std::vector<Int>& alpha) {
  const auto nt = k.target()->size();
  const auto ns = k.source()->size();
  std::vector<Int> out(nt, 0);
  for (std::size_t v = 0; v < nt; ++v)
    for (std::size_t u = 0; u < ns; ++u) out[v] += k(v, u) * alpha[u];
  return out;
}

inline std::vector<Int> values(const eulerstrat::ConstrFn& f) { return {f.values().begin(), f.values().end()}; }

}  // namespace oracle
