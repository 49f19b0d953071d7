#include "doctest.h"
#include "eulerstrat/random.hpp"
#include "oracles.hpp"

using namespace eulerstrat;

namespace {

PosetPtr singleton(Int chi = 1) { return build_poset(std::vector<StratumSpec>{{"S", 1, chi}}, std::vector<OrderPair>{}); }
PosetPtr chain2() { return build_poset(std::vector<StratumSpec>{{"W", 0, 1}, {"S", 1, 0}}, std::vector<OrderPair>{{"W", "S"}}); }
PosetPtr diamond() {
  return build_poset(std::vector<StratumSpec>{{"W", 0, 1}, {"A", 1, 2}, {"B", 1, -1}, {"S", 2, 3}},
                     std::vector<OrderPair>{{"W", "A"}, {"W", "B"}, {"A", "S"}, {"B", "S"}});
}

std::vector<Int> v(const ConstrFn& f) { return oracle::values(f); }

}  // namespace

TEST_CASE("indicator") {
  CHECK(v(indicator(singleton(), 0)) == std::vector<Int>{1});
  auto c = chain2();
  CHECK(v(indicator(c, c->index_of("W"))) == std::vector<Int>{1, 0});
  auto d = diamond();
  CHECK(v(indicator(d, d->index_of("A"))) == std::vector<Int>{0, 1, 0, 0});
}

TEST_CASE("closed_indicator") {
  CHECK(v(closed_indicator(singleton(), 0)) == std::vector<Int>{1});
  auto c = chain2();
  CHECK(v(closed_indicator(c, c->index_of("S"))) == std::vector<Int>{1, 1});
  auto d = diamond();
  CHECK(v(closed_indicator(d, d->index_of("A"))) == std::vector<Int>{1, 1, 0, 0});
}

TEST_CASE("ConstrFn arithmetic and space checks") {
  auto c = chain2();
  ConstrFn a(c, {2, 3});
  ConstrFn b(c, {-1, 4});
  CHECK(v(a + b) == std::vector<Int>{1, 7});
  CHECK(v(a - b) == std::vector<Int>{3, -1});
  CHECK(v(a * b) == std::vector<Int>{-2, 12});
  CHECK(v(a.scaled(-2)) == std::vector<Int>{-4, -6});
  CHECK(a.at("S") == 3);
  CHECK_THROWS_AS(a.at("Q"), UnknownStratumError);
  CHECK_THROWS_AS(ConstrFn(c, {1}), InputError);
  auto other = build_poset(std::vector<StratumSpec>{{"W", 0, 1}, {"S", 1, 5}}, std::vector<OrderPair>{{"W", "S"}});
  CHECK_THROWS_AS(a + ConstrFn(other, {1, 1}), SpaceMismatchError);
  // A structurally equal space built separately is the same space.
  CHECK(a + ConstrFn(chain2(), {0, 0}) == a);
}

TEST_CASE("decompose_hat reads off values") {
  auto s = singleton();
  CHECK(decompose_hat(constant(s, 1)).coefficients == std::vector<Int>{1});
  auto c = chain2();
  auto d = decompose_hat(ConstrFn(c, {5, -7}));
  CHECK(d.basis == Basis::hat);
  CHECK(d.coefficients == std::vector<Int>{5, -7});
}

TEST_CASE("decompose_hat_dense") {
  auto d = diamond();
  auto c = decompose_hat_dense(constant(d, 4));
  CHECK(c.basis == Basis::dense_hat);
  CHECK(c.coefficients == std::vector<Int>{0, 0, 0, 4});
  auto ch = chain2();
  auto e = decompose_hat_dense(ConstrFn(ch, {5, -7}));
  CHECK(e.coefficients == std::vector<Int>{12, -7});  // b 1_Y + (a - b) hat(W)
  auto flat = build_poset(std::vector<StratumSpec>{{"A", 1, 1}, {"B", 1, 1}}, std::vector<OrderPair>{});
  CHECK_THROWS_AS(decompose_hat_dense(constant(flat, 1)), NoDenseStratumError);
}

TEST_CASE("hat_closed on a diamond") {
  auto d = diamond();
  // hat(S) = 1_{closure S} - 1_{closure A} - 1_{closure B} + 1_{closure W}
  auto h = hat_closed(d, d->index_of("S"));
  CHECK(h.basis == Basis::closed_indicator);
  CHECK(h.coefficients == std::vector<Int>{1, -1, -1, 1});
}

TEST_CASE("euler") {
  CHECK(euler(constant(singleton(3), 1)) == 3);
  auto nodal = build_poset(std::vector<StratumSpec>{{"node", 0, 1}, {"smooth", 1, 0}},
                           std::vector<OrderPair>{{"node", "smooth"}});
  CHECK(euler(constant(nodal, 1)) == 1);
  auto d = diamond();
  for (std::size_t i = 0; i < d->size(); ++i) CHECK(euler(indicator(d, i)) == d->chi_c(i));
  CHECK(closure_euler(*d, d->index_of("A")) == 3);
}

TEST_CASE("property: hat functions are open indicators and match the inverse closure matrix") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poset(rng, {12, coin(rng, 50), coin(rng, 50), 4});
    const auto a = closure_matrix(p);
    const std::vector<Int> entries(a.entries().begin(), a.entries().end());
    const auto inv = oracle::gauss_inverse(entries, p->size());
    for (std::size_t u = 0; u < p->size(); ++u) {
      auto h = hat_closed(p, u);
      REQUIRE(oracle::closed_sum(*p, h.coefficients) == v(indicator(p, u)));
      for (std::size_t w = 0; w < p->size(); ++w) CHECK(h.coefficients[w] == inv[w * p->size() + u]);
    }
  }
}

TEST_CASE("property: round trips, linearity and euler additivity") {
  Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    auto p = random_poset(rng, {10, true, true, 4});
    auto a = random_function(rng, p);
    auto b = random_function(rng, p);
    CHECK(recompose(decompose_hat(a)) == a);
    CHECK(recompose(decompose_hat_dense(a)) == a);
    CHECK(recompose(decompose_closed(a)) == a);
    CHECK(oracle::closed_sum(*p, decompose_closed(a).coefficients) == v(a));
    // Pointwise check of the dense form.
    const auto dense = decompose_hat_dense(a);
    const auto top = p->require_dense();
    for (std::size_t w = 0; w < p->size(); ++w) {
      Int value = dense.coefficients[top];
      if (w != top) value += dense.coefficients[w];
      CHECK(value == a[w]);
    }
    auto sum = decompose_hat(a + b).coefficients;
    auto da = decompose_hat(a).coefficients;
    auto db = decompose_hat(b).coefficients;
    for (std::size_t i = 0; i < sum.size(); ++i) CHECK(sum[i] == da[i] + db[i]);
    CHECK(euler(a + b) == euler(a) + euler(b));
    CHECK(euler(a) == oracle::euler(*p, v(a)));
  }
}
