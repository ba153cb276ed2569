#include <doctest.h>

#include <algorithm>
#include <random>

#include "obembed/error.hpp"
#include "obembed/planar_mcg.hpp"
#include "oracles.hpp"

using namespace obembed;

namespace {

std::vector<int> parities(const std::vector<std::int64_t>& e) {
  std::vector<int> out;
  for (auto x : e) out.push_back(static_cast<int>(((x % 2) + 2) % 2));
  return out;
}

}  // namespace

TEST_CASE("page and curve validation") {
  CHECK(PlanarPage(3).notation() == "Σ_{0,4}");
  CHECK_THROWS_AS(PlanarPage(-1), InvalidInput);
  CHECK_THROWS_AS(CurveClass(std::vector<int>{}), InvalidWord);
  CHECK_THROWS_AS(CurveClass({0, 1}), InvalidWord);
  CHECK(CurveClass({2, 1, 2}).to_string() == "{1,2}");
  CHECK_THROWS_AS(TwistWord(PlanarPage(2), {twist({3})}), InvalidWord);
  CHECK_THROWS_AS(TwistWord(PlanarPage(2), {push(3, {1})}), InvalidWord);
  CHECK_THROWS_AS(TwistWord(PlanarPage(2), {push(1, {1, 2})}), InvalidWord);
}

TEST_CASE("exponent vector of the L(pq-1,q) word for p=3, q=2") {
  // τ_a^3 τ_b^3 τ_c^2, a={1}, b={1,2}, c={2}
  TwistWord w(PlanarPage(2), {twist({1}, 3), twist({1, 2}, 3), twist({2}, 2)});
  CHECK(exponent_vector(w).entries == std::vector<std::int64_t>{6, 5});
  CHECK(exponent_vector(w).entries == oracle::exponent_sums(w));
}

TEST_CASE("empty word and commutators vanish") {
  CHECK(exponent_vector(TwistWord(PlanarPage(4))).entries == std::vector<std::int64_t>(4, 0));
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + trial % 6;
    auto a = oracle::random_curve(rng, n);
    auto b = oracle::random_curve(rng, n);
    TwistWord w(PlanarPage(n), {twist(a, -1), twist(b, -1), twist(a), twist(b)});
    CHECK(exponent_vector(w).entries == std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  }
}

TEST_CASE("parity of the 3-holed Poincaré sphere word") {
  // α, β enter only as a commutator; any classes do.
  for (auto alpha : {CurveClass{1, 2}, CurveClass{2, 3}, CurveClass{1}}) {
    for (auto beta : {CurveClass{2, 3}, CurveClass{1, 3}, CurveClass{1, 2, 3}}) {
      TwistWord w(PlanarPage(3), {twist(alpha, -1), twist(beta, -1), twist(alpha), twist(beta),
                                  twist({1}, -1), twist({2}), twist({3}, -1)});
      CHECK(parity_vector(w).to_string() == "(1,1,1)");
    }
  }
}

TEST_CASE("parity of the pushed word before substitution") {
  // τ_c^{2k+2} τ_a τ_b^{-1}, a={1}, b={1,2}, c={2}: sums are (0, 2k+1).
  for (int k = 0; k <= 10; ++k) {
    TwistWord w(PlanarPage(2), {twist({2}, 2 * k + 2), twist({1}), twist({1, 2}, -1)});
    auto want = oracle::exponent_sums(w);
    CHECK(want == std::vector<std::int64_t>{0, 2 * k + 1});
    CHECK(exponent_vector(w).entries == want);
    CHECK(parity_vector(w).to_ints() == std::vector<int>{0, 1});
  }
}

TEST_CASE("all even exponents give zero parity") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    auto w = oracle::random_twist_word(rng, 1 + trial % 7, 10, 5);
    std::vector<Letter> doubled;
    for (auto l : w.letters()) {
      l.exponent *= 2;
      doubled.push_back(l);
    }
    CHECK(parity_vector(TwistWord(w.page(), doubled)).is_zero());
  }
}

TEST_CASE("push expansion") {
  TwistWord w(PlanarPage(4), {push(4, {1, 2})});
  CHECK(exponent_vector(w).entries == std::vector<std::int64_t>{0, 0, 0, -1});
  CHECK(parity_vector(w) == Z2Vector::indicator(4, std::vector<int>{4}));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 6;
    auto around = oracle::random_curve(rng, n);
    int b = 0;
    for (int i = n; i >= 1; --i)
      if (!around.contains(i)) b = i;
    if (b == 0) continue;
    TwistWord p(PlanarPage(n), {push(b, around, 3)});
    CHECK(exponent_vector(p).entries == oracle::exponent_sums(p));
    CHECK(parity_vector(p) == Z2Vector::indicator(static_cast<std::size_t>(n), std::vector<int>{b}));
  }
}

TEST_CASE("compose, invert, simplify") {
  PlanarPage page(2);
  TwistWord a2(page, {twist({1}, 2)});
  TwistWord a_2(page, {twist({1}, -2)});
  CHECK(simplify(compose(a2, a_2)).empty());

  TwistWord w(page, {twist({1}), twist({1, 2}, 3)});
  TwistWord inv(page, {twist({1, 2}, -3), twist({1}, -1)});
  CHECK(invert(w) == inv);

  CHECK_THROWS_AS(compose(a2, TwistWord(PlanarPage(3))), PageMismatch);

  TwistWord nested(page, {twist({1}), twist({2}), twist({2}, -1), twist({1}, -1), twist({2}, 0)});
  CHECK(simplify(nested).empty());
  TwistWord merge(page, {twist({1}), twist({1}, 2), twist({2})});
  CHECK(simplify(merge) == TwistWord(page, {twist({1}, 3), twist({2})}));
}

TEST_CASE("exponent vector is a homomorphism") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 8;
    auto w1 = oracle::random_twist_word(rng, n, 8, 6);
    auto w2 = oracle::random_twist_word(rng, n, 8, 6);
    auto e1 = oracle::exponent_sums(w1);
    auto e2 = oracle::exponent_sums(w2);
    auto sum = exponent_vector(compose(w1, w2)).entries;
    auto neg = exponent_vector(invert(w1)).entries;
    for (std::size_t j = 0; j < e1.size(); ++j) {
      CHECK(sum[j] == e1[j] + e2[j]);
      CHECK(neg[j] == -e1[j]);
    }
  }
}

TEST_CASE("parity invariant under simplify and reordering") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + trial % 8;
    auto w = oracle::random_twist_word(rng, n, 12, 3);
    auto p = parity_vector(w);
    CHECK(p.to_ints() == parities(oracle::exponent_sums(w)));
    CHECK(parity_vector(simplify(w)) == p);
    std::vector<Letter> shuffled(w.letters().begin(), w.letters().end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(parity_vector(TwistWord(w.page(), shuffled)) == p);
  }
}

TEST_CASE("exponent overflow is reported") {
  TwistWord w(PlanarPage(1), {twist({1}, INT64_MAX), twist({1}, 1)});
  CHECK_THROWS_AS(exponent_vector(w), std::overflow_error);
}
