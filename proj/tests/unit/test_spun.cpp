#include <doctest.h>

#include <algorithm>
#include <random>

#include "obembed/error.hpp"
#include "obembed/spun.hpp"
#include "oracles.hpp"

using namespace obembed;

namespace {

CurveClass from_mask(unsigned mask, int n) {
  std::vector<int> m;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) m.push_back(i + 1);
  return CurveClass(std::move(m));
}

unsigned mask_of(const CurveClass& c) {
  unsigned m = 0;
  for (int i : c.members()) m |= 1u << (i - 1);
  return m;
}

TwistWord poincare_8(const CurveClass& b1, const CurveClass& b2, const CurveClass& b3) {
  std::vector<Letter> letters;
  const std::int64_t a[] = {1, 1, 1, 1, 2, 3, 1, 1};
  for (int i = 1; i <= 8; ++i) letters.push_back(twist({i}, a[i - 1]));
  letters.push_back(twist(b1));
  letters.push_back(twist(b2, -1));
  letters.push_back(twist(b3, -1));
  return TwistWord(PlanarPage(8), std::move(letters));
}

}  // namespace

TEST_CASE("L(pq-1,q) word embeds in two twisted bundles") {
  for (int p = 2; p <= 20; ++p)
    for (int q = 2; q <= 20; ++q) {
      TwistWord w(PlanarPage(2), {twist({1}, p), twist({1, 2}, p + q - 2), twist({2}, p - 1)});
      auto r = embedding_target(w);
      CHECK(r.exponents.entries == std::vector<std::int64_t>{2 * p + q - 2, 2 * p + q - 3});
      CHECK(r.even_count() == 1);
      CHECK(r.odd_count() == 1);
      CHECK(r.normalized == FourManifoldForm(2, 0, 0, 2));
    }
}

TEST_CASE("3-holed Poincaré sphere") {
  TwistWord w(PlanarPage(3), {twist({1, 2}, -1), twist({2, 3}, -1), twist({1, 2}), twist({2, 3}),
                              twist({1}, -1), twist({2}), twist({3}, -1)});
  auto r = embedding_target(w);
  CHECK(r.raw_notation() == "W_{0,3}");
  CHECK(r.raw == FourManifoldForm(2, 0, 0, 3));
  CHECK(r.normalized.notation() == "#³(S²×̃S²)");
  CHECK_FALSE(spin_target(w));
}

TEST_CASE("small Seifert family M_p") {
  for (int p = 2; p <= 10; ++p) {
    TwistWord w(PlanarPage(5), {twist({1}), twist({2}), twist({3}, 2), twist({4}, 2), twist({5}, p),
                                twist({1, 2, 3, 4, 5})});
    auto r = embedding_target(w);
    CHECK(r.exponents.entries == std::vector<std::int64_t>{2, 2, 3, 3, p + 1});
    CHECK(r.normalized == FourManifoldForm(2, 0, 0, 5));
  }
}

TEST_CASE("empty word gives #^n S2 x S2") {
  for (int n = 0; n <= 8; ++n) {
    auto r = embedding_target(TwistWord(PlanarPage(n)));
    CHECK(r.normalized == FourManifoldForm(2, 0, n, 0));
    CHECK(r.spin());
  }
}

TEST_CASE("pushes are rejected by the embedding engine") {
  CHECK_THROWS_AS(embedding_target(TwistWord(PlanarPage(2), {push(2, {1})})), NotApplicable);
}

TEST_CASE("three-boundary spin example matches its parity constraints") {
  // a={1}, b={2}, c={3}, d={1,2,3}, e={1,2}, f={2,3}, g={1,3}
  const std::vector<CurveClass> curves{{1}, {2}, {3}, {1, 2, 3}, {1, 2}, {2, 3}, {1, 3}};
  for (int code = 0; code < (1 << 14); ++code) {
    std::int64_t e[7];  // exponents in -1..2
    std::vector<Letter> letters;
    for (int k = 0; k < 7; ++k) {
      e[k] = ((code >> (2 * k)) & 3) - 1;
      letters.push_back(twist(curves[static_cast<std::size_t>(k)], e[k]));
    }
    bool want = (e[0] + e[3] + e[4] + e[6]) % 2 == 0 && (e[1] + e[3] + e[4] + e[5]) % 2 == 0 &&
                (e[2] + e[3] + e[5] + e[6]) % 2 == 0;
    CHECK(spin_target(TwistWord(PlanarPage(3), letters)) == want);
  }
}

TEST_CASE("8-holed Poincaré sphere: parity system solutions") {
  // Parity of the a-twists is (1,1,1,1,0,1,1,1); the b-curves have to cancel it.
  unsigned target = 0;
  const int a_par[] = {1, 1, 1, 1, 0, 1, 1, 1};
  for (int i = 0; i < 8; ++i) target |= static_cast<unsigned>(a_par[i]) << i;

  const CurveClass b1{1, 2, 5, 6, 7}, b2{3, 4, 5, 6, 7}, b3{6, 7, 8};
  CHECK((mask_of(b1) ^ mask_of(b2) ^ mask_of(b3)) == target);

  long solutions = 0;
  for (unsigned m1 = 1; m1 < 256; ++m1)
    for (unsigned m2 = 1; m2 < 256; ++m2) {
      unsigned m3 = target ^ m1 ^ m2;
      if (m3 == 0) continue;
      ++solutions;
      if ((m1 * 7 + m2) % 97 == 0) {
        CHECK(spin_target(poincare_8(from_mask(m1, 8), from_mask(m2, 8), from_mask(m3, 8))));
      }
    }
  CHECK(solutions > 0);

  auto r = embedding_target(poincare_8(b1, b2, b3));
  CHECK(r.spin());
  CHECK(r.normalized == FourManifoldForm(2, 0, 8, 0));

  // A b3 off by one boundary is not a solution.
  CHECK_FALSE(spin_target(poincare_8(b1, b2, CurveClass{6, 7})));
}

TEST_CASE("tripod example") {
  // b1 = b2 is forced; b3 and b4 only carry even exponents.
  TwistWord w(PlanarPage(6), {twist({1}), twist({2}, -2), twist({3}, -1), twist({4}, 3), twist({5}),
                              twist({6}, 2), twist({1, 2}, 3), twist({5, 6}, 2), twist({3, 4}, -2),
                              twist({1, 2})});
  auto r = embedding_target(w);
  CHECK(r.raw_notation() == "W_{2,4}");
  CHECK(r.raw.notation() == "#²(S²×S²) # #⁴(S²×̃S²)");
}

TEST_CASE("single odd boundary twist is not spin") {
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) CHECK_FALSE(spin_target(TwistWord(PlanarPage(n), {twist({i}, 3)})));
}

TEST_CASE("report invariants on random words") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + trial % 8;
    auto w = oracle::random_twist_word(rng, n, 10, 5);
    auto r = embedding_target(w);
    CHECK(r.even_count() + r.odd_count() == n);
    CHECK(spin_target(w) == (r.odd_count() == 0));

    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    std::shuffle(letters.begin(), letters.end(), rng);
    auto at = [&]() { return letters.begin() + static_cast<std::ptrdiff_t>(std::uniform_int_distribution<std::size_t>(0, letters.size())(rng)); };
    letters.insert(at(), twist(oracle::random_curve(rng, n), 2));
    auto c = oracle::random_curve(rng, n);
    letters.insert(at(), twist(c, 3));
    letters.insert(at(), twist(c, -3));
    auto r2 = embedding_target(TwistWord(w.page(), letters));
    CHECK(r2.raw == r.raw);
    CHECK(r2.parity == r.parity);
    CHECK(r2.normalized == r.normalized);
  }
}

TEST_CASE("S^4 certificate family") {
  // c = {a}, a = {a, b}, b = {b} on the page with holes a = 1, b = 2.
  for (int k = 0; k <= 10; ++k) {
    TwistWord w(PlanarPage(2), {twist({1}, 2 * k + 2), twist({1, 2}), twist({2}, -1), push(2, {1})});
    auto cert = s4_certificate(w);
    CHECK(cert.certified);
    REQUIRE(cert.target);
    CHECK(cert.target->is_sphere());

    TwistWord only_c(PlanarPage(2), {twist({1}, 2 * k + 2), push(2, {1})});
    auto c2 = s4_certificate(only_c);
    CHECK(c2.applicable);
    CHECK_FALSE(c2.certified);
  }
}

TEST_CASE("S^4 certificate examples") {
  CHECK(s4_certificate(TwistWord(PlanarPage(2), {twist({1}, 3), push(2, {1})})).certified);
  CHECK_FALSE(s4_certificate(TwistWord(PlanarPage(4), {twist({1}, 2), twist({3}, -4), push(2, {1}), push(4, {3})}))
                  .certified);
  CHECK(s4_certificate(TwistWord(PlanarPage(4), {twist({1}, 1), twist({3}, -3), push(2, {1}), push(4, {3})}))
            .certified);

  auto na = s4_certificate(TwistWord(PlanarPage(2), {twist({1}), twist({2}), push(2, {1})}));
  CHECK_FALSE(na.applicable);
  CHECK_FALSE(na.certified);
  CHECK(na.reason.find("not applicable") != std::string::npos);

  CHECK(s4_certificate(TwistWord(PlanarPage(0))).certified);
}

TEST_CASE("S^4 certificate pairing errors") {
  CHECK_THROWS_AS(s4_certificate(TwistWord(PlanarPage(3), {twist({1})})), MalformedPairing);
  CHECK_THROWS_AS(s4_certificate(TwistWord(PlanarPage(2), {twist({1})})), MalformedPairing);
  CHECK_THROWS_AS(s4_certificate(TwistWord(PlanarPage(2), {push(2, {1}), push(2, {1})})), MalformedPairing);
  CHECK_THROWS_AS(s4_certificate(TwistWord(PlanarPage(2), {push(1, {2})})), MalformedPairing);
  CHECK_THROWS_AS(s4_certificate(TwistWord(PlanarPage(2), {push(2, {1}, 2)})), MalformedPairing);
  CHECK_THROWS_AS(s4_certificate(TwistWord(PlanarPage(4), {push(2, {1}), push(4, {1, 3})})), MalformedPairing);
}
