#include <doctest.h>

#include <functional>
#include <random>

#include "obembed/error.hpp"
#include "obembed/fourman.hpp"

using namespace obembed;

TEST_CASE("evaluator atoms") {
  CHECK(evaluate_open_book({{sphere_cyl(2)}}, {{0}, {}}) == FourManifoldForm(2, 0, 1, 0));
  CHECK(evaluate_open_book({{sphere_cyl(2)}}, {{1}, {}}) == FourManifoldForm(2, 0, 0, 1));
  CHECK(evaluate_open_book({{sphere_cyl(2)}}, {{-3}, {}}) == FourManifoldForm(2, 0, 0, 1));
  CHECK(evaluate_open_book({{circle_disk(2), sphere_cyl(2)}}, {{5}, {{1, 1}}}).is_sphere());
  CHECK(evaluate_open_book({{circle_disk(2)}}, {{}, {}}) == FourManifoldForm(2, 1, 0, 0));
  CHECK(evaluate_open_book({{circle_disk(2)}}, {{}, {}}).notation() == "S¹×S³");
  CHECK(evaluate_open_book({}, {}).notation() == "S⁴");
}

TEST_CASE("evaluator errors") {
  CHECK_THROWS_AS(evaluate_open_book({{sphere_cyl(2), sphere_cyl(3)}}, {{0, 0}, {}}), DimensionMismatch);
  CHECK_THROWS_AS(evaluate_open_book({{sphere_cyl(2)}}, {{}, {}}), InvalidMonodromy);
  CHECK_THROWS_AS(evaluate_open_book({{circle_disk(2), sphere_cyl(2)}}, {{0}, {{2, 1}}}), InvalidMonodromy);
  CHECK_THROWS_AS(evaluate_open_book({{circle_disk(2), sphere_cyl(2)}}, {{0}, {{1, 1}, {1, 1}}}),
                  InvalidMonodromy);
  CHECK_THROWS_AS(evaluate_open_book({}, {{1}, {}}), InvalidMonodromy);
  CHECK_THROWS_AS(FourManifoldForm(0, 0, 0, 0), InvalidInput);
  CHECK_THROWS_AS(FourManifoldForm(2, -1, 0, 0), InvalidInput);
}

TEST_CASE("zero exponents give one S2 x S^m per atom") {
  for (int m = 1; m <= 4; ++m) {
    for (std::size_t k = 1; k <= 8; ++k) {
      PageForm page{std::vector<PageAtom>(k, sphere_cyl(m))};
      auto f = evaluate_open_book(page, {std::vector<std::int64_t>(k, 0), {}});
      CHECK(f == FourManifoldForm(m, 0, static_cast<std::int64_t>(k), 0));
    }
  }
  CHECK(evaluate_open_book({}, {}) == FourManifoldForm::sphere());
}

TEST_CASE("spin iff every unabsorbed exponent is even") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(-5, 5), coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t k = 1 + trial % 6;
    PageForm page;
    MonodromyForm mono;
    bool spin = true;
    std::size_t circles = 0;
    for (std::size_t s = 1; s <= k; ++s) {
      auto x = e(rng);
      page.atoms.push_back(sphere_cyl(2));
      mono.twist_exponents.push_back(x);
      if (coin(rng)) {
        page.atoms.push_back(circle_disk(2));
        mono.pushes.push_back({++circles, s});
      } else if (x % 2 != 0) {
        spin = false;
      }
    }
    CHECK(evaluate_open_book(page, mono).is_spin() == spin);
  }
}

TEST_CASE("normalize") {
  CHECK(normalize(FourManifoldForm(2, 0, 1, 1)) == FourManifoldForm(2, 0, 0, 2));
  CHECK(normalize(FourManifoldForm(2, 0, 3, 0)) == FourManifoldForm(2, 0, 3, 0));
  CHECK(normalize(FourManifoldForm(2, 0, 2, 1)) == FourManifoldForm(2, 0, 0, 3));
  CHECK(normalize(FourManifoldForm(2, 1, 2, 1)) == FourManifoldForm(2, 1, 2, 1));
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 4; ++t)
      for (int u = 0; u < 4; ++u) {
        auto f = normalize(FourManifoldForm(2, s, t, u));
        CHECK(normalize(f) == f);
      }
}

TEST_CASE("equal and connected sum") {
  auto three_twisted = FourManifoldForm(2, 0, 0, 3);
  auto mixed = connected_sum(connected_sum(FourManifoldForm(2, 0, 1, 0), FourManifoldForm(2, 0, 1, 0)),
                             FourManifoldForm(2, 0, 0, 1));
  CHECK(equal(three_twisted, mixed));
  CHECK_FALSE(equal(FourManifoldForm(2, 0, 2, 0), FourManifoldForm(2, 0, 0, 2)));
  CHECK(equal(FourManifoldForm::sphere(), FourManifoldForm::sphere()));
  CHECK_THROWS_AS(equal(FourManifoldForm::sphere(2), FourManifoldForm::sphere(3)), NotComparable);
  CHECK_THROWS_AS(connected_sum(FourManifoldForm::sphere(2), FourManifoldForm::sphere(3)), DimensionMismatch);

  std::vector<FourManifoldForm> forms;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 3; ++t)
      for (int u = 0; u < 3; ++u) forms.emplace_back(2, s, t, u);
  for (const auto& a : forms) {
    CHECK(connected_sum(a, FourManifoldForm::sphere()) == a);
    CHECK(equal(a, a));
    for (const auto& b : forms) {
      CHECK(connected_sum(a, b) == connected_sum(b, a));
      CHECK(equal(a, b) == equal(b, a));
      for (const auto& c : forms)
        if (equal(a, b) && equal(b, c)) CHECK(equal(a, c));
    }
  }
}

TEST_CASE("notation") {
  CHECK(FourManifoldForm(2, 0, 0, 3).notation() == "#³(S²×̃S²)");
  CHECK(FourManifoldForm(2, 0, 1, 0).notation() == "S²×S²");
  CHECK(FourManifoldForm(2, 0, 2, 1).notation() == "#²(S²×S²) # S²×̃S²");
}

TEST_CASE("twist images") {
  CHECK(twist_image(std::vector<int>{2}, 3).to_string() == "(0,1,0)");
  CHECK(twist_image(std::vector<int>{1, 2}, 3).to_string() == "(1,1,0)");
  CHECK(twist_image(std::vector<int>{1, 2, 3}, 3).to_string() == "(1,1,1)");
  CHECK_THROWS_AS(twist_image(std::vector<int>{}, 3), InvalidInput);
  CHECK_THROWS_AS(twist_image(std::vector<int>{1, 1}, 3), InvalidInput);
  CHECK_THROWS(twist_image(std::vector<int>{4}, 3));
}

TEST_CASE("twist image is additive on disjoint tubings") {
  const std::size_t k = 6;
  for (unsigned s = 1; s < (1u << k); ++s)
    for (unsigned t = 1; t < (1u << k); ++t) {
      if (s & t) continue;
      std::vector<int> vs, vt, vu;
      for (std::size_t i = 0; i < k; ++i) {
        if (s >> i & 1) vs.push_back(static_cast<int>(i + 1));
        if (t >> i & 1) vt.push_back(static_cast<int>(i + 1));
        if ((s | t) >> i & 1) vu.push_back(static_cast<int>(i + 1));
      }
      CHECK(twist_image(vu, k) == twist_image(vs, k) + twist_image(vt, k));
    }
}

TEST_CASE("boundary spheres of a punctured ball cancel") {
  for (int n = 1; n <= 16; ++n) {
    std::vector<std::vector<int>> inner;
    for (int i = 1; i <= n; ++i) inner.push_back({i});
    CHECK(boundary_sphere_sum(inner, static_cast<std::size_t>(n)).is_zero());
  }
}
