#include <doctest.h>

#include <algorithm>
#include <random>

#include "obembed/error.hpp"
#include "obembed/pi1.hpp"
#include "oracles.hpp"

using namespace obembed;

namespace {

GroupWord w(std::initializer_list<int> l) { return GroupWord{l}; }

GroupPresentation random_presentation(std::mt19937_64& rng, bool reduce) {
  std::uniform_int_distribution<int> gd(0, 5), kd(0, 5), ld(0, 12), sd(0, 1);
  int g = gd(rng), k = kd(rng);
  std::vector<GroupWord> rel;
  for (int j = 0; j < k; ++j) {
    GroupWord r;
    if (g > 0) {
      std::uniform_int_distribution<int> xd(1, g);
      int len = ld(rng);
      for (int i = 0; i < len; ++i) r.letters.push_back(sd(rng) ? xd(rng) : -xd(rng));
    }
    rel.push_back(reduce ? free_reduce(r) : r);
  }
  return GroupPresentation(g, std::move(rel));
}

// Independent reduction: repeatedly delete the first cancelling pair.
GroupWord naive_reduce(GroupWord x) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < x.letters.size(); ++i) {
      if (x.letters[i] == -x.letters[i + 1]) {
        x.letters.erase(x.letters.begin() + static_cast<std::ptrdiff_t>(i), x.letters.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  return x;
}

}  // namespace

TEST_CASE("free and cyclic reduction") {
  CHECK(free_reduce(w({1, -1, 2})) == w({2}));
  CHECK(cyclic_reduce(w({1, 2, -1})) == w({2}));
  CHECK(free_reduce(w({1, 2, -1, -2})) == w({1, 2, -1, -2}));
  CHECK(cyclic_reduce(w({1, 2, -1, -2})) == w({1, 2, -1, -2}));
  CHECK(cyclic_reduce(w({1, -1})).empty());
  CHECK(cyclic_reduce(w({2, 1, 3, -1, -2})) == w({3}));

  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_presentation(rng, false);
    for (const auto& r : g.relators()) {
      auto f = free_reduce(r);
      CHECK(f == naive_reduce(r));
      CHECK(free_reduce(f) == f);
      auto c = cyclic_reduce(r);
      CHECK(cyclic_reduce(c) == c);
      if (c.size() >= 2) CHECK(c.letters.front() != -c.letters.back());
    }
  }
}

TEST_CASE("page for presentation") {
  auto p = page_for_presentation(GroupPresentation(1, {w({1, 1})}));
  CHECK(p.handle_count == 1);
  CHECK(p.sphere_count == 1);
  CHECK(p.push_words[0] == w({1, 1}));

  auto c = page_for_presentation(GroupPresentation(2, {w({1, 2, -1, -2})}));
  CHECK(c.handle_count == 2);
  CHECK(c.sphere_count == 1);
  CHECK(c.push_words[0].to_string() == "x1 x2 X1 X2");

  auto t = page_for_presentation(GroupPresentation());
  CHECK(t.handle_count == 0);
  CHECK(t.sphere_count == 0);
}

TEST_CASE("pi1 of the push open book") {
  auto g = pi1_of_open_book(PushPage{1, 1, {w({1, 1})}});
  CHECK(g == GroupPresentation(1, {w({1, 1})}));
  CHECK(g.to_string('a') == "⟨a1 | a1 a1⟩");
  auto f = pi1_of_open_book(PushPage{2, 0, {}});
  CHECK(f.generators() == 2);
  CHECK(f.relators().empty());
  CHECK(abelianization(f).notation() == "Z²");
  CHECK_THROWS_AS(pi1_of_open_book(PushPage{1, 2, {w({1})}}), InvalidInput);
}

TEST_CASE("round trip on random presentations") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_presentation(rng, true);
    CHECK(pi1_of_open_book(page_for_presentation(g)) == g);
    if (g.relators().empty()) CHECK(abelianization(g).free_rank == static_cast<std::size_t>(g.generators()));
  }
}

TEST_CASE("abelianization") {
  CHECK(abelianization(GroupPresentation(1, {w({1, 1})})).notation() == "Z/2");
  CHECK(abelianization(GroupPresentation(2, {w({1, 2, -1, -2})})).notation() == "Z²");
  auto h = abelianization(GroupPresentation(2, {w({1, 1, 2, 2, 2, 2, 2, 2}), w({1, 1, 1, 1})}));
  CHECK(h.torsion == std::vector<std::int64_t>{2, 12});
  CHECK(h.torsion == std::vector<std::int64_t>(
                         oracle::invariant_factors(IntMatrix{{2, 6}, {4, 0}})));

  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_presentation(rng, false);
    auto a = abelianization(g);
    CHECK(abelianization(simplify(g)) == a);
    auto rel = g.relators();
    std::shuffle(rel.begin(), rel.end(), rng);
    CHECK(abelianization(GroupPresentation(g.generators(), rel)) == a);
  }
}

TEST_CASE("presentation text format") {
  auto g = parse_presentation("# Z/2\ngens 2\nx1 x1\nx1x2X1X2\n1\n");
  CHECK(g == GroupPresentation(2, {w({1, 1}), w({1, 2, -1, -2}), w({})}));
  CHECK(parse_presentation(format_presentation(g)) == g);
  CHECK(parse_presentation("gens 0\n") == GroupPresentation());
  CHECK_THROWS_AS(parse_presentation("x1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_presentation("gens 1\nx2\n"), InvalidInput);
  CHECK_THROWS_AS(parse_presentation("gens 1\ny1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_presentation("gens 1\nx\n"), InvalidInput);
  CHECK_THROWS_AS(parse_presentation(""), InvalidInput);
}
