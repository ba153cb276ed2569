#include "obembed/surgery.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "obembed/error.hpp"

namespace obembed {

namespace {

std::int64_t checked(std::int64_t a, std::int64_t b, std::int64_t c) {
  // a + b * c
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_add_overflow(a, prod, &out)) {
    throw std::overflow_error("framing overflow");
  }
  return out;
}

void check_component(const FramedBraidDiagram& d, int c) {
  if (c < 1 || c > d.strands()) {
    throw InvalidMove("component " + std::to_string(c) + " out of range 1.." +
                      std::to_string(d.strands()));
  }
}

// Adjusts lk(i,j) by delta, preferring to cancel an existing opposite letter
// (the latest one) over growing the word.
void adjust_linking(std::vector<BraidLetter>& word, int i, int j, std::int64_t delta) {
  if (i > j) std::swap(i, j);
  const int s = delta > 0 ? 1 : -1;
  for (std::int64_t n = 0; n < (delta > 0 ? delta : -delta); ++n) {
    auto it = std::find(word.rbegin(), word.rend(), BraidLetter{i, j, -s});
    if (it != word.rend()) {
      word.erase(std::next(it).base());
    } else {
      word.push_back({i, j, s});
    }
  }
}

std::string region_string(std::span<const int> region) {
  std::string s = "{";
  for (std::size_t k = 0; k < region.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(region[k]);
  }
  return s + "}";
}

MoveResult finish(const FramedBraidDiagram& before, FramedBraidDiagram after, std::string move,
                  std::string detail) {
  MoveRecord record;
  record.move = std::move(move);
  record.detail = std::move(detail);
  record.before = h1_invariants(linking_matrix(before));
  record.after = h1_invariants(linking_matrix(after));
  return {std::move(after), std::move(record)};
}

}  // namespace

FramedBraidDiagram::FramedBraidDiagram(std::vector<std::int64_t> framings, std::vector<BraidLetter> word)
    : framings_(std::move(framings)), word_(std::move(word)) {
  const int n = strands();
  for (const auto& l : word_) {
    if (l.i < 1 || l.j > n || l.i >= l.j) {
      throw InvalidInput("braid letter A_{" + std::to_string(l.i) + "," + std::to_string(l.j) +
                         "} needs 1 <= i < j <= " + std::to_string(n));
    }
    if (l.sign != 1 && l.sign != -1) throw InvalidInput("braid letter exponent must be ±1");
  }
}

LinkingMatrix linking_matrix(const FramedBraidDiagram& d) {
  const auto n = static_cast<std::size_t>(d.strands());
  LinkingMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = d.framings()[i];
  for (const auto& l : d.braid_word()) {
    auto i = static_cast<std::size_t>(l.i - 1);
    auto j = static_cast<std::size_t>(l.j - 1);
    m(i, j) += l.sign;
    m(j, i) += l.sign;
  }
  return m;
}

MoveResult blow_up(const FramedBraidDiagram& d, std::span<const int> region, int eps) {
  if (eps != 1 && eps != -1) throw InvalidMove("blow-up framing must be ±1");
  if (region.empty()) throw InvalidMove("blow-up region must be nonempty");
  std::vector<int> members(region.begin(), region.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw InvalidMove("blow-up region lists a strand twice");
  }
  for (int r : members) check_component(d, r);

  std::vector<std::int64_t> framings(d.framings().begin(), d.framings().end());
  std::vector<BraidLetter> word(d.braid_word().begin(), d.braid_word().end());
  const int c = d.strands() + 1;
  for (int r : members) framings[static_cast<std::size_t>(r - 1)] += eps;
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) word.push_back({members[a], members[b], eps});
  for (int r : members) word.push_back({r, c, 1});
  framings.push_back(eps);

  return finish(d, FramedBraidDiagram(std::move(framings), std::move(word)), "blow_up",
                "region " + region_string(members) + ", framing " + std::to_string(eps));
}

MoveResult blow_down(const FramedBraidDiagram& d, int component) {
  check_component(d, component);
  const auto ci = static_cast<std::size_t>(component - 1);
  const std::int64_t eps = d.framings()[ci];
  if (eps != 1 && eps != -1) {
    throw InvalidMove("blow-down needs a ±1-framed component, component " +
                      std::to_string(component) + " has framing " + std::to_string(eps));
  }
  const auto lk = linking_matrix(d);
  const auto n = static_cast<std::size_t>(d.strands());

  std::vector<std::int64_t> framings(d.framings().begin(), d.framings().end());
  std::vector<BraidLetter> word;
  for (const auto& l : d.braid_word())
    if (l.i != component && l.j != component) word.push_back(l);

  for (std::size_t i = 0; i < n; ++i) {
    if (i == ci) continue;
    framings[i] = checked(framings[i], -eps, lk(i, ci) * lk(i, ci));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == ci) continue;
      std::int64_t delta = -eps * lk(i, ci) * lk(j, ci);
      if (delta) adjust_linking(word, static_cast<int>(i + 1), static_cast<int>(j + 1), delta);
    }
  }

  framings.erase(framings.begin() + static_cast<std::ptrdiff_t>(ci));
  for (auto& l : word) {
    if (l.i > component) --l.i;
    if (l.j > component) --l.j;
  }
  return finish(d, FramedBraidDiagram(std::move(framings), std::move(word)), "blow_down",
                "component " + std::to_string(component) + ", framing " + std::to_string(eps));
}

MoveResult rolfsen_twist(const FramedBraidDiagram& d, int component, std::int64_t t) {
  check_component(d, component);
  const auto ci = static_cast<std::size_t>(component - 1);
  const std::int64_t f = d.framings()[ci];

  // New coefficient f / (1 + t f) must be an integer.
  std::int64_t new_f = f;
  if (t != 0 && f != 0) {
    std::int64_t denom = checked(1, t, f);
    if (denom == 1) {
      new_f = f;
    } else if (denom == -1) {
      new_f = -f;
    } else {
      throw InvalidMove("Rolfsen twist by " + std::to_string(t) + " on framing " + std::to_string(f) +
                        " leaves a non-integral coefficient");
    }
  }

  const auto lk = linking_matrix(d);
  const auto n = static_cast<std::size_t>(d.strands());
  std::vector<std::int64_t> framings(d.framings().begin(), d.framings().end());
  std::vector<BraidLetter> word(d.braid_word().begin(), d.braid_word().end());
  framings[ci] = new_f;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == ci) continue;
    framings[i] = checked(framings[i], t, lk(i, ci) * lk(i, ci));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == ci) continue;
      std::int64_t delta = checked(0, t, lk(i, ci) * lk(j, ci));
      if (delta) adjust_linking(word, static_cast<int>(i + 1), static_cast<int>(j + 1), delta);
    }
  }
  return finish(d, FramedBraidDiagram(std::move(framings), std::move(word)), "rolfsen_twist",
                "component " + std::to_string(component) + ", twists " + std::to_string(t));
}

PlanarOpenBook to_planar_open_book(const FramedBraidDiagram& d) {
  PlanarPage page(d.strands());
  std::vector<Letter> letters;
  for (const auto& l : d.braid_word()) letters.push_back(twist(CurveClass{l.i, l.j}, -l.sign));
  for (int i = 1; i <= d.strands(); ++i) {
    std::int64_t f = d.framings()[static_cast<std::size_t>(i - 1)];
    if (f != 0) letters.push_back(twist(CurveClass{i}, -f));
  }
  return {page, TwistWord(page, std::move(letters))};
}

FramedBraidDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int strands = -1;
  bool have_framings = false;
  std::vector<std::int64_t> framings;
  std::vector<BraidLetter> word;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [&](const std::string& why) {
      throw InvalidInput("diagram line " + std::to_string(lineno) + ": " + why);
    };
    if (key == "strands") {
      if (strands >= 0) fail("repeated 'strands'");
      if (!(ls >> strands) || strands < 0) fail("expected a non-negative strand count");
    } else if (key == "framings") {
      if (strands < 0) fail("'framings' before 'strands'");
      std::int64_t f = 0;
      while (ls >> f) framings.push_back(f);
      if (!ls.eof()) fail("framings must be integers");
      have_framings = true;
    } else if (key == "A") {
      BraidLetter l{};
      if (!(ls >> l.i >> l.j >> l.sign)) fail("expected 'A i j ±1'");
      word.push_back(l);
    } else {
      fail("unknown keyword '" + key + "'");
    }
    std::string extra;
    if (key != "framings" && (ls >> extra)) fail("trailing tokens");
  }
  if (strands < 0) throw InvalidInput("diagram is missing 'strands'");
  if (!have_framings && strands > 0) throw InvalidInput("diagram is missing 'framings'");
  if (static_cast<int>(framings.size()) != strands) {
    throw InvalidInput("expected " + std::to_string(strands) + " framings, got " +
                       std::to_string(framings.size()));
  }
  return FramedBraidDiagram(std::move(framings), std::move(word));
}

std::string format_diagram(const FramedBraidDiagram& d) {
  std::ostringstream os;
  os << "strands " << d.strands() << "\nframings";
  for (auto f : d.framings()) os << ' ' << f;
  os << '\n';
  for (const auto& l : d.braid_word()) os << "A " << l.i << ' ' << l.j << ' ' << (l.sign > 0 ? "+1" : "-1") << '\n';
  return os.str();
}

}  // namespace obembed
