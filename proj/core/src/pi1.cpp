#include "obembed/pi1.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "obembed/error.hpp"

namespace obembed {

std::string GroupWord::to_string(char symbol) const {
  if (letters.empty()) return "1";
  std::string out;
  for (auto l : letters) {
    if (!out.empty()) out += ' ';
    out += l > 0 ? symbol : static_cast<char>(std::toupper(symbol));
    out += std::to_string(std::abs(l));
  }
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (auto l : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -l) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

GroupWord cyclic_reduce(const GroupWord& w) {
  auto r = free_reduce(w);
  std::size_t lo = 0, hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return GroupWord{{r.letters.begin() + static_cast<std::ptrdiff_t>(lo),
                    r.letters.begin() + static_cast<std::ptrdiff_t>(hi)}};
}

GroupPresentation::GroupPresentation(int generators, std::vector<GroupWord> relators)
    : generators_(generators), relators_(std::move(relators)) {
  if (generators_ < 0) throw InvalidInput("generator count must be non-negative");
  for (const auto& r : relators_) {
    for (auto l : r.letters) {
      if (l == 0 || std::abs(l) > generators_) {
        throw InvalidInput("relator letter " + std::to_string(l) + " outside 1.." +
                           std::to_string(generators_));
      }
    }
  }
}

std::string GroupPresentation::to_string(char symbol) const {
  std::string out = "⟨";
  for (int i = 1; i <= generators_; ++i) {
    if (i > 1) out += ", ";
    out += symbol + std::to_string(i);
  }
  out += " | ";
  for (std::size_t j = 0; j < relators_.size(); ++j) {
    if (j) out += ", ";
    out += relators_[j].to_string(symbol);
  }
  return out + "⟩";
}

GroupPresentation simplify(const GroupPresentation& g) {
  std::vector<GroupWord> rel;
  for (const auto& r : g.relators()) rel.push_back(cyclic_reduce(r));
  return GroupPresentation(g.generators(), std::move(rel));
}

std::string PushPage::description() const {
  std::string out = "page: " + std::to_string(handle_count) + " x (S¹×D³) ♮ " +
                    std::to_string(sphere_count) + " x (S³×[0,1])";
  for (std::size_t j = 0; j < push_words.size(); ++j) {
    out += "; push S" + std::to_string(j + 1) + " along " + push_words[j].to_string();
  }
  return out;
}

PushPage page_for_presentation(const GroupPresentation& g) {
  return PushPage{g.generators(), static_cast<int>(g.relators().size()), g.relators()};
}

GroupPresentation pi1_of_open_book(const PushPage& page) {
  if (page.sphere_count != static_cast<int>(page.push_words.size())) {
    throw InvalidInput("push page needs one push word per sphere");
  }
  std::vector<GroupWord> rel;
  for (const auto& w : page.push_words) rel.push_back(free_reduce(w));
  return GroupPresentation(page.handle_count, std::move(rel));
}

H1Invariants abelianization(const GroupPresentation& g) {
  IntMatrix m(g.relators().size(), static_cast<std::size_t>(g.generators()));
  for (std::size_t j = 0; j < g.relators().size(); ++j) {
    for (auto l : g.relators()[j].letters) {
      m(j, static_cast<std::size_t>(std::abs(l) - 1)) += l > 0 ? 1 : -1;
    }
  }
  return cokernel_invariants(m);
}

namespace {

GroupWord parse_word(std::string_view line, int lineno) {
  GroupWord w;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw InvalidInput("line " + std::to_string(lineno) + ": " + what);
  };
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1' && w.letters.empty()) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'X') fail(std::string("unexpected character '") + c + "'");
    std::size_t j = ++i;
    while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
    if (j == i) fail("generator letter without index");
    int idx = std::stoi(std::string(line.substr(i, j - i)));
    w.letters.push_back(c == 'x' ? idx : -idx);
    i = j;
  }
  return w;
}

}  // namespace

GroupPresentation parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int gens = -1;
  std::vector<GroupWord> rel;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (gens < 0) {
      std::istringstream ls(line);
      std::string key;
      if (!(ls >> key >> gens) || key != "gens" || gens < 0) {
        throw InvalidInput("line " + std::to_string(lineno) + ": expected 'gens g'");
      }
      continue;
    }
    rel.push_back(parse_word(line, lineno));
  }
  if (gens < 0) throw InvalidInput("missing 'gens g' line");
  return GroupPresentation(gens, std::move(rel));
}

std::string format_presentation(const GroupPresentation& g) {
  std::string out = "gens " + std::to_string(g.generators()) + "\n";
  for (const auto& r : g.relators()) out += r.to_string() + "\n";
  return out;
}

}  // namespace obembed
