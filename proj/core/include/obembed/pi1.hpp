#pragma once

// Finite presentations and the open book realizing them as π_1: the page is
// the boundary sum of g copies of S^1 x D^3 and k copies of S^3 x [0,1], and
// the monodromy pushes the j-th sphere around a loop representing r_j.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "obembed/homology.hpp"

namespace obembed {

// Free group word; letter +i is x_i, -i is x_i^{-1} (1-based).
struct GroupWord {
  std::vector<int> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  // "x1 x2 X1", "1" for the empty word.
  std::string to_string(char symbol = 'x') const;

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
};

GroupWord free_reduce(const GroupWord& w);
// Free reduction followed by removal of conjugating letter pairs.
GroupWord cyclic_reduce(const GroupWord& w);

class GroupPresentation {
 public:
  GroupPresentation() = default;
  // Throws InvalidInput for letters outside 1..generators.
  GroupPresentation(int generators, std::vector<GroupWord> relators);

  int generators() const { return generators_; }
  const std::vector<GroupWord>& relators() const { return relators_; }

  std::string to_string(char symbol = 'x') const;  // "⟨x1, x2 | x1 x2 X1 X2⟩"

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

 private:
  int generators_ = 0;
  std::vector<GroupWord> relators_;
};

// Cyclically reduces every relator.
GroupPresentation simplify(const GroupPresentation& g);

struct PushPage {
  int handle_count = 0;  // copies of S^1 x D^3
  int sphere_count = 0;  // copies of S^3 x [0,1]
  std::vector<GroupWord> push_words;  // loop for the push of sphere j

  std::string description() const;
};

PushPage page_for_presentation(const GroupPresentation& g);

// ⟨a_1..a_g | γ_1..γ_k⟩ with each γ_j freely reduced: the handle relators
// a_i^{-1} φ(a_i) are trivial and each arc relator reduces to γ_j.
GroupPresentation pi1_of_open_book(const PushPage& page);

// Cokernel of the k x g exponent-sum matrix.
H1Invariants abelianization(const GroupPresentation& g);

// Text format: "gens g" then one relator per line, letters x3 / X3 for
// x_3 / x_3^{-1}, separated by spaces or not; "1" is the empty relator.
// '#' starts a comment.
GroupPresentation parse_presentation(std::string_view text);
std::string format_presentation(const GroupPresentation& g);

}  // namespace obembed
