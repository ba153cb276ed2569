#pragma once

// Integer surgery diagrams on links braided about an unknotted axis, each
// component meeting the axis disk once. The link is recorded by a pure braid
// word in the generators A_{i,j}^{±1} and a framing per strand; this is all
// the planar open book construction consumes.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "obembed/homology.hpp"
#include "obembed/int_matrix.hpp"
#include "obembed/planar_mcg.hpp"

namespace obembed {

struct BraidLetter {
  int i;
  int j;
  int sign;  // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class FramedBraidDiagram {
 public:
  FramedBraidDiagram() = default;
  FramedBraidDiagram(std::vector<std::int64_t> framings, std::vector<BraidLetter> word = {});

  int strands() const { return static_cast<int>(framings_.size()); }
  std::span<const std::int64_t> framings() const { return framings_; }
  std::span<const BraidLetter> braid_word() const { return word_; }

  friend bool operator==(const FramedBraidDiagram&, const FramedBraidDiagram&) = default;

 private:
  std::vector<std::int64_t> framings_;
  std::vector<BraidLetter> word_;
};

// Symmetric; diagonal = framings, (i,j) = sum of signs of letters A_{i,j}.
using LinkingMatrix = IntMatrix;

LinkingMatrix linking_matrix(const FramedBraidDiagram& d);

// Sign choices used when turning diagrams into twist words. Emitted in
// every report.
struct SignConvention {
  static constexpr std::string_view page_surgery = "page-framed (-1)-surgery -> positive Dehn twist";
  static constexpr std::string_view framing = "framing f_i -> T{i}^(-f_i)";
  static constexpr std::string_view braid_letter = "A_{i,j}^e -> T{i,j}^(-e)";
  static constexpr std::string_view blow_up = "blow-up component links each region strand with +1";
};

// What a move claims and whether the H_1 audit confirmed it.
struct MoveRecord {
  std::string move;
  std::string detail;
  std::string obligation = "H_1 invariant factors unchanged";
  H1Invariants before;
  H1Invariants after;

  bool discharged() const { return before == after; }
};

struct MoveResult {
  FramedBraidDiagram diagram;
  MoveRecord record;
};

// Adds an eps-framed unknot as the last strand, linking each region strand
// once; region framings shift by eps and region pairs gain linking eps.
MoveResult blow_up(const FramedBraidDiagram& d, std::span<const int> region, int eps);

// Removes a (±1)-framed component c: f_i -= eps*lk(i,c)^2 and
// lk(i,j) -= eps*lk(i,c)*lk(j,c). Later strands are renumbered down by one.
MoveResult blow_down(const FramedBraidDiagram& d, int component);

// t full twists along the unknotted component c. Its coefficient f becomes
// f/(1 + t f), which has to stay integral; the others pick up
// f_i += t*lk(i,c)^2 and lk(i,j) += t*lk(i,c)*lk(j,c).
MoveResult rolfsen_twist(const FramedBraidDiagram& d, int component, std::int64_t t);

struct PlanarOpenBook {
  PlanarPage page;
  TwistWord monodromy;
};

// Page with one hole per strand; A_{i,j}^e contributes T{i,j}^(-e) and the
// framing f_i contributes T{i}^(-f_i).
PlanarOpenBook to_planar_open_book(const FramedBraidDiagram& d);

// Text format:
//   strands n
//   framings f1 ... fn
//   A i j ±1        (one line per braid letter)
// '#' starts a comment.
FramedBraidDiagram parse_diagram(std::string_view text);
std::string format_diagram(const FramedBraidDiagram& d);

}  // namespace obembed
