#include "obembed/homology.hpp"

#include "obembed/error.hpp"

namespace obembed {

BigInt H1Invariants::order() const {
  if (free_rank > 0) return 0;
  BigInt out = 1;
  for (auto t : torsion) out *= t;
  return out;
}

std::string H1Invariants::notation() const {
  std::string out;
  for (auto t : torsion) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z/" + std::to_string(t);
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " ⊕ ";
    out += "Z";
    if (free_rank > 1) {
      static const char* sup[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
      for (char c : std::to_string(free_rank)) out += sup[c - '0'];
    }
  }
  return out.empty() ? "0" : out;
}

H1Invariants cokernel_invariants(const IntMatrix& relations) {
  H1Invariants h;
  std::size_t rank = 0;
  for (auto d : smith_diagonal(relations)) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) h.torsion.push_back(d);
  }
  h.free_rank = relations.cols() - rank;
  return h;
}

H1Invariants h1_invariants(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("presentation matrix must be square");
  return cokernel_invariants(m);
}

}  // namespace obembed
