#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "obembed/int_matrix.hpp"

namespace obembed {

// Finitely generated abelian group Z/d_1 ⊕ ... ⊕ Z/d_r ⊕ Z^free_rank with
// d_1 | d_2 | ... and every d_i > 1.
struct H1Invariants {
  std::vector<std::int64_t> torsion;
  std::size_t free_rank = 0;

  // |H_1| when finite, 0 when free_rank > 0.
  BigInt order() const;
  std::string notation() const;  // "Z/7", "Z/2 ⊕ Z/12", "Z²", "0"
  friend bool operator==(const H1Invariants&, const H1Invariants&) = default;
};

// Z^cols modulo the row space of `relations`.
H1Invariants cokernel_invariants(const IntMatrix& relations);

// H_1 of the 3-manifold presented by a square (linking) matrix.
H1Invariants h1_invariants(const IntMatrix& m);

}  // namespace obembed
