#pragma once

// Lens spaces L(p,q): Hirzebruch-Jung continued fractions, the linear
// plumbing presentation, the braided diagram obtained by sliding each unknot
// over its predecessors, the planar open book read off from it, and the
// spun embedding target.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "obembed/fourman.hpp"
#include "obembed/planar_mcg.hpp"
#include "obembed/surgery.hpp"
#include "obembed/z2.hpp"

namespace obembed {

using Rational = boost::multiprecision::cpp_rational;

// [a_1, ..., a_k] = a_1 - 1/(a_2 - 1/(... - 1/a_k)), every a_i <= -2.
class ContinuedFraction {
 public:
  explicit ContinuedFraction(std::vector<std::int64_t> coefficients);

  std::span<const std::int64_t> coefficients() const { return coefficients_; }
  std::size_t length() const { return coefficients_.size(); }
  std::int64_t operator[](std::size_t i) const { return coefficients_[i]; }
  bool all_even() const;

  std::string to_string() const;  // "[-4,-2]"

  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

// Expansion of -p/q. Throws InvalidInput unless 0 < q < p and gcd(p, q) = 1.
ContinuedFraction cf_expand(std::int64_t p, std::int64_t q);

// Exact right-to-left evaluation.
Rational cf_eval(const ContinuedFraction& c);

// Tridiagonal: diagonal a_i, off-diagonal 1.
LinkingMatrix plumbing_matrix(const ContinuedFraction& c);

// Diagram after sliding unknot i over unknots 1..i-1 for every i. Strand i
// carries framing b_i; strands i < j link ℓ(i,j) = t_1 + ... + t_i times,
// where t_i counts the full twists in the i-th twist region.
struct SlidLensDiagram {
  std::vector<std::int64_t> framings;       // b_i
  std::vector<std::int64_t> twist_regions;  // t_i

  std::size_t size() const { return framings.size(); }
  // 1-based, i != j.
  std::int64_t linking(std::size_t i, std::size_t j) const;
  LinkingMatrix linking_matrix() const;
};

SlidLensDiagram slid_diagram(const ContinuedFraction& c);

// The slid diagram as a framed pure braid: |ℓ(i,j)| letters A_{i,j} of the
// sign of ℓ(i,j).
FramedBraidDiagram slid_braid_diagram(const ContinuedFraction& c);

// Planar open book read off strand by strand from the slid diagram, with the
// comparison of its parity vector against the prefix-sum parities.
struct LensOpenBook {
  PlanarPage page;
  TwistWord monodromy;
  Z2Vector word_parity;
  Z2Vector psi_parity;

  bool parities_agree() const { return word_parity == psi_parity; }
  std::string reconciliation() const;
};

LensOpenBook lens_open_book(const ContinuedFraction& c);

// Entry j is (a_1 + ... + a_j) mod 2.
Z2Vector psi_parity(const ContinuedFraction& c);

// Sphere-twist exponents a_1, a_1 + a_2, ..., evaluated on k copies of
// S^2 x [0,1] and normalized.
FourManifoldForm lens_embedding_target(const ContinuedFraction& c);
FourManifoldForm lens_embedding_target(std::int64_t p, std::int64_t q);

}  // namespace obembed
