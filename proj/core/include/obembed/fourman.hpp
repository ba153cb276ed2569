#pragma once

// Open books whose pages are boundary connected sums of S^m x [0,1] and
// S^1 x D^m, evaluated to formal connected sums of
//   S^1 x S^{m+1},  S^2 x S^m,  S^2 ~x S^m  (twisted bundle),
// plus the sphere-twist group (Z/2)^k of a boundary sum of k copies of
// S^2 x [0,1].

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "obembed/z2.hpp"

namespace obembed {

enum class AtomKind { SphereCyl, CircleDisk };

// SphereCyl(m) = S^m x [0,1], CircleDisk(m) = S^1 x D^m.
struct PageAtom {
  AtomKind kind;
  int m;
  friend bool operator==(const PageAtom&, const PageAtom&) = default;
};

inline PageAtom sphere_cyl(int m) { return {AtomKind::SphereCyl, m}; }
inline PageAtom circle_disk(int m) { return {AtomKind::CircleDisk, m}; }

struct PageForm {
  std::vector<PageAtom> atoms;

  std::size_t sphere_count() const;
  std::size_t circle_count() const;
};

// Pushes pair the i-th CircleDisk atom with the j-th SphereCyl atom, both
// 1-based within their own kind.
struct Push {
  std::size_t circle;
  std::size_t sphere;
  friend bool operator==(const Push&, const Push&) = default;
};

struct MonodromyForm {
  // One exponent per SphereCyl atom, in page order.
  std::vector<std::int64_t> twist_exponents;
  std::vector<Push> pushes;
};

class FourManifoldForm {
 public:
  FourManifoldForm() = default;
  FourManifoldForm(int m, std::int64_t s1_cross_sphere, std::int64_t trivial_bundle,
                   std::int64_t twisted_bundle);

  // S^{m+2}, the unit of connected sum.
  static FourManifoldForm sphere(int m = 2) { return FourManifoldForm(m, 0, 0, 0); }

  int m() const { return m_; }
  std::int64_t s1_cross_sphere() const { return s1_cross_sphere_; }
  std::int64_t trivial_bundle() const { return trivial_bundle_; }
  std::int64_t twisted_bundle() const { return twisted_bundle_; }

  bool is_sphere() const { return s1_cross_sphere_ == 0 && trivial_bundle_ == 0 && twisted_bundle_ == 0; }
  bool is_spin() const { return twisted_bundle_ == 0; }

  // "S²×S² # S²×̃S²", "S⁴" for the empty sum.
  std::string notation() const;

  friend bool operator==(const FourManifoldForm&, const FourManifoldForm&) = default;

 private:
  int m_ = 2;
  std::int64_t s1_cross_sphere_ = 0;
  std::int64_t trivial_bundle_ = 0;
  std::int64_t twisted_bundle_ = 0;
};

// Throws DimensionMismatch for mixed dimensions.
FourManifoldForm connected_sum(const FourManifoldForm& a, const FourManifoldForm& b);

// Atom-wise evaluation followed by connected sum. A SphereCyl with even
// exponent gives S^2 x S^m, odd gives S^2 ~x S^m; an unpaired CircleDisk gives
// S^1 x S^{m+1}; a pushed (CircleDisk, SphereCyl) pair gives S^{m+2} whatever
// the twist exponent on its sphere atom.
// Throws DimensionMismatch for atoms of different dimension and
// InvalidMonodromy for bad exponent counts or push indices.
FourManifoldForm evaluate_open_book(const PageForm& page, const MonodromyForm& mono);

// Non-spin absorption: S^2 ~x S^m # S^2 x S^m = 2 (S^2 ~x S^m), applied when
// there are no S^1 x S^{m+1} summands.
FourManifoldForm normalize(const FourManifoldForm& form);

// Throws NotComparable for forms of different dimension.
bool equal(const FourManifoldForm& a, const FourManifoldForm& b);

// Class in Twist(V_k) = (Z/2)^k of the twist along the sphere obtained by
// tubing the core spheres listed in `sphere` (1-based).
Z2Vector twist_image(std::span<const int> sphere, std::size_t k);

// Sum over Z/2 of the twists along the boundary spheres of a D^3_r embedded
// in V_k whose inner spheres are `inner` (each a tubing set); the outer sphere
// is the tube of all of them. Zero for every valid configuration.
Z2Vector boundary_sphere_sum(std::span<const std::vector<int>> inner, std::size_t k);

}  // namespace obembed
