#pragma once

// Spun embeddings of planar open books. A word of Dehn twists on the disk
// with n holes maps to sphere twists on the boundary sum of n copies of
// S^2 x [0,1]; only the parity of the exponent sum around each hole survives,
// so the target is W_{i,j} = #^i S^2 x S^2 # #^j S^2 ~x S^2.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "obembed/fourman.hpp"
#include "obembed/planar_mcg.hpp"
#include "obembed/z2.hpp"

namespace obembed {

struct EmbeddingReport {
  PlanarPage page{0};
  ExponentVector exponents;
  Z2Vector parity;
  FourManifoldForm raw;         // W_{i,j}
  FourManifoldForm normalized;

  std::int64_t even_count() const { return raw.trivial_bundle(); }
  std::int64_t odd_count() const { return raw.twisted_bundle(); }
  bool spin() const { return odd_count() == 0; }
  std::string raw_notation() const;  // "W_{i,j}"
  // Dimension-raising remark attached to every result.
  std::string note() const;
};

// Throws NotApplicable if the word contains push letters.
EmbeddingReport embedding_target(const PlanarPage& page, const TwistWord& word);
EmbeddingReport embedding_target(const TwistWord& word);

// True iff every exponent sum is even.
bool spin_target(const PlanarPage& page, const TwistWord& word);
bool spin_target(const TwistWord& word);

// Certificate that the open book on the boundary sum of n copies of
// S^1 x D^2 and S^2 x [0,1] (the planar page with holes a_1, b_1, ..., a_n,
// b_n labeled 1, 2, ..., 2n) spun embeds in S^4.
//
// The word must contain exactly one push P{b_j|a_j} per pair and nothing
// else in push form. The twist letters give exponent sums n(a_j), n(b_j).
// The condition only speaks about twists along classes spanned by the a_j,
// so it applies when every n(b_j) is even; it certifies when in addition
// every n(a_j) is odd.
struct S4Certificate {
  bool certified = false;
  bool applicable = false;
  std::string reason;
  std::vector<std::int64_t> a_exponents;
  std::vector<std::int64_t> b_exponents;
  std::optional<FourManifoldForm> target;

  std::string target_notation() const;
};

// Throws MalformedPairing if the page has an odd number of holes or the
// pushes do not pair each b_j with a_j exactly once.
S4Certificate s4_certificate(const PlanarPage& page, const TwistWord& word);
S4Certificate s4_certificate(const TwistWord& word);

}  // namespace obembed
