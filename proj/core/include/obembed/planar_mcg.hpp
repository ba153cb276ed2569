#pragma once

// Planar pages, curve homology classes and Dehn twist words, together with
// their images in Z^n (exponent sums) and (Z/2)^n (parities).
//
// Curves are kept only up to homology: a simple closed curve on the disk with
// n holes is recorded as the set of inner boundary components it encloses.
// The full set {1..n} is the curve parallel to the outer boundary.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "obembed/z2.hpp"

namespace obembed {

class PlanarPage {
 public:
  // inner_count = 0 is the disk page of the trivial open book of S^3.
  explicit PlanarPage(int inner_count);

  int inner_count() const { return inner_count_; }
  std::size_t size() const { return static_cast<std::size_t>(inner_count_); }
  // Σ_{0,n+1}
  std::string notation() const;

  friend bool operator==(const PlanarPage&, const PlanarPage&) = default;

 private:
  int inner_count_;
};

// Homology class of a simple closed curve: a nonempty set of enclosed inner
// boundary indices (1-based), stored sorted.
class CurveClass {
 public:
  CurveClass(std::initializer_list<int> members);
  explicit CurveClass(std::vector<int> members);

  std::span<const int> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  int max() const { return members_.back(); }
  bool contains(int index) const;
  CurveClass with(int index) const;
  bool fits(const PlanarPage& page) const { return max() <= page.inner_count(); }

  std::string to_string() const;  // "{1,2}"

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend auto operator<=>(const CurveClass&, const CurveClass&) = default;

 private:
  std::vector<int> members_;
};

struct DehnTwist {
  CurveClass curve;
  friend bool operator==(const DehnTwist&, const DehnTwist&) = default;
};

// Push of inner boundary `boundary` around the curve `around`. On the page
// it acts as τ_around ∘ τ_{around ∪ {boundary}}^{-1}.
struct PlanarPush {
  int boundary;
  CurveClass around;
  friend bool operator==(const PlanarPush&, const PlanarPush&) = default;
};

using Generator = std::variant<DehnTwist, PlanarPush>;

struct Letter {
  Generator generator;
  std::int64_t exponent = 1;

  bool is_push() const { return std::holds_alternative<PlanarPush>(generator); }
  friend bool operator==(const Letter&, const Letter&) = default;
};

Letter twist(CurveClass curve, std::int64_t exponent = 1);
Letter push(int boundary, CurveClass around, std::int64_t exponent = 1);

// Word in twists and pushes, read left to right, validated against its page.
class TwistWord {
 public:
  explicit TwistWord(PlanarPage page, std::vector<Letter> letters = {});

  const PlanarPage& page() const { return page_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool has_push() const;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;

 private:
  PlanarPage page_;
  std::vector<Letter> letters_;
};

// Throws InvalidWord if a letter does not live on the page.
void validate_letter(const Letter& letter, const PlanarPage& page);

struct ExponentVector {
  std::vector<std::int64_t> entries;

  std::size_t size() const { return entries.size(); }
  Z2Vector parity() const;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

// Entry j is the exponent sum over letters whose curve encloses j; pushes are
// expanded first. Throws InvalidWord for letters that do not fit the page.
ExponentVector exponent_vector(std::span<const Letter> letters, const PlanarPage& page);
ExponentVector exponent_vector(const TwistWord& word, const PlanarPage& page);
ExponentVector exponent_vector(const TwistWord& word);

Z2Vector parity_vector(const TwistWord& word, const PlanarPage& page);
Z2Vector parity_vector(const TwistWord& word);

// Throws PageMismatch when the words live on different pages.
TwistWord compose(const TwistWord& first, const TwistWord& second);
TwistWord invert(const TwistWord& word);
// Merges adjacent letters with equal generators and drops zero exponents
// until no such pair is left.
TwistWord simplify(const TwistWord& word);

}  // namespace obembed
