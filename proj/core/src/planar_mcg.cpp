#include "obembed/planar_mcg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "obembed/error.hpp"

namespace obembed {

namespace {

std::int64_t add_exponents(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("twist exponent overflow");
  return out;
}

std::int64_t negate_exponent(std::int64_t a) {
  if (a == INT64_MIN) throw std::overflow_error("twist exponent overflow");
  return -a;
}

void accumulate(std::vector<std::int64_t>& entries, const CurveClass& curve, std::int64_t exponent) {
  for (int j : curve.members()) {
    auto& e = entries[static_cast<std::size_t>(j - 1)];
    e = add_exponents(e, exponent);
  }
}

}  // namespace

PlanarPage::PlanarPage(int inner_count) : inner_count_(inner_count) {
  if (inner_count < 0) throw InvalidInput("planar page needs a non-negative hole count");
}

std::string PlanarPage::notation() const {
  return "Σ_{0," + std::to_string(inner_count_ + 1) + "}";
}

CurveClass::CurveClass(std::initializer_list<int> members)
    : CurveClass(std::vector<int>(members)) {}

CurveClass::CurveClass(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw InvalidWord("curve class must enclose at least one boundary");
  if (members_.front() < 1) throw InvalidWord("boundary indices start at 1");
}

bool CurveClass::contains(int index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

CurveClass CurveClass::with(int index) const {
  auto m = members_;
  m.push_back(index);
  return CurveClass(std::move(m));
}

std::string CurveClass::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i]);
  }
  return s + "}";
}

Letter twist(CurveClass curve, std::int64_t exponent) {
  return Letter{DehnTwist{std::move(curve)}, exponent};
}

Letter push(int boundary, CurveClass around, std::int64_t exponent) {
  return Letter{PlanarPush{boundary, std::move(around)}, exponent};
}

void validate_letter(const Letter& letter, const PlanarPage& page) {
  if (const auto* t = std::get_if<DehnTwist>(&letter.generator)) {
    if (!t->curve.fits(page)) {
      throw InvalidWord("curve " + t->curve.to_string() + " does not fit on " + page.notation());
    }
    return;
  }
  const auto& p = std::get<PlanarPush>(letter.generator);
  if (p.boundary < 1 || p.boundary > page.inner_count()) {
    throw InvalidWord("pushed boundary " + std::to_string(p.boundary) + " does not exist on " +
                      page.notation());
  }
  if (!p.around.fits(page)) {
    throw InvalidWord("push curve " + p.around.to_string() + " does not fit on " + page.notation());
  }
  if (p.around.contains(p.boundary)) {
    throw InvalidWord("a boundary cannot be pushed around a curve enclosing it");
  }
}

TwistWord::TwistWord(PlanarPage page, std::vector<Letter> letters)
    : page_(page), letters_(std::move(letters)) {
  for (const auto& l : letters_) validate_letter(l, page_);
}

bool TwistWord::has_push() const {
  return std::any_of(letters_.begin(), letters_.end(), [](const Letter& l) { return l.is_push(); });
}

Z2Vector ExponentVector::parity() const {
  Z2Vector v(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) v.set(i, entries[i] % 2 != 0);
  return v;
}

ExponentVector exponent_vector(std::span<const Letter> letters, const PlanarPage& page) {
  ExponentVector out{std::vector<std::int64_t>(page.size(), 0)};
  for (const auto& letter : letters) {
    validate_letter(letter, page);
    if (const auto* t = std::get_if<DehnTwist>(&letter.generator)) {
      accumulate(out.entries, t->curve, letter.exponent);
    } else {
      const auto& p = std::get<PlanarPush>(letter.generator);
      accumulate(out.entries, p.around, letter.exponent);
      accumulate(out.entries, p.around.with(p.boundary), negate_exponent(letter.exponent));
    }
  }
  return out;
}

ExponentVector exponent_vector(const TwistWord& word, const PlanarPage& page) {
  return exponent_vector(word.letters(), page);
}

ExponentVector exponent_vector(const TwistWord& word) {
  return exponent_vector(word.letters(), word.page());
}

Z2Vector parity_vector(const TwistWord& word, const PlanarPage& page) {
  return exponent_vector(word, page).parity();
}

Z2Vector parity_vector(const TwistWord& word) { return exponent_vector(word).parity(); }

TwistWord compose(const TwistWord& first, const TwistWord& second) {
  if (!(first.page() == second.page())) {
    throw PageMismatch("cannot compose words on " + first.page().notation() + " and " +
                       second.page().notation());
  }
  std::vector<Letter> letters(first.letters().begin(), first.letters().end());
  letters.insert(letters.end(), second.letters().begin(), second.letters().end());
  return TwistWord(first.page(), std::move(letters));
}

TwistWord invert(const TwistWord& word) {
  std::vector<Letter> letters;
  letters.reserve(word.size());
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    letters.push_back(Letter{it->generator, negate_exponent(it->exponent)});
  }
  return TwistWord(word.page(), std::move(letters));
}

TwistWord simplify(const TwistWord& word) {
  std::vector<Letter> stack;
  for (const auto& letter : word.letters()) {
    if (letter.exponent == 0) continue;
    if (!stack.empty() && stack.back().generator == letter.generator) {
      stack.back().exponent = add_exponents(stack.back().exponent, letter.exponent);
      if (stack.back().exponent == 0) stack.pop_back();
    } else {
      stack.push_back(letter);
    }
  }
  return TwistWord(word.page(), std::move(stack));
}

}  // namespace obembed
