#include "obembed/lens.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

#include "obembed/error.hpp"

namespace obembed {

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw InvalidInput("continued fraction needs at least one coefficient");
  for (auto a : coefficients_) {
    if (a > -2) throw InvalidInput("continued fraction coefficient " + std::to_string(a) + " is not <= -2");
  }
}

bool ContinuedFraction::all_even() const {
  for (auto a : coefficients_) {
    if (a % 2 != 0) return false;
  }
  return true;
}

std::string ContinuedFraction::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coefficients_[i]);
  }
  return out + "]";
}

ContinuedFraction cf_expand(std::int64_t p, std::int64_t q) {
  if (q <= 0 || q >= p) {
    throw InvalidInput("lens parameters need 0 < q < p, got p=" + std::to_string(p) +
                       " q=" + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw InvalidInput("lens parameters must be coprime, got p=" + std::to_string(p) +
                       " q=" + std::to_string(q));
  }
  // p/q = c - 1/(q/(cq - p)) with c = ceil(p/q).
  std::vector<std::int64_t> out;
  while (q != 0) {
    std::int64_t c = (p + q - 1) / q;
    out.push_back(-c);
    std::int64_t r = c * q - p;
    p = q;
    q = r;
  }
  return ContinuedFraction(std::move(out));
}

Rational cf_eval(const ContinuedFraction& c) {
  auto coeffs = c.coefficients();
  Rational tail = coeffs.back();
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    assert(tail != 0);
    tail = Rational(coeffs[i]) - 1 / tail;
  }
  return tail;
}

LinkingMatrix plumbing_matrix(const ContinuedFraction& c) {
  auto k = c.length();
  auto m = IntMatrix::square(k);
  for (std::size_t i = 0; i < k; ++i) {
    m(i, i) = c[i];
    if (i + 1 < k) m(i, i + 1) = m(i + 1, i) = 1;
  }
  return m;
}

std::int64_t SlidLensDiagram::linking(std::size_t i, std::size_t j) const {
  auto lo = std::min(i, j);
  std::int64_t sum = 0;
  for (std::size_t l = 0; l < lo; ++l) sum += twist_regions[l];
  return sum;
}

LinkingMatrix SlidLensDiagram::linking_matrix() const {
  auto k = size();
  auto m = IntMatrix::square(k);
  std::int64_t prefix = 0;
  for (std::size_t i = 0; i < k; ++i) {
    prefix += twist_regions[i];
    m(i, i) = framings[i];
    for (std::size_t j = i + 1; j < k; ++j) m(i, j) = m(j, i) = prefix;
  }
  return m;
}

SlidLensDiagram slid_diagram(const ContinuedFraction& c) {
  SlidLensDiagram d;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < c.length(); ++i) {
    sum += c[i];
    d.framings.push_back(sum + 2 * static_cast<std::int64_t>(i));
    d.twist_regions.push_back(c[i] + (i == 0 ? 1 : 2));
  }
  return d;
}

FramedBraidDiagram slid_braid_diagram(const ContinuedFraction& c) {
  auto d = slid_diagram(c);
  std::vector<BraidLetter> word;
  int k = static_cast<int>(d.size());
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      auto l = d.linking(i, j);
      int sign = l < 0 ? -1 : 1;
      for (std::int64_t n = 0; n < std::abs(l); ++n) word.push_back({i, j, sign});
    }
  }
  return FramedBraidDiagram(d.framings, std::move(word));
}

std::string LensOpenBook::reconciliation() const {
  if (parities_agree()) return "word parity " + word_parity.to_string() + " agrees with prefix-sum parity";
  return "word parity " + word_parity.to_string() + " differs from prefix-sum parity " +
         psi_parity.to_string() + "; the target uses the prefix sums";
}

namespace {

CurveClass range_class(int from, int to) {
  std::vector<int> members(static_cast<std::size_t>(to - from + 1));
  std::iota(members.begin(), members.end(), from);
  return CurveClass(std::move(members));
}

}  // namespace

LensOpenBook lens_open_book(const ContinuedFraction& c) {
  auto d = slid_diagram(c);
  int k = static_cast<int>(c.length());
  PlanarPage page(k);
  std::vector<Letter> letters;
  for (int i = 1; i <= k; ++i) letters.push_back(twist({i}, d.framings[i - 1]));
  for (int i = 1; i <= k; ++i) letters.push_back(twist(range_class(i, k), d.twist_regions[i - 1]));
  TwistWord word(page, std::move(letters));
  auto parity = parity_vector(word);
  return LensOpenBook{page, std::move(word), std::move(parity), psi_parity(c)};
}

Z2Vector psi_parity(const ContinuedFraction& c) {
  Z2Vector out(c.length());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < c.length(); ++i) {
    sum += c[i];
    out.set(i, sum % 2 != 0);
  }
  return out;
}

FourManifoldForm lens_embedding_target(const ContinuedFraction& c) {
  PageForm page;
  MonodromyForm mono;
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < c.length(); ++i) {
    sum += c[i];
    page.atoms.push_back(sphere_cyl(2));
    mono.twist_exponents.push_back(sum);
  }
  return normalize(evaluate_open_book(page, mono));
}

FourManifoldForm lens_embedding_target(std::int64_t p, std::int64_t q) {
  return lens_embedding_target(cf_expand(p, q));
}

}  // namespace obembed
