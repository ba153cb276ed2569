#include "obembed/int_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "obembed/error.hpp"

namespace obembed {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::int64_t checked_sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw std::overflow_error("int64 overflow in exact integer matrix routine");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("int64 overflow in exact integer matrix routine");
  }
  return out;
}

std::int64_t abs_checked(std::int64_t v) {
  if (v == INT64_MIN) throw std::overflow_error("int64 overflow in abs");
  return v < 0 ? -v : v;
}

struct Overflow {};

// Reduced fraction over int64; arithmetic throws Overflow instead of wrapping.
struct Frac64 {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac64() = default;
  Frac64(std::int64_t n, std::int64_t d = 1) {
    if (d < 0) {
      if (n == INT64_MIN || d == INT64_MIN) throw Overflow{};
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  static std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
    return out;
  }
  static std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
    return out;
  }

  friend Frac64 operator*(const Frac64& a, const Frac64& b) {
    std::int64_t g1 = std::gcd(a.num, b.den), g2 = std::gcd(b.num, a.den);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return {mul(a.num / g1, b.num / g2), mul(a.den / g2, b.den / g1)};
  }
  friend Frac64 operator/(const Frac64& a, const Frac64& b) { return a * Frac64(b.den, b.num); }
  friend Frac64 operator-(const Frac64& a, const Frac64& b) {
    std::int64_t g = std::gcd(a.den, b.den);
    std::int64_t l = mul(a.den / g, b.den);
    return {sub(mul(a.num, l / a.den), mul(b.num, l / b.den)), l};
  }
  Frac64 operator-() const { return {sub(0, num), den}; }
  Frac64& operator*=(const Frac64& o) { return *this = *this * o; }
  bool operator!=(int v) const { return num != v || den != 1; }
};

BigInt to_integer(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt to_integer(const Frac64& r) { return r.num; }

template <typename Scalar>
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// target -= factor * source, both sorted by column.
template <typename Scalar>
void subtract_scaled(SparseRow<Scalar>& target, const Scalar& factor, const SparseRow<Scalar>& source) {
  SparseRow<Scalar> merged;
  merged.reserve(target.size() + source.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      merged.push_back(std::move(target[i++]));
    } else if (i == target.size() || source[j].first < target[i].first) {
      merged.emplace_back(source[j].first, -(factor * source[j].second));
      ++j;
    } else {
      Scalar v = target[i].second - factor * source[j].second;
      if (v != 0) merged.emplace_back(target[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  target = std::move(merged);
}

template <typename Scalar>
BigInt sparse_determinant(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<SparseRow<Scalar>> rows(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (m(r, c) != 0) rows[r].emplace_back(c, Scalar(m(r, c)));
    }
  }

  Scalar det(1);
  for (std::size_t i = 0; i < n; ++i) {
    // Rows at or below i have no entries left of column i.
    std::size_t pivot = n;
    for (std::size_t r = i; r < n; ++r) {
      if (!rows[r].empty() && rows[r].front().first == i) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return 0;
    if (pivot != i) {
      std::swap(rows[pivot], rows[i]);
      det = -det;
    }
    const Scalar& p = rows[i].front().second;
    det *= p;
    for (std::size_t r = i + 1; r < n; ++r) {
      if (rows[r].empty() || rows[r].front().first != i) continue;
      Scalar factor = rows[r].front().second / p;
      subtract_scaled(rows[r], factor, rows[i]);
    }
  }
  // Product of the pivots of an integer matrix is an integer.
  return to_integer(det);
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  try {
    return sparse_determinant<Frac64>(m);
  } catch (const Overflow&) {
    return sparse_determinant<Rational>(m);
  }
}

std::vector<std::int64_t> smith_diagonal(IntMatrix a) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t diag = std::min(rows, cols);
  std::vector<std::int64_t> d(diag, 0);

  auto swap_rows = [&](std::size_t x, std::size_t y) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(x, c), a(y, c));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, x), a(r, y));
  };

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows;
      std::size_t pc = cols;
      std::int64_t best = 0;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (a(r, c) == 0) continue;
          std::int64_t v = abs_checked(a(r, c));
          if (pr == rows || v < best) {
            best = v;
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) return d;  // trailing block is zero
      if (pr != t) swap_rows(pr, t);
      if (pc != t) swap_cols(pc, t);

      const std::int64_t p = a(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        std::int64_t q = a(r, t) / p;
        for (std::size_t c = t; c < cols; ++c) a(r, c) = checked_sub_mul(a(r, c), q, a(t, c));
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        std::int64_t q = a(t, c) / p;
        for (std::size_t r = t; r < rows; ++r) a(r, c) = checked_sub_mul(a(r, c), q, a(r, t));
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a(r, c) % p != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) a(t, cc) = checked_add(a(t, cc), a(r, cc));
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      d[t] = abs_checked(p);
      break;
    }
  }
  return d;
}

IntMatrix difference_congruence(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("congruence of a non-square matrix");
  IntMatrix out = m;
  const std::size_t n = m.rows();
  if (n < 2) return out;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t c = 0; c < n; ++c) out(i, c) = checked_sub_mul(out(i, c), 1, out(i + 1, c));
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t r = 0; r < n; ++r) out(r, j) = checked_sub_mul(out(r, j), 1, out(r, j + 1));
  return out;
}

}  // namespace obembed
