#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace obembed {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major integer matrix. Entries are int64; routines that can grow
// entries either work in exact big arithmetic or check for overflow.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix square(std::size_t n) { return IntMatrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  std::int64_t& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::int64_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Exact determinant by sparse Gaussian elimination over the rationals. Cost
// follows the fill pattern, so banded and arrow matrices are quadratic.
// The empty matrix has determinant 1.
BigInt determinant(const IntMatrix& m);

// Diagonal of the Smith normal form: min(rows, cols) non-negative entries
// d_1 | d_2 | ... with zeros trailing. Throws std::overflow_error if an
// intermediate entry leaves the int64 range.
std::vector<std::int64_t> smith_diagonal(IntMatrix m);

// Congruence D^T M D by the unimodular bidiagonal D with D_ii = 1,
// D_{i+1,i} = -1, i.e. row_i -= row_{i+1} then col_j -= col_{j+1}.
// Preserves the determinant and the cokernel of a square matrix; it turns
// matrices whose off-diagonal entries depend on min(i, j) into arrow form.
IntMatrix difference_congruence(const IntMatrix& m);

}  // namespace obembed
