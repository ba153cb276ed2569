#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "obembed/error.hpp"

namespace obembed {

// Vector over Z/2, 0-based storage. Used for the sphere-twist group
// (Z/2)^n and for parity images of twist words.
class Z2Vector {
 public:
  Z2Vector() = default;
  explicit Z2Vector(std::size_t n) : bits_(n, 0) {}

  // Indicator of a set of 1-based indices.
  static Z2Vector indicator(std::size_t n, std::span<const int> members) {
    Z2Vector v(n);
    for (int m : members) {
      if (m < 1 || static_cast<std::size_t>(m) > n) {
        throw DimensionMismatch("index " + std::to_string(m) +
                                " outside 1.." + std::to_string(n));
      }
      v.flip(static_cast<std::size_t>(m - 1));
    }
    return v;
  }

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_.at(i) != 0; }
  void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
  void flip(std::size_t i) { bits_.at(i) ^= 1; }

  Z2Vector& operator+=(const Z2Vector& other) {
    if (other.size() != size()) {
      throw DimensionMismatch("Z2 vectors of different length");
    }
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
    return *this;
  }
  friend Z2Vector operator+(Z2Vector a, const Z2Vector& b) { return a += b; }

  bool is_zero() const {
    for (auto b : bits_)
      if (b) return false;
    return true;
  }
  std::size_t weight() const {
    std::size_t w = 0;
    for (auto b : bits_) w += b;
    return w;
  }

  std::vector<int> to_ints() const { return {bits_.begin(), bits_.end()}; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (i) s += ',';
      s += bits_[i] ? '1' : '0';
    }
    return s + ")";
  }

  friend bool operator==(const Z2Vector&, const Z2Vector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace obembed
