#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ybe {

/// Unsigned arbitrary-precision integer, just big enough for group orders
/// (wreath towers square the order at every level, so 64 bits run out fast).
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  BigUint(std::uint64_t v);  // NOLINT: implicit by design

  BigUint& operator*=(const BigUint& other);
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }
  BigUint& operator*=(std::uint64_t v) { return *this *= BigUint(v); }

  static BigUint pow(const BigUint& base, unsigned exp);

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

  bool fits_u64() const { return limbs_.size() <= 2; }
  std::uint64_t to_u64() const;  // throws if the value does not fit
  std::string to_string() const;

 private:
  // base 2^32 little-endian digits stored in uint32; no leading zeros
  // except for the single zero limb of the value 0
  std::vector<std::uint32_t> limbs_;
  void trim();
};

}  // namespace ybe
