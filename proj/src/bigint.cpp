#include "ybe/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybe {

BigUint::BigUint(std::uint64_t v) {
  limbs_.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator*=(const BigUint& other) {
  std::vector<std::uint32_t> out(limbs_.size() + other.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < other.limbs_.size(); ++j) {
      std::uint64_t cur = out[i + j] +
                          std::uint64_t(limbs_[i]) * other.limbs_[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out[i + other.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  limbs_ = std::move(out);
  trim();
  return *this;
}

BigUint BigUint::pow(const BigUint& base, unsigned exp) {
  BigUint result(1);
  BigUint b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return result;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() <=> b.limbs_.size();
  for (std::size_t i = a.limbs_.size(); i-- > 0;)
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
  return std::strong_ordering::equal;
}

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value too large");
  std::uint64_t v = limbs_[0];
  if (limbs_.size() == 2) v |= std::uint64_t(limbs_[1]) << 32;
  return v;
}

std::string BigUint::to_string() const {
  std::vector<std::uint32_t> work(limbs_.rbegin(), limbs_.rend());
  std::string out;
  // repeated division by 10^9, most significant limb first
  while (!work.empty()) {
    std::uint64_t rem = 0;
    std::vector<std::uint32_t> quot;
    for (std::uint32_t limb : work) {
      std::uint64_t cur = (rem << 32) | limb;
      std::uint32_t q = static_cast<std::uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
      if (!quot.empty() || q) quot.push_back(q);
    }
    std::string chunk = std::to_string(rem);
    if (!quot.empty()) chunk.insert(0, 9 - chunk.size(), '0');
    out.insert(0, chunk);
    work = std::move(quot);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ybe
