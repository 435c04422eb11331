#include "deltapart/biguint.hpp"

#include <algorithm>
#include <cassert>

namespace deltapart {

namespace {
constexpr std::uint64_t kLimbBase = std::uint64_t{1} << 32;
}

BigUint::BigUint(std::uint64_t value) {
  if (value == 0) return;
  limbs_.push_back(static_cast<std::uint32_t>(value));
  if (value >= kLimbBase) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
}

BigUint& BigUint::operator+=(const BigUint& other) {
  const std::size_t common = std::min(limbs_.size(), other.limbs_.size());
  if (limbs_.size() < other.limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < common; ++i) {
    const std::uint64_t sum = std::uint64_t{limbs_[i]} + other.limbs_[i] + carry;
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  for (std::size_t i = common; carry != 0 && i < limbs_.size(); ++i) {
    const std::uint64_t sum = std::uint64_t{limbs_[i]} + carry;
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::increment() {
  for (auto& limb : limbs_) {
    if (++limb != 0) return *this;
  }
  limbs_.push_back(1);
  return *this;
}

BigUint& BigUint::operator*=(std::uint32_t factor) {
  if (factor == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    const std::uint64_t product = std::uint64_t{limb} * factor + carry;
    limb = static_cast<std::uint32_t>(product);
    carry = product >> 32;
  }
  if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& other) const {
  if (limbs_.size() != other.limbs_.size())
    return limbs_.size() <=> other.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != other.limbs_[i]) return limbs_[i] <=> other.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::uint64_t BigUint::to_u64() const {
  assert(fits_u64());
  std::uint64_t value = 0;
  if (limbs_.size() > 1) value = std::uint64_t{limbs_[1]} << 32;
  if (!limbs_.empty()) value |= limbs_[0];
  return value;
}

std::string BigUint::to_string() const {
  if (limbs_.empty()) return "0";
  constexpr std::uint64_t kChunk = 1'000'000'000;  // 10^9 per division step
  std::vector<std::uint32_t> work = limbs_;
  std::string digits;
  while (!work.empty()) {
    std::uint64_t remainder = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      const std::uint64_t cur = (remainder << 32) | work[i];
      work[i] = static_cast<std::uint32_t>(cur / kChunk);
      remainder = cur % kChunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    for (int d = 0; d < 9; ++d) {
      digits.push_back(static_cast<char>('0' + remainder % 10));
      remainder /= 10;
      if (work.empty() && remainder == 0) break;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace deltapart
