#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace deltapart {

// Unsigned arbitrary-precision integer, base 2^32 limbs, little-endian.
// Supports exactly the arithmetic the counting paths need: addition,
// increment, multiplication by a machine word, comparison and decimal
// rendering. Partition counts outgrow 64 bits quickly (the number of
// unrestricted partitions of 26 elements already does), so counters that
// face the user are kept exact here instead of wrapping.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t value);

  BigUint& operator+=(const BigUint& other);
  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }

  // Adds 1; cheaper than building a temporary BigUint per solution.
  BigUint& increment();

  BigUint& operator*=(std::uint32_t factor);
  friend BigUint operator*(BigUint lhs, std::uint32_t rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool operator==(const BigUint& other) const = default;
  std::strong_ordering operator<=>(const BigUint& other) const;

  bool is_zero() const { return limbs_.empty(); }
  bool fits_u64() const { return limbs_.size() <= 2; }
  // Precondition: fits_u64().
  std::uint64_t to_u64() const;

  std::string to_string() const;

 private:
  std::vector<std::uint32_t> limbs_;  // empty means zero; no trailing zero limb
};

}  // namespace deltapart
