#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qfv {

// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
// Limbs are little-endian with no trailing zero limb; zero has no limbs
// and sign 0.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals
  static BigInt from_string(const std::string& s);

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  // Truncated division (C semantics): quotient rounds toward zero,
  // remainder has the sign of the dividend. |r| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  BigInt operator/(const BigInt& b) const;
  BigInt operator%(const BigInt& b) const;

  // Floor division: q = floor(a/b); remainder a - q*b lies in [0, |b|) for b > 0.
  static BigInt floordiv(const BigInt& a, const BigInt& b);

  static BigInt gcd(BigInt a, BigInt b);  // always >= 0

  std::strong_ordering operator<=>(const BigInt& o) const;
  bool operator==(const BigInt& o) const = default;

  std::string to_string() const;

  // Exact conversion; throws std::overflow_error if out of range.
  long long to_ll() const;
  bool fits_ll() const;

 private:
  int sign_ = 0;  // -1, 0, +1
  std::vector<uint32_t> limbs_;

  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
  void trim();
};

}  // namespace qfv
