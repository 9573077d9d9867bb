#pragma once

#include <cstdint>
#include <string>

#include "qfv/rational.hpp"

namespace qfv {

// Coefficient field of a computation: the rationals (p == 0) or a prime
// field F_p with p < 2^31. Prime fields are exhaustive-oracle territory;
// the rationals carry the characteristic-zero checks.
struct FieldDesc {
  uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const FieldDesc&) const = default;
  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
  static FieldDesc rationals() { return {0}; }
  static FieldDesc prime(uint32_t p);       // validates primality
  static FieldDesc parse(const std::string& name);  // "Q" or "F<p>"
};

// A single field element tagged with its field. Mixing fields throws.
class FieldValue {
 public:
  FieldValue() = default;  // rational zero
  explicit FieldValue(Rational q) : field_{0}, rat_(std::move(q)) {}
  FieldValue(FieldDesc f, Rational q);   // reduces mod p if f is prime
  static FieldValue zero(FieldDesc f);
  static FieldValue one(FieldDesc f);
  static FieldValue of_fp(uint32_t p, uint64_t v) { return FieldValue(FieldDesc{p}, Rational(static_cast<long long>(v % p))); }
  static FieldValue parse(FieldDesc f, const std::string& s);

  FieldDesc field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Valid only in the respective representation.
  const Rational& rat() const { return rat_; }
  uint32_t fp() const { return rep_; }

  FieldValue operator-() const;
  FieldValue inverse() const;  // throws std::domain_error on zero
  friend FieldValue operator+(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator-(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator*(const FieldValue& a, const FieldValue& b);
  friend FieldValue operator/(const FieldValue& a, const FieldValue& b);
  FieldValue& operator*=(const FieldValue& o) { return *this = *this * o; }

  bool operator==(const FieldValue& o) const;
  bool operator!=(const FieldValue& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldDesc field_;
  Rational rat_;       // used when field_.is_rational()
  uint32_t rep_ = 0;   // used when field_ is prime
  static void require_same(const FieldValue& a, const FieldValue& b);
};

uint32_t fp_inverse(uint32_t a, uint32_t p);

}  // namespace qfv
