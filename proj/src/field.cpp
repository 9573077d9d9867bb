#include "qfv/field.hpp"

#include <stdexcept>

namespace qfv {

namespace {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

uint32_t fp_reduce(const Rational& q, uint32_t p) {
  BigInt pp(static_cast<long long>(p));
  BigInt n = q.num() % pp;
  if (n.sign() < 0) n += pp;
  BigInt d = q.den() % pp;
  uint32_t nn = static_cast<uint32_t>(n.to_ll());
  uint32_t dd = static_cast<uint32_t>(d.to_ll());
  if (dd == 0) throw std::domain_error("FieldValue: denominator divisible by " + std::to_string(p));
  return static_cast<uint32_t>(static_cast<uint64_t>(nn) * fp_inverse(dd, p) % p);
}

}  // namespace

uint32_t fp_inverse(uint32_t a, uint32_t p) {
  if (a % p == 0) throw std::domain_error("F_p: inverse of zero");
  // extended Euclid
  int64_t t = 0, new_t = 1;
  int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<uint32_t>(t);
}

FieldDesc FieldDesc::prime(uint32_t p) {
  if (!is_prime_u32(p) || p >= (1u << 31))
    throw std::invalid_argument("FieldDesc: " + std::to_string(p) + " is not a prime < 2^31");
  return {p};
}

FieldDesc FieldDesc::parse(const std::string& name) {
  if (name == "Q") return rationals();
  if (name.size() >= 2 && name[0] == 'F') {
    unsigned long v = std::stoul(name.substr(1));
    return prime(static_cast<uint32_t>(v));
  }
  throw std::invalid_argument("FieldDesc: unknown field '" + name + "'");
}

FieldValue::FieldValue(FieldDesc f, Rational q) : field_(f) {
  if (f.is_rational()) {
    rat_ = std::move(q);
  } else {
    rep_ = fp_reduce(q, f.p);
  }
}

FieldValue FieldValue::zero(FieldDesc f) { return FieldValue(f, Rational(0)); }
FieldValue FieldValue::one(FieldDesc f) { return FieldValue(f, Rational(1)); }

FieldValue FieldValue::parse(FieldDesc f, const std::string& s) {
  return FieldValue(f, Rational::from_string(s));
}

bool FieldValue::is_zero() const {
  return field_.is_rational() ? rat_.is_zero() : rep_ == 0;
}

bool FieldValue::is_one() const {
  return field_.is_rational() ? rat_.is_one() : rep_ == 1;
}

void FieldValue::require_same(const FieldValue& a, const FieldValue& b) {
  if (!(a.field_ == b.field_))
    throw std::domain_error("FieldValue: mixed-field arithmetic (" + a.field_.name() +
                            " vs " + b.field_.name() + ")");
}

FieldValue FieldValue::operator-() const {
  FieldValue out = *this;
  if (field_.is_rational())
    out.rat_ = -rat_;
  else
    out.rep_ = rep_ == 0 ? 0 : field_.p - rep_;
  return out;
}

FieldValue FieldValue::inverse() const {
  FieldValue out = *this;
  if (field_.is_rational())
    out.rat_ = rat_.inverse();
  else
    out.rep_ = fp_inverse(rep_, field_.p);
  return out;
}

FieldValue operator+(const FieldValue& a, const FieldValue& b) {
  FieldValue::require_same(a, b);
  FieldValue out = a;
  if (a.field_.is_rational())
    out.rat_ = a.rat_ + b.rat_;
  else
    out.rep_ = static_cast<uint32_t>((static_cast<uint64_t>(a.rep_) + b.rep_) % a.field_.p);
  return out;
}

FieldValue operator-(const FieldValue& a, const FieldValue& b) { return a + (-b); }

FieldValue operator*(const FieldValue& a, const FieldValue& b) {
  FieldValue::require_same(a, b);
  FieldValue out = a;
  if (a.field_.is_rational())
    out.rat_ = a.rat_ * b.rat_;
  else
    out.rep_ = static_cast<uint32_t>(static_cast<uint64_t>(a.rep_) * b.rep_ % a.field_.p);
  return out;
}

FieldValue operator/(const FieldValue& a, const FieldValue& b) { return a * b.inverse(); }

bool FieldValue::operator==(const FieldValue& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.is_rational() ? rat_ == o.rat_ : rep_ == o.rep_;
}

std::string FieldValue::to_string() const {
  return field_.is_rational() ? rat_.to_string() : std::to_string(rep_);
}

}  // namespace qfv
