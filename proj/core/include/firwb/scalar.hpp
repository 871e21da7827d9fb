#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace firwb {

/// Element of the base field: the rationals (modulus 0) or a prime field
/// F_p. Values built from integer literals carry modulus 0 and are coerced
/// into F_p when combined with a prime-field value.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class v) : q_(std::move(v)) { q_.canonicalize(); }

  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar modular(std::int64_t v, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  /// Rational value; only meaningful for modulus 0.
  const mpq_class& rational_value() const { return q_; }
  /// Residue in [0, p); only meaningful for a prime modulus.
  std::uint64_t residue() const { return r_; }

  /// Reduce into F_p (identity if already there). Throws on a denominator
  /// divisible by p.
  Scalar to_field(std::uint64_t p) const;

  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Value in F_P for a large auxiliary prime P; false if not representable.
  bool reduce_mod(std::uint64_t P, std::uint64_t& out) const;

  /// "3", "-1/2"; prime-field values print their residue.
  std::string str() const;
  bool is_negative() const { return p_ == 0 && sgn(q_) < 0; }

 private:
  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint64_t p_ = 0;
};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
bool is_prime(std::uint64_t n);

}  // namespace firwb
