#include "firwb/scalar.hpp"

#include "firwb/error.hpp"

namespace firwb {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  // m is prime everywhere this is used
  return powmod(a, m - 2, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t mpz_mod_u(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class pm;
  mpz_import(pm.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pm.get_mpz_t());
  std::uint64_t out = 0;
  std::size_t count = 0;
  mpz_export(&out, &count, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return count ? out : 0;
}

std::uint64_t common_modulus(const Scalar& a, const Scalar& b) {
  if (a.modulus() && b.modulus() && a.modulus() != b.modulus()) {
    fail(ErrorKind::FieldMismatch, "scalars from different prime fields");
  }
  return a.modulus() ? a.modulus() : b.modulus();
}

}  // namespace

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorKind::ZeroDenominator, "rational literal with zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::modular(std::int64_t v, std::uint64_t p) {
  Scalar s;
  s.p_ = p;
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  s.r_ = static_cast<std::uint64_t>(r);
  return s;
}

Scalar Scalar::to_field(std::uint64_t p) const {
  if (p == 0 || p_ == p) return *this;
  if (p_ != 0) fail(ErrorKind::FieldMismatch, "scalars from different prime fields");
  std::uint64_t d = mpz_mod_u(q_.get_den(), p);
  if (d == 0) fail(ErrorKind::ZeroDenominator, "denominator divisible by the characteristic");
  Scalar s;
  s.p_ = p;
  s.r_ = mulmod(mpz_mod_u(q_.get_num(), p), invmod(d, p), p);
  return s;
}

bool Scalar::reduce_mod(std::uint64_t P, std::uint64_t& out) const {
  if (p_) {
    if (p_ != P) return false;
    out = r_;
    return true;
  }
  std::uint64_t d = mpz_mod_u(q_.get_den(), P);
  if (d == 0) return false;
  out = mulmod(mpz_mod_u(q_.get_num(), P), invmod(d, P), P);
  return true;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_) {
    s.r_ = r_ ? p_ - r_ : 0;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) fail(ErrorKind::ZeroDenominator, "inverse of zero");
  Scalar s = *this;
  if (p_) {
    s.r_ = invmod(r_, p_);
  } else {
    s.q_ = 1 / q_;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint64_t p = common_modulus(a, b);
  if (!p) return Scalar(mpq_class(a.q_ + b.q_));
  Scalar x = a.to_field(p), y = b.to_field(p);
  x.r_ = (x.r_ + y.r_) % p;
  return x;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint64_t p = common_modulus(a, b);
  if (!p) return Scalar(mpq_class(a.q_ * b.q_));
  Scalar x = a.to_field(p), y = b.to_field(p);
  x.r_ = mulmod(x.r_, y.r_, p);
  return x;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  std::uint64_t p = common_modulus(a, b);
  if (!p) {
    if (sgn(b.q_) == 0) fail(ErrorKind::ZeroDenominator, "division by zero");
    return Scalar(mpq_class(a.q_ / b.q_));
  }
  return a.to_field(p) * b.to_field(p).inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
  std::uint64_t p = a.p_ ? a.p_ : b.p_;
  if (a.p_ && b.p_) return false;
  return a.to_field(p).r_ == b.to_field(p).r_;
}

std::string Scalar::str() const {
  if (p_) return std::to_string(r_);
  return q_.get_str();
}

}  // namespace firwb
