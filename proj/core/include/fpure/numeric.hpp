#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fpure/errors.hpp"

namespace fpure {

/// Exact rational coefficient over ℚ. Always stored reduced with a positive
/// denominator (mpq_class keeps the canonical form for us).
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational from_string(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& value() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  Rational inverse() const;

  std::string to_string() const;

private:
  mpq_class v_;
};

/// Prime-field element: residue in [0, p). Arithmetic between elements of
/// distinct moduli throws FieldMismatch.
class GFp {
public:
  GFp() : v_(0), p_(0) {}
  GFp(std::uint32_t residue, std::uint32_t p) : v_(residue % p), p_(p) {}

  static GFp from_integer(std::int64_t n, std::uint32_t p);

  std::uint32_t residue() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  GFp operator-() const { return GFp(v_ == 0 ? 0 : p_ - v_, p_); }
  GFp& operator+=(const GFp& o);
  GFp& operator-=(const GFp& o);
  GFp& operator*=(const GFp& o);
  GFp& operator/=(const GFp& o);

  friend GFp operator+(GFp a, const GFp& b) { return a += b; }
  friend GFp operator-(GFp a, const GFp& b) { return a -= b; }
  friend GFp operator*(GFp a, const GFp& b) { return a *= b; }
  friend GFp operator/(GFp a, const GFp& b) { return a /= b; }
  friend bool operator==(const GFp& a, const GFp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

  GFp inverse() const;
  GFp pow(std::uint64_t k) const;

  std::string to_string() const { return std::to_string(v_); }

private:
  void check_same_field(const GFp& o) const;

  std::uint32_t v_;
  std::uint32_t p_;
};

/// Field descriptor for 𝔽_p; primality is validated exactly once here.
class PrimeField {
public:
  explicit PrimeField(std::uint32_t p);
  std::uint32_t modulus() const { return p_; }
  GFp element(std::int64_t n) const { return GFp::from_integer(n, p_); }
  GFp zero() const { return GFp(0, p_); }
  GFp one() const { return GFp(1, p_); }

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi);

// Coefficient-field glue used by the templated polynomial layer.
inline std::uint32_t characteristic(const Rational&) { return 0; }
inline std::uint32_t characteristic(const GFp& c) { return c.modulus(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline GFp one_like(const GFp& c) { return GFp(1, c.modulus()); }
std::string field_name(const Rational&);
std::string field_name(const GFp&);

/// Deterministic RNG: thin wrapper so every consumer samples the
/// mt19937_64 stream the same way regardless of platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  std::uint64_t next() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

}  // namespace fpure
