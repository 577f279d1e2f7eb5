#include "fpure/numeric.hpp"

namespace fpure {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (sgn(den) == 0) throw InvalidArgument("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw InvalidArgument("bad rational literal: " + text);
  q.canonicalize();
  return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InvalidArgument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

std::string Rational::to_string() const { return v_.get_str(); }

void GFp::check_same_field(const GFp& o) const {
  if (p_ != o.p_)
    throw FieldMismatch("GF(" + std::to_string(p_) + ") vs GF(" + std::to_string(o.p_) + ")");
}

GFp GFp::from_integer(std::int64_t n, std::uint32_t p) {
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return GFp(static_cast<std::uint32_t>(r), p);
}

GFp& GFp::operator+=(const GFp& o) {
  check_same_field(o);
  std::uint64_t s = std::uint64_t(v_) + o.v_;
  if (s >= p_) s -= p_;
  v_ = static_cast<std::uint32_t>(s);
  return *this;
}

GFp& GFp::operator-=(const GFp& o) {
  check_same_field(o);
  v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t(v_) + p_ - o.v_);
  return *this;
}

GFp& GFp::operator*=(const GFp& o) {
  check_same_field(o);
  v_ = static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_);
  return *this;
}

GFp& GFp::operator/=(const GFp& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

GFp GFp::inverse() const {
  if (v_ == 0) throw InvalidArgument("inverse of zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on (v, p)
  std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b; b = t;
    t = x0 - q * x1;
    x0 = x1; x1 = t;
  }
  std::int64_t r = x0 % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return GFp(static_cast<std::uint32_t>(r), p_);
}

GFp GFp::pow(std::uint64_t k) const {
  GFp acc(1, p_), base = *this;
  while (k != 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw BadPrime(p, "modulus is not prime");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> primes_in_range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = lo; p <= hi; ++p)
    if (is_prime(p)) out.push_back(static_cast<std::uint32_t>(p));
  return out;
}

std::string field_name(const Rational&) { return "QQ"; }
std::string field_name(const GFp& c) { return "GF(" + std::to_string(c.modulus()) + ")"; }

}  // namespace fpure
