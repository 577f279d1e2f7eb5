#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fpure/errors.hpp"

namespace fpure {

using Exponent = std::int64_t;

// Exponent ceiling; q = p^e is capped at the same bound.
inline constexpr Exponent kExponentCap = Exponent(1) << 31;

/// Exponent vector of fixed length (one slot per ring variable).
class Monomial {
public:
  explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0) {
    if (nvars < 1) throw InvalidArgument("monomial needs at least one variable");
  }
  explicit Monomial(std::vector<Exponent> exps);

  int nvars() const { return static_cast<int>(e_.size()); }
  Exponent operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<Exponent>& exponents() const { return e_; }

  Exponent total_degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool is_pure_power_of(int var) const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;
  Monomial pow(Exponent k) const;

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial variable(int nvars, int i, Exponent k = 1);
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  std::string to_string(const std::vector<std::string>& names) const;

private:
  void check_dim(const Monomial& o) const {
    if (e_.size() != o.e_.size())
      throw DimensionMismatch("monomials over different variable counts");
  }

  std::vector<Exponent> e_;
};

/// Fixed, order-independent key comparison for term maps: plain
/// lexicographic on the exponent vector.
struct MonomialKeyLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() < b.exponents();
  }
};

std::vector<std::string> default_variable_names(int nvars);

}  // namespace fpure
