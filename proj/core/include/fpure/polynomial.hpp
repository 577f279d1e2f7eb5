#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpure/monomial.hpp"
#include "fpure/numeric.hpp"

namespace fpure {

/// Sparse multivariate polynomial over an exact coefficient field K
/// (Rational or GFp). Terms are kept in a map under the fixed key order, so
/// no zero coefficient is ever stored and printing is canonical. All
/// coefficients of one polynomial live in one field; GFp arithmetic itself
/// rejects mixed moduli.
template <class K>
class Polynomial {
public:
  using TermMap = std::map<Monomial, K, MonomialKeyLess>;

  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw InvalidArgument("polynomial needs at least one variable");
  }

  static Polynomial zero(int nvars) { return Polynomial(nvars); }

  static Polynomial term(const Monomial& m, const K& c) {
    Polynomial f(m.nvars());
    f.add_term(m, c);
    return f;
  }

  static Polynomial constant(int nvars, const K& c) {
    return term(Monomial::one(nvars), c);
  }

  int variable_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Characteristic shared by the coefficients; 0 for ℚ. Zero polynomials
  /// over GFp have lost the modulus and report 0 as well.
  std::uint32_t field_characteristic() const {
    return terms_.empty() ? 0 : characteristic(terms_.begin()->second);
  }

  void add_term(const Monomial& m, const K& c) {
    if (m.nvars() != nvars_) throw DimensionMismatch("term has wrong variable count");
    if (c.is_zero()) return;
    if (!terms_.empty() &&
        characteristic(terms_.begin()->second) != characteristic(c))
      throw FieldMismatch("coefficients from different fields in one polynomial");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const K* coefficient_of(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  /// Multiply by the single term c·m.
  Polynomial times_term(const Monomial& m, const K& c) const {
    Polynomial r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : terms_) r.add_term(mm * m, cc * c);
    return r;
  }

  Polynomial times_scalar(const K& c) const { return times_term(Monomial::one(nvars_), c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Exponent total_degree() const {
    Exponent d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;  // -1 for the zero polynomial
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    Exponent d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_)
      if (m.total_degree() != d) return false;
    return true;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_variable_names(nvars_)); }

private:
  void check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
      throw DimensionMismatch("polynomials over different variable counts");
    if (!terms_.empty() && !o.terms_.empty() &&
        characteristic(terms_.begin()->second) !=
            characteristic(o.terms_.begin()->second))
      throw FieldMismatch("polynomials over different fields");
  }

  int nvars_;
  TermMap terms_;
};

using PolyQ = Polynomial<Rational>;
using PolyFp = Polynomial<GFp>;

template <class K>
std::string Polynomial<K>::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Descending key order, so the print form is stable and parseable.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.to_string();
    bool negative = !cs.empty() && cs.front() == '-';
    if (negative) cs.erase(cs.begin());
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += cs;
    } else if (cs == "1") {
      out += m.to_string(names);
    } else {
      out += cs + "*" + m.to_string(names);
    }
  }
  return out;
}

/// Largest support monomial under the order, with its coefficient.
template <class K>
std::pair<Monomial, K> leading_term(const Polynomial<K>& f, const MonomialOrder& order) {
  if (f.is_zero()) throw InvalidArgument("leading term of the zero polynomial");
  auto it = f.terms().begin();
  auto best = it;
  for (++it; it != f.terms().end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

template <class K>
Monomial leading_monomial(const Polynomial<K>& f, const MonomialOrder& order) {
  return leading_term(f, order).first;
}

inline Rational exponent_in_field(Exponent e, const Rational&) {
  return Rational(mpz_class(static_cast<long>(e)));
}
inline GFp exponent_in_field(Exponent e, const GFp& sample) {
  return GFp::from_integer(e, sample.modulus());
}

/// Formal partial derivative; over GFp the exponent multiple reduces mod p,
/// which can kill terms.
template <class K>
Polynomial<K> partial_derivative(const Polynomial<K>& f, int var) {
  if (var < 0 || var >= f.variable_count())
    throw DimensionMismatch("derivative variable index out of range");
  Polynomial<K> r(f.variable_count());
  for (const auto& [m, c] : f.terms()) {
    Exponent e = m[var];
    if (e == 0) continue;
    K factor = exponent_in_field(e, c);
    if (factor.is_zero()) continue;
    r.add_term(m.divided_by(Monomial::variable(f.variable_count(), var)), c * factor);
  }
  return r;
}

/// Rational content factor: the unique positive rational a/b with
/// f = (a/b)·prim(f) and prim(f) primitive integral. Throws on zero input.
inline mpq_class rational_content(const PolyQ& f) {
  if (f.is_zero()) throw InvalidArgument("content of the zero polynomial");
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
  }
  mpq_class cont(num_gcd, den_lcm);
  cont.canonicalize();
  return cont;
}

/// Clear denominators and integer content, then reduce mod p. BadPrime when
/// p divides the denominator of the content factor (no primitive integral
/// model survives at p) or when nothing is left.
inline PolyFp reduce_coefficients_mod_p(const PolyQ& f, std::uint32_t p) {
  PrimeField field(p);
  if (f.is_zero()) throw BadPrime(p, "polynomial vanishes mod p");
  mpq_class cont = rational_content(f);
  if (mpz_divisible_ui_p(cont.get_den().get_mpz_t(), p))
    throw BadPrime(p, "p divides a denominator after clearing content");
  PolyFp r(f.variable_count());
  for (const auto& [m, c] : f.terms()) {
    mpq_class scaled = c.value() / cont;
    // scaled is integral: the content divides every coefficient
    mpz_class z = scaled.get_num();
    unsigned long res = mpz_fdiv_ui(z.get_mpz_t(), p);
    r.add_term(m, GFp(static_cast<std::uint32_t>(res), p));
  }
  return r;
}

}  // namespace fpure
