#include "fpure/monomial.hpp"

#include <numeric>

namespace fpure {

namespace {
Exponent checked(Exponent e) {
  if (e < 0) throw InvalidArgument("negative exponent");
  if (e >= kExponentCap) throw ExponentOverflow("exponent exceeds 2^31 cap");
  return e;
}
}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : e_(std::move(exps)) {
  if (e_.empty()) throw InvalidArgument("monomial needs at least one variable");
  for (Exponent e : e_) checked(e);
}

Exponent Monomial::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), Exponent(0));
}

bool Monomial::is_one() const {
  for (Exponent e : e_)
    if (e != 0) return false;
  return true;
}

bool Monomial::is_squarefree() const {
  for (Exponent e : e_)
    if (e > 1) return false;
  return true;
}

bool Monomial::is_pure_power_of(int var) const {
  for (int i = 0; i < nvars(); ++i)
    if (i != var && e_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  check_dim(m);
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  check_dim(o);
  std::vector<Exponent> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = checked(e_[i] + o.e_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::divided_by(const Monomial& o) const {
  check_dim(o);
  std::vector<Exponent> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (o.e_[i] > e_[i]) throw InvalidArgument("monomial division is not exact");
    r[i] = e_[i] - o.e_[i];
  }
  return Monomial(std::move(r));
}

Monomial Monomial::pow(Exponent k) const {
  if (k < 0) throw InvalidArgument("negative monomial power");
  std::vector<Exponent> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] != 0 && k > (kExponentCap - 1) / e_[i])
      throw ExponentOverflow("monomial power exceeds 2^31 cap");
    r[i] = e_[i] * k;
  }
  return Monomial(std::move(r));
}

Monomial Monomial::variable(int nvars, int i, Exponent k) {
  if (i < 0 || i >= nvars) throw DimensionMismatch("variable index out of range");
  Monomial m(nvars);
  m.e_[static_cast<std::size_t>(i)] = checked(k);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  a.check_dim(b);
  std::vector<Exponent> r(a.e_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
  return Monomial(std::move(r));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  a.check_dim(b);
  std::vector<Exponent> r(a.e_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(a.e_[i], b.e_[i]);
  return Monomial(std::move(r));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  a.check_dim(b);
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != 0 && b.e_[i] != 0) return false;
  return true;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
  if (names.size() != e_.size())
    throw DimensionMismatch("variable name list has wrong length");
  if (is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
  }
  return out;
}

std::vector<std::string> default_variable_names(int nvars) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(nvars));
  for (int i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace fpure
