#pragma once

#include <vector>

#include "fpure/polynomial.hpp"

namespace fpure {

/// Invertible linear change of variables. Row i of the matrix is the image
/// of variable i, so applying the substitution replaces X_i by
/// Σ_j matrix[i][j]·X_j. The exact inverse is computed once on construction;
/// a singular matrix is rejected there.
template <class K>
class LinearSubstitution {
public:
  LinearSubstitution(int nvars, std::vector<std::vector<K>> matrix)
      : nvars_(nvars), m_(std::move(matrix)) {
    if (static_cast<int>(m_.size()) != nvars_)
      throw DimensionMismatch("substitution matrix must be square");
    for (const auto& row : m_)
      if (static_cast<int>(row.size()) != nvars_)
        throw DimensionMismatch("substitution matrix must be square");
    inv_ = invert(m_);
  }

  static LinearSubstitution identity(int nvars, const K& one) {
    std::vector<std::vector<K>> m(static_cast<std::size_t>(nvars),
                                  std::vector<K>(static_cast<std::size_t>(nvars), one - one));
    for (int i = 0; i < nvars; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = one;
    return LinearSubstitution(nvars, std::move(m));
  }

  int nvars() const { return nvars_; }
  const std::vector<std::vector<K>>& matrix() const { return m_; }

  LinearSubstitution inverse() const {
    LinearSubstitution s(*this);
    std::swap(s.m_, s.inv_);
    return s;
  }

  Polynomial<K> image_of(int var) const {
    Polynomial<K> r(nvars_);
    for (int j = 0; j < nvars_; ++j)
      r.add_term(Monomial::variable(nvars_, j),
                 m_[static_cast<std::size_t>(var)][static_cast<std::size_t>(j)]);
    return r;
  }

  Polynomial<K> apply(const Polynomial<K>& f) const {
    if (f.variable_count() != nvars_)
      throw DimensionMismatch("substitution does not match polynomial's variables");
    Polynomial<K> out(nvars_);
    for (const auto& [m, c] : f.terms()) {
      Polynomial<K> prod = Polynomial<K>::constant(nvars_, c);
      for (int i = 0; i < nvars_; ++i) {
        Polynomial<K> img = image_of(i);
        for (Exponent k = 0; k < m[i]; ++k) prod = prod * img;
      }
      out += prod;
    }
    return out;
  }

private:
  static std::vector<std::vector<K>> invert(const std::vector<std::vector<K>>& a);

  int nvars_;
  std::vector<std::vector<K>> m_;
  std::vector<std::vector<K>> inv_;
};

template <class K>
std::vector<std::vector<K>> LinearSubstitution<K>::invert(
    const std::vector<std::vector<K>>& a) {
  const int n = static_cast<int>(a.size());
  auto work = a;
  std::vector<std::vector<K>> inv;
  // identity of the right field, built from entries of a
  K one = one_like(a[0][0]);
  K zero = one - one;
  inv.assign(static_cast<std::size_t>(n), std::vector<K>(static_cast<std::size_t>(n), zero));
  for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = one;

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (!work[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw SingularMatrix("substitution matrix is singular");
    std::swap(work[static_cast<std::size_t>(pivot)], work[static_cast<std::size_t>(col)]);
    std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
    K d = work[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)].inverse();
    for (int j = 0; j < n; ++j) {
      work[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= d;
      inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      K f = work[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        work[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * work[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
        inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      }
    }
  }
  return inv;
}

template <class K>
Polynomial<K> apply_substitution(const Polynomial<K>& f, const LinearSubstitution<K>& s) {
  return s.apply(f);
}

}  // namespace fpure
