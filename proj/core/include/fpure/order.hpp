#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fpure/monomial.hpp"

namespace fpure {

// Weight entries are clamped so a row dot an exponent vector stays in int64.
inline constexpr std::int64_t kWeightBound = std::int64_t(1) << 20;

/// Global monomial order given by an integer weight matrix: monomials are
/// compared lexicographically by their images under the rows. Construction
/// validates full column rank and that every variable exceeds 1 (first
/// nonzero weight in each column is positive), so every instance is a
/// genuine global order.
///
/// Presets:
///   lex(p)        rows e_{p0}, e_{p1}, ...
///   degrevlex(p)  the total-degree row, then -e_{pn}, ..., -e_{p1}
///   weighted(w)   a positive weight row with degrevlex tie-break
///   block(parts)  parts contribute rows in sequence; a lex part adds its
///                 unit rows, a degrevlex part adds the total-degree row of
///                 the full ring followed by -e_v for its variables in
///                 reverse priority order
class MonomialOrder {
public:
  enum class PartKind { lex, degrevlex };
  struct BlockPart {
    PartKind kind;
    std::vector<int> priority;  // variable indices, highest first
  };

  static MonomialOrder lex(const std::vector<int>& priority);
  static MonomialOrder degrevlex(const std::vector<int>& priority);
  static MonomialOrder lex(int nvars);        // identity priority 0 > 1 > ...
  static MonomialOrder degrevlex(int nvars);  // identity priority
  static MonomialOrder weighted(const std::vector<std::int64_t>& weights);
  static MonomialOrder block(int nvars, const std::vector<BlockPart>& parts);
  static MonomialOrder matrix(std::vector<std::vector<std::int64_t>> rows);

  /// Order on nvars()+1 variables that eliminates the appended variable:
  /// the new last variable is weighted first, then this order's rows.
  MonomialOrder append_eliminated_variable() const;

  int nvars() const { return nvars_; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }

  /// Matrix equality; this is also the Gröbner-cache key.
  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.rows_ == b.rows_;
  }

  /// Re-parseable description, e.g. "degrevlex(x1>x0>x3>x2)".
  std::string description(const std::vector<std::string>& names) const;
  std::string description() const;

private:
  MonomialOrder(int nvars, std::vector<std::vector<std::int64_t>> rows, std::string tag);
  void validate() const;

  int nvars_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::string tag_;  // preset shape with %0, %1 ... placeholders for names
};

}  // namespace fpure
