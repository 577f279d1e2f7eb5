#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fpure/order.hpp"
#include "fpure/polynomial.hpp"

namespace fpure {

struct GroebnerOptions {
  std::uint64_t pair_budget = 50000;
};

/// Reduced Gröbner basis: monic, interreduced, elements ascending under the
/// order. For a fixed (ideal, order) this form is unique.
template <class K>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial<K>> elements;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lm;
    lm.reserve(elements.size());
    for (const auto& g : elements) lm.push_back(leading_monomial(g, order));
    return lm;
  }
};

/// Monomial ideal by its minimal (antichain) generators.
class MonomialIdeal {
public:
  MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
    for (auto& m : gens) {
      if (m.nvars() != nvars) throw DimensionMismatch("monomial generator dimension");
      bool redundant = false;
      for (const auto& g : min_gens_)
        if (g.divides(m)) { redundant = true; break; }
      if (redundant) continue;
      std::erase_if(min_gens_, [&](const Monomial& g) { return m.divides(g); });
      min_gens_.push_back(m);
    }
    std::sort(min_gens_.begin(), min_gens_.end(),
              [](const Monomial& a, const Monomial& b) { return MonomialKeyLess()(a, b); });
  }

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& minimal_generators() const { return min_gens_; }

  bool contains(const Monomial& m) const {
    for (const auto& g : min_gens_)
      if (g.divides(m)) return true;
    return false;
  }

  bool squarefree() const {
    for (const auto& g : min_gens_)
      if (!g.is_squarefree()) return false;
    return true;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.min_gens_ == b.min_gens_;
  }

private:
  int nvars_;
  std::vector<Monomial> min_gens_;
};

/// Ideal as a generator list plus a per-order cache of reduced bases. The
/// cache is write-once per key and shared between copies; values are
/// immutable once published.
template <class K>
class Ideal {
public:
  Ideal(int nvars, std::vector<Polynomial<K>> gens) : nvars_(nvars) {
    gens_.reserve(gens.size());
    std::uint32_t charac = 0;
    bool have = false;
    for (auto& g : gens) {
      if (g.variable_count() != nvars)
        throw DimensionMismatch("generator has wrong variable count");
      if (g.is_zero()) continue;  // zero generators contribute nothing
      if (!have) {
        charac = g.field_characteristic();
        have = true;
      } else if (g.field_characteristic() != charac) {
        throw FieldMismatch("generators over different fields");
      }
      gens_.push_back(std::move(g));
    }
    cache_ = std::make_shared<Cache>();
  }

  int variable_count() const { return nvars_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  std::uint32_t field_characteristic() const {
    return gens_.empty() ? 0 : gens_.front().field_characteristic();
  }

  /// Reduced Gröbner basis under the order, computed once per order.
  std::shared_ptr<const GroebnerBasis<K>> groebner(const MonomialOrder& order,
                                                   const GroebnerOptions& opts = {}) const;

  void seed_cache(std::shared_ptr<const GroebnerBasis<K>> basis) const {
    std::lock_guard<std::mutex> lock(cache_->m);
    cache_->map.emplace(basis->order.rows(), std::move(basis));
  }

private:
  struct Cache {
    std::mutex m;
    std::map<std::vector<std::vector<std::int64_t>>,
             std::shared_ptr<const GroebnerBasis<K>>>
        map;
  };

  int nvars_;
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

using IdealQ = Ideal<Rational>;
using IdealFp = Ideal<GFp>;

}  // namespace fpure
