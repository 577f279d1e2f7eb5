#pragma once

#include <algorithm>
#include <set>
#include <tuple>

#include "fpure/ideal.hpp"

namespace fpure {

namespace detail {

/// Terms of one polynomial keyed descending under a monomial order, so the
/// leading term is begin(). Working form for division loops.
template <class K>
struct OrderedTerms {
  struct Greater {
    const MonomialOrder* ord;
    bool operator()(const Monomial& a, const Monomial& b) const { return ord->greater(a, b); }
  };
  using Map = std::map<Monomial, K, Greater>;

  OrderedTerms(const Polynomial<K>& f, const MonomialOrder& ord)
      : map(Greater{&ord}) {
    for (const auto& [m, c] : f.terms()) map.emplace(m, c);
  }

  bool empty() const { return map.empty(); }

  void axpy(const Monomial& shift, const K& scale, const Polynomial<K>& g) {
    for (const auto& [m, c] : g.terms()) {
      Monomial mm = m * shift;
      K cc = c * scale;
      auto [it, inserted] = map.emplace(mm, cc);
      if (!inserted) {
        it->second += cc;
        if (it->second.is_zero()) map.erase(it);
      }
    }
  }

  Polynomial<K> to_polynomial(int nvars) const {
    Polynomial<K> f(nvars);
    for (const auto& [m, c] : map) f.add_term(m, c);
    return f;
  }

  Map map;
};

template <class K>
void scale_normalize(Polynomial<K>& f, const MonomialOrder& ord) {
  if (f.is_zero()) return;
  if constexpr (std::is_same_v<K, Rational>) {
    // primitive integral form with positive leading coefficient
    mpq_class cont = rational_content(f);
    if (leading_term(f, ord).second.sign() < 0) cont = -cont;
    f = f.times_scalar(Rational(cont).inverse());
  } else {
    f = f.times_scalar(leading_term(f, ord).second.inverse());
  }
}

template <class K>
void make_monic(Polynomial<K>& f, const MonomialOrder& ord) {
  if (f.is_zero()) return;
  K lc = leading_term(f, ord).second;
  if (!lc.is_one()) f = f.times_scalar(lc.inverse());
}

/// Full division: every remainder monomial ends up reducible by no divisor
/// leading monomial. No rescaling, so f - result lies in (divisors).
template <class K>
Polynomial<K> divide_full(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors,
                          const MonomialOrder& ord, Polynomial<K>* quotient_single = nullptr) {
  OrderedTerms<K> h(f, ord);
  Polynomial<K> r(f.variable_count());
  std::vector<std::pair<Monomial, K>> lead;
  lead.reserve(divisors.size());
  for (const auto& g : divisors) lead.push_back(leading_term(g, ord));
  while (!h.empty()) {
    const auto& [m, c] = *h.map.begin();
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      if (!lead[k].first.divides(m)) continue;
      Monomial shift = m.divided_by(lead[k].first);
      K factor = c / lead[k].second;
      if (quotient_single) quotient_single->add_term(shift, factor);
      h.axpy(shift, -factor, divisors[k]);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(m, c);
      h.map.erase(h.map.begin());
    }
  }
  return r;
}

/// Reduce only while the leading monomial is divisible; tail untouched.
/// Content-normalizes along the way over ℚ to keep coefficients small.
template <class K>
Polynomial<K> top_reduce(Polynomial<K> s, const std::vector<Polynomial<K>>& basis,
                         const MonomialOrder& ord) {
  while (!s.is_zero()) {
    auto [m, c] = leading_term(s, ord);
    bool hit = false;
    for (const auto& g : basis) {
      auto [gm, gc] = leading_term(g, ord);
      if (!gm.divides(m)) continue;
      s -= g.times_term(m.divided_by(gm), c / gc);
      if constexpr (std::is_same_v<K, Rational>) {
        if (!s.is_zero()) scale_normalize(s, ord);
      }
      hit = true;
      break;
    }
    if (!hit) break;
  }
  return s;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           const MonomialOrder& ord) {
  auto [fm, fc] = leading_term(f, ord);
  auto [gm, gc] = leading_term(g, ord);
  Monomial L = Monomial::lcm(fm, gm);
  // cross-multiplied form stays denominator-free over ℚ
  return f.times_term(L.divided_by(fm), gc) - g.times_term(L.divided_by(gm), fc);
}

/// Buchberger with normal pair selection (smallest lcm degree first),
/// the coprimality criterion and the chain criterion, then interreduction.
template <class K>
std::vector<Polynomial<K>> reduced_basis_of(std::vector<Polynomial<K>> gens,
                                            const MonomialOrder& ord,
                                            const GroebnerOptions& opts) {
  std::vector<Polynomial<K>> basis;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    scale_normalize(g, ord);
    if (std::find(basis.begin(), basis.end(), g) == basis.end())
      basis.push_back(std::move(g));
  }
  if (basis.empty()) return basis;

  using QueueKey = std::tuple<Exponent, std::size_t, std::size_t>;
  std::set<QueueKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto lm = [&](std::size_t i) { return leading_monomial(basis[i], ord); };
  auto push_pairs = [&](std::size_t t) {
    for (std::size_t i = 0; i < t; ++i)
      queue.emplace(Monomial::lcm(lm(i), lm(t)).total_degree(), i, t);
  };
  for (std::size_t t = 1; t < basis.size(); ++t) push_pairs(t);

  std::uint64_t steps = 0;
  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    treated.emplace(i, j);
    Monomial li = lm(i), lj = lm(j);
    if (Monomial::coprime(li, lj)) continue;
    Monomial L = Monomial::lcm(li, lj);
    bool chained = false;
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == i || k == j) continue;
      if (!lm(k).divides(L)) continue;
      auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
      chained = treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second});
    }
    if (chained) continue;
    if (++steps > opts.pair_budget) throw BudgetExceeded(opts.pair_budget);
    Polynomial<K> h = top_reduce(s_polynomial(basis[i], basis[j], ord), basis, ord);
    if (h.is_zero()) continue;
    scale_normalize(h, ord);
    basis.push_back(std::move(h));
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop elements whose leading monomial another one divides
  std::vector<bool> dropped(basis.size(), false);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && !dropped[i]; ++j) {
      if (i == j || dropped[j]) continue;
      Monomial mi = lm(i), mj = lm(j);
      if (mj.divides(mi) && (mi != mj || j < i)) dropped[i] = true;
    }
  }
  std::vector<Polynomial<K>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!dropped[i]) minimal.push_back(std::move(basis[i]));

  // interreduce tails until stable
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial<K>> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      if (others.empty()) break;
      Polynomial<K> red = divide_full(minimal[i], others, ord);
      scale_normalize(red, ord);
      if (red != minimal[i]) {
        minimal[i] = std::move(red);
        changed = true;
      }
    }
  }
  for (auto& g : minimal) make_monic(g, ord);
  std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
    return ord.less(leading_monomial(a, ord), leading_monomial(b, ord));
  });
  return minimal;
}

}  // namespace detail

template <class K>
std::shared_ptr<const GroebnerBasis<K>> Ideal<K>::groebner(const MonomialOrder& order,
                                                           const GroebnerOptions& opts) const {
  if (order.nvars() != nvars_)
    throw DimensionMismatch("order does not match the ideal's variable count");
  {
    std::lock_guard<std::mutex> lock(cache_->m);
    auto it = cache_->map.find(order.rows());
    if (it != cache_->map.end()) return it->second;
  }
  auto basis = std::make_shared<GroebnerBasis<K>>(
      GroebnerBasis<K>{order, detail::reduced_basis_of(gens_, order, opts)});
  std::lock_guard<std::mutex> lock(cache_->m);
  auto [it, inserted] = cache_->map.emplace(order.rows(), basis);
  return it->second;
}

/// Remainder of f on division by the basis: no remainder monomial is
/// divisible by a basis leading monomial, and f - result lies in the ideal.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& basis) {
  if (basis.elements.empty()) return f;
  return detail::divide_full(f, basis.elements, basis.order);
}

/// Buchberger criterion, checked directly: every S-polynomial of the given
/// elements reduces to zero against them.
template <class K>
bool is_groebner_basis(const std::vector<Polynomial<K>>& elems, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!detail::divide_full(detail::s_polynomial(elems[i], elems[j], ord), elems, ord)
               .is_zero())
        return false;
  return true;
}

template <class K>
MonomialIdeal initial_ideal(const Ideal<K>& I, const MonomialOrder& order,
                            const GroebnerOptions& opts = {}) {
  if (I.is_zero()) throw InvalidArgument("initial ideal of the zero ideal");
  auto gb = I.groebner(order, opts);
  return MonomialIdeal(I.variable_count(), gb->leading_monomials());
}

template <class K>
bool contains(const Ideal<K>& I, const Polynomial<K>& f, const MonomialOrder& order,
              const GroebnerOptions& opts = {}) {
  if (I.is_zero()) return f.is_zero();
  return normal_form(f, *I.groebner(order, opts)).is_zero();
}

template <class K>
bool contains(const Ideal<K>& I, const Polynomial<K>& f) {
  return contains(I, f, MonomialOrder::degrevlex(I.variable_count()));
}

namespace detail {

template <class K>
Polynomial<K> append_variable(const Polynomial<K>& f) {
  Polynomial<K> r(f.variable_count() + 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<Exponent> e = m.exponents();
    e.push_back(0);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

template <class K>
Polynomial<K> drop_last_variable(const Polynomial<K>& f) {
  Polynomial<K> r(f.variable_count() - 1);
  for (const auto& [m, c] : f.terms()) {
    std::vector<Exponent> e = m.exponents();
    if (e.back() != 0) throw InvalidArgument("polynomial still involves the last variable");
    e.pop_back();
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

/// Rebuild an ideal from its reduced basis so downstream callers see
/// canonical generators; the basis is seeded into the new ideal's cache.
template <class K>
Ideal<K> from_reduced_basis(int nvars, const MonomialOrder& order,
                            std::vector<Polynomial<K>> elements) {
  Ideal<K> out(nvars, elements);
  out.seed_cache(std::make_shared<const GroebnerBasis<K>>(
      GroebnerBasis<K>{order, std::move(elements)}));
  return out;
}

}  // namespace detail

/// I ∩ J by eliminating t from t·I + (1-t)·J under a block order that
/// weighs the auxiliary variable first.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, const MonomialOrder& base,
                   const GroebnerOptions& opts = {}) {
  if (I.variable_count() != J.variable_count())
    throw DimensionMismatch("intersecting ideals over different rings");
  const int n = I.variable_count();
  if (I.is_zero() || J.is_zero()) return Ideal<K>(n, {});
  MonomialOrder elim = base.append_eliminated_variable();
  Monomial t = Monomial::variable(n + 1, n);
  std::vector<Polynomial<K>> gens;
  for (const auto& f : I.generators()) {
    auto fe = detail::append_variable(f);
    gens.push_back(fe.times_term(t, one_like(fe.terms().begin()->second)));
  }
  for (const auto& g : J.generators()) {
    auto ge = detail::append_variable(g);
    gens.push_back(ge - ge.times_term(t, one_like(ge.terms().begin()->second)));
  }
  auto gb = Ideal<K>(n + 1, std::move(gens)).groebner(elim, opts);
  std::vector<Polynomial<K>> restricted;
  for (const auto& e : gb->elements)
    if (leading_monomial(e, elim)[n] == 0)
      restricted.push_back(detail::drop_last_variable(e));
  return detail::from_reduced_basis(n, base, std::move(restricted));
}

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, const GroebnerOptions& opts = {}) {
  return intersect(I, J, MonomialOrder::degrevlex(I.variable_count()), opts);
}

/// Exact quotient g / f; throws if the division leaves a remainder.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& g, const Polynomial<K>& f,
                           const MonomialOrder& ord) {
  Polynomial<K> q(g.variable_count());
  Polynomial<K> r = detail::divide_full(g, std::vector<Polynomial<K>>{f}, ord, &q);
  if (!r.is_zero()) throw InvalidArgument("polynomial division is not exact");
  return q;
}

/// Colon ideal (J : I) = { s : s·I ⊆ J }, via (J : f) = (J ∩ (f)) / f
/// intersected over the generators f of I.
template <class K>
Ideal<K> colon(const Ideal<K>& J, const Ideal<K>& I, const MonomialOrder& base,
               const GroebnerOptions& opts = {}) {
  if (J.variable_count() != I.variable_count())
    throw DimensionMismatch("colon of ideals over different rings");
  if (I.is_zero()) throw InvalidArgument("colon by the zero ideal");
  const int n = J.variable_count();
  if (J.is_zero()) return Ideal<K>(n, {});
  std::optional<Ideal<K>> acc;
  for (const auto& f : I.generators()) {
    Ideal<K> meet = intersect(J, Ideal<K>(n, {f}), base, opts);
    std::vector<Polynomial<K>> quotients;
    quotients.reserve(meet.generators().size());
    for (const auto& e : meet.generators()) quotients.push_back(exact_divide(e, f, base));
    Ideal<K> part(n, std::move(quotients));
    acc = acc ? intersect(*acc, part, base, opts) : std::move(part);
  }
  auto gb = acc->groebner(base, opts);
  return detail::from_reduced_basis(n, base, gb->elements);
}

template <class K>
Ideal<K> colon(const Ideal<K>& J, const Ideal<K>& I, const GroebnerOptions& opts = {}) {
  return colon(J, I, MonomialOrder::degrevlex(J.variable_count()), opts);
}

/// Projective emptiness of V(I) for homogeneous I: every variable must show
/// a pure power among the leading monomials of a reduced basis.
template <class K>
bool projective_empty(const Ideal<K>& I, const GroebnerOptions& opts = {}) {
  for (const auto& g : I.generators())
    if (!g.is_homogeneous()) throw InvalidArgument("projective test needs homogeneous input");
  if (I.is_zero()) return false;
  const int n = I.variable_count();
  auto gb = I.groebner(MonomialOrder::degrevlex(n), opts);
  auto lms = gb->leading_monomials();
  for (const auto& m : lms)
    if (m.is_one()) return true;  // unit ideal
  for (int v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& m : lms)
      if (!m.is_one() && m.is_pure_power_of(v)) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

}  // namespace fpure
