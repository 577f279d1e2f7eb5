#include "fpure/frobenius.hpp"

namespace fpure {

namespace {

void require_characteristic(std::uint32_t actual, std::uint32_t p) {
  if (actual != p)
    throw FieldMismatch("expected coefficients over GF(" + std::to_string(p) + ")");
}

PolyFp truncated_mul(const PolyFp& a, const PolyFp& b, Exponent cap) {
  PolyFp r(a.variable_count());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      bool keep = true;
      for (int i = 0; i < a.variable_count() && keep; ++i)
        keep = ma[i] + mb[i] <= cap;
      if (keep) r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

bool fits_box(const Monomial& m, Exponent bound) {
  for (int i = 0; i < m.nvars(); ++i)
    if (m[i] > bound) return false;
  return true;
}

}  // namespace

Exponent frobenius_exponent(std::uint32_t p, int e) {
  if (e < 1) throw InvalidArgument("Frobenius exponent e must be at least 1");
  Exponent q = 1;
  for (int k = 0; k < e; ++k) {
    if (q > (kExponentCap - 1) / static_cast<Exponent>(p))
      throw ExponentOverflow("p^e exceeds the 2^31 cap");
    q *= static_cast<Exponent>(p);
  }
  return q;
}

PolyFp polynomial_frobenius(const PolyFp& f, Exponent q) {
  PolyFp r(f.variable_count());
  for (const auto& [m, c] : f.terms()) r.add_term(m.pow(q), c);
  return r;
}

IdealFp frobenius_power(const IdealFp& I, int e) {
  std::uint32_t p = I.field_characteristic();
  if (p == 0) throw FieldMismatch("Frobenius power needs positive characteristic");
  Exponent q = frobenius_exponent(p, e);
  std::vector<PolyFp> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(polynomial_frobenius(g, q));
  return IdealFp(I.variable_count(), std::move(gens));
}

PolyFp truncated_power(const PolyFp& f, std::uint64_t k, Exponent cap) {
  if (f.is_zero()) {
    if (k == 0) throw InvalidArgument("0^0 in truncated power");
    return f;
  }
  std::uint32_t p = f.field_characteristic();
  PolyFp acc = PolyFp::constant(f.variable_count(), GFp(1, p));
  if (k == 0) return acc;
  PolyFp base = truncated_mul(f, PolyFp::constant(f.variable_count(), GFp(1, p)), cap);
  while (true) {
    if (k & 1) acc = truncated_mul(acc, base, cap);
    k >>= 1;
    if (k == 0) break;
    base = truncated_mul(base, base, cap);
  }
  return acc;
}

FedderVerdict fedder_hypersurface(const PolyFp& f, std::uint32_t p) {
  if (f.is_zero()) throw InvalidArgument("Fedder test on the zero polynomial");
  require_characteristic(f.field_characteristic(), p);
  PolyFp survivors = truncated_power(f, p - 1, static_cast<Exponent>(p) - 1);
  FedderVerdict v{p, FedderVerdict::Mode::hypersurface, !survivors.is_zero(), std::nullopt};
  if (v.f_pure) {
    const auto& [m, c] = *survivors.terms().rbegin();  // maximal in the key order
    v.witness = PolyFp::term(m, c);
  }
  return v;
}

FedderVerdict fedder_general(const IdealFp& I, std::uint32_t p, const GroebnerOptions& opts) {
  if (I.is_zero()) throw InvalidArgument("Fedder test on the zero ideal");
  require_characteristic(I.field_characteristic(), p);
  MonomialOrder ord = MonomialOrder::degrevlex(I.variable_count());
  for (const auto& g : I.groebner(ord, opts)->elements)
    if (g.is_constant()) throw InvalidArgument("Fedder test needs a proper ideal");
  IdealFp quot = colon(frobenius_power(I, 1), I, ord, opts);
  FedderVerdict v{p, FedderVerdict::Mode::general, false, std::nullopt};
  for (const auto& u : quot.groebner(ord, opts)->elements) {
    for (const auto& [m, c] : u.terms()) {
      if (fits_box(m, static_cast<Exponent>(p) - 1)) {
        v.f_pure = true;
        v.witness = u;
        return v;
      }
    }
  }
  return v;
}

PolyFp trace(int e, const PolyFp& g) {
  if (e < 1) throw InvalidArgument("trace level e must be at least 1");
  if (g.is_zero()) return g;
  std::uint32_t p = g.field_characteristic();
  if (p == 0) throw FieldMismatch("trace needs prime-field coefficients");
  Exponent q = frobenius_exponent(p, e);
  PolyFp r(g.variable_count());
  for (const auto& [m, c] : g.terms()) {
    std::vector<Exponent> img(static_cast<std::size_t>(m.nvars()));
    bool survives = true;
    for (int i = 0; i < m.nvars() && survives; ++i) {
      if ((m[i] + 1) % q != 0)
        survives = false;
      else
        img[static_cast<std::size_t>(i)] = (m[i] - (q - 1)) / q;
    }
    if (survives) r.add_term(Monomial(std::move(img)), c);
  }
  return r;
}

CompatibilityResult is_uniformly_compatible(const IdealFp& I, const IdealFp& J,
                                            std::uint32_t p, int e,
                                            const CompatibilityOptions& opts) {
  require_characteristic(I.field_characteristic(), p);
  require_characteristic(J.field_characteristic(), p);
  if (I.variable_count() != J.variable_count())
    throw DimensionMismatch("compatibility check over different rings");
  const int n = I.variable_count();
  MonomialOrder ord = MonomialOrder::degrevlex(n);
  for (const auto& g : I.generators())
    if (!contains(J, g, ord, opts.gopts))
      throw InvalidArgument("target ideal must contain the base ideal");

  Exponent q = frobenius_exponent(p, e);
  auto maps = colon(frobenius_power(I, e), I, ord, opts.gopts).groebner(ord, opts.gopts);
  auto targets = J.groebner(ord, opts.gopts);

  unsigned __int128 size = maps->elements.size();
  for (int i = 0; i < n; ++i) size *= static_cast<unsigned __int128>(q);
  size *= targets->elements.size();
  if (size > opts.cap)
    throw CapExceeded(size > ~std::uint64_t(0) ? ~std::uint64_t(0)
                                               : static_cast<std::uint64_t>(size));

  std::vector<Exponent> alpha(static_cast<std::size_t>(n), 0);
  for (const auto& u : maps->elements) {
    std::fill(alpha.begin(), alpha.end(), 0);
    while (true) {
      Monomial box(alpha);
      for (const auto& g : targets->elements) {
        PolyFp carrier = g.times_term(box, GFp(1, p));
        PolyFp image = trace(e, u * carrier);
        if (!contains(J, image, ord, opts.gopts))
          return {false, CompatibilityWitness{e, u, carrier, image}};
      }
      // next box exponent, last coordinate fastest
      int i = n - 1;
      while (i >= 0 && alpha[static_cast<std::size_t>(i)] == q - 1) {
        alpha[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++alpha[static_cast<std::size_t>(i)];
    }
  }
  return {true, std::nullopt};
}

}  // namespace fpure
