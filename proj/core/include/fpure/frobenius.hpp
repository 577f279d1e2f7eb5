#pragma once

#include <optional>

#include "fpure/groebner.hpp"

namespace fpure {

/// q = p^e, capped at 2^31.
Exponent frobenius_exponent(std::uint32_t p, int e);

/// f^q over 𝔽_p, computed term-wise: exponents scale by q and prime-field
/// coefficients are Frobenius-fixed.
PolyFp polynomial_frobenius(const PolyFp& f, Exponent q);

/// Frobenius power I^[q] = (g^q : g generator of I), q = p^e.
IdealFp frobenius_power(const IdealFp& I, int e);

/// f^k with truncation: any product monomial with an exponent above cap is
/// discarded immediately (it can only grow further).
PolyFp truncated_power(const PolyFp& f, std::uint64_t k, Exponent cap);

struct FedderVerdict {
  enum class Mode { hypersurface, general };
  std::uint32_t prime;
  Mode mode;
  bool f_pure;
  /// For a hypersurface: the maximal surviving monomial of f^(p-1) with its
  /// coefficient. In general mode: a colon-basis element outside (X_i^p).
  std::optional<PolyFp> witness;
};

/// S/(f) is F-pure at the origin iff f^(p-1) has a support monomial with all
/// exponents ≤ p-1; decided by truncated expansion.
FedderVerdict fedder_hypersurface(const PolyFp& f, std::uint32_t p);

/// S/I is F-pure at the origin iff (I^[p] : I) is not contained in
/// (X_0^p, ..., X_n^p); decided on a reduced basis of the colon ideal.
FedderVerdict fedder_general(const IdealFp& I, std::uint32_t p,
                             const GroebnerOptions& opts = {});

/// Trace projection of the e-th Frobenius pushforward: monomial-wise,
/// x^a maps to x^((a-(q-1)·1)/q) when a ≡ (q-1)·1 mod q componentwise and to
/// 0 otherwise; prime-field coefficients carry through unchanged.
PolyFp trace(int e, const PolyFp& g);

struct CompatibilityWitness {
  int e;
  PolyFp u;        // colon-basis element defining the map
  PolyFp carrier;  // x^a·g, the target-ideal element moved outside
  PolyFp image;    // trace(e, u·carrier), not contained in the target
};

struct CompatibilityOptions {
  std::uint64_t cap = std::uint64_t(1) << 20;  // (j, a, i) loop size cap
  GroebnerOptions gopts;
};

struct CompatibilityResult {
  bool compatible;
  std::optional<CompatibilityWitness> witness;
};

/// Checks whether every p^{-e}-linear map of S/I keeps J inside J, through
/// the description of those maps as trace(e, u·-) with u in (I^[q] : I).
/// J must contain I (both lifted to the ambient ring). The first failing
/// (u, x^a, generator) triple in deterministic order becomes the witness.
CompatibilityResult is_uniformly_compatible(const IdealFp& I, const IdealFp& J,
                                            std::uint32_t p, int e,
                                            const CompatibilityOptions& opts = {});

}  // namespace fpure
