#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpure/frobenius.hpp"
#include "fpure/substitution.hpp"

namespace fpure {

/// Certificate that an ideal has a squarefree initial ideal: re-checkable
/// from its own fields by recomputing the initial ideal of the transformed
/// generators under the stored order.
template <class K>
struct HerzogCertificate {
  MonomialOrder order;
  std::optional<LinearSubstitution<K>> substitution;
  MonomialIdeal initial;
  std::vector<Polynomial<K>> transformed_generators;
};

template <class K>
std::optional<HerzogCertificate<K>> herzog_check(const Ideal<K>& I, const MonomialOrder& order,
                                                 const GroebnerOptions& opts = {}) {
  MonomialIdeal init = initial_ideal(I, order, opts);
  if (!init.squarefree()) return std::nullopt;
  return HerzogCertificate<K>{order, std::nullopt, std::move(init), I.generators()};
}

/// Deterministic search plan over orders and coordinate changes. Identical
/// (strategy, seed) pairs replay identical transcripts.
struct SearchStrategy {
  bool enumerate_permutations = true;
  std::uint64_t permutation_cap = 5040;  // full enumeration while n! stays under this
  int sampled_permutations = 240;        // fallback when the cap is exceeded
  int random_weight_orders = 0;
  std::int64_t weight_entry_bound = 20;
  std::vector<LinearSubstitution<Rational>> substitution_pool;
  int random_substitutions = 0;  // entries drawn from {-2,...,2}
  std::uint64_t seed = 0;
  GroebnerOptions gopts;
};

struct SearchAttempt {
  int substitution_index;  // -1 for "no substitution"
  std::string order;
  bool success;
  std::optional<Monomial> offending;  // first non-squarefree minimal generator
};

struct SearchOutcome {
  std::optional<HerzogCertificate<Rational>> certificate;
  std::vector<SearchAttempt> transcript;
};

/// First certificate under the deterministic enumeration (substitutions
/// outer, orders inner); exhaustion returns no certificate plus the full
/// transcript. Heuristic: a miss never proves there is no certificate.
SearchOutcome herzog_search(const IdealQ& I, const SearchStrategy& strategy);

struct ReductionFlags {
  bool bad_prime = false;
  bool gb_drift = false;
  std::string detail;
};

/// Reduce the reduced ℚ-basis of I mod p. bad_prime is set (and the zero
/// ideal returned) when p divides a denominator, equivalently a leading
/// coefficient of the primitive form; gb_drift is set when the reduction
/// fails the Buchberger criterion mod p.
std::pair<IdealFp, ReductionFlags> reduce_ideal_mod_p(const IdealQ& I, std::uint32_t p,
                                                      const MonomialOrder& order,
                                                      const GroebnerOptions& opts = {});

enum class ScanStatus { f_pure, not_f_pure, bad_prime, error };
std::string to_string(ScanStatus s);

struct PrimeScanRecord {
  std::uint32_t prime;
  ScanStatus status;
  std::string witness_summary;
  double elapsed_ms;
};

struct ScanOptions {
  std::optional<MonomialOrder> order;       // reduction order; default degrevlex
  std::vector<std::string> variable_names;  // used in witness summaries
  int jobs = 1;
  GroebnerOptions gopts;
};

/// Fedder verdict per prime in [p_min, p_max]: reduce, then the general
/// criterion (hypersurface fast path when the reduced basis is principal).
/// Per-prime failures land in the record, never abort the scan.
std::vector<PrimeScanRecord> prime_scan(const IdealQ& I, std::uint32_t p_min,
                                        std::uint32_t p_max, const ScanOptions& opts = {});

enum class Question12Class {
  both_hold,
  both_fail,
  tension_1_without_2,  // inconclusive by construction: the search is heuristic
  tension_2_without_1,  // hard finding: certificate plus a non-F-pure good prime
};
std::string to_string(Question12Class c);

struct Question12Report {
  std::vector<PrimeScanRecord> scan;
  SearchOutcome search;
  Question12Class classification;
  bool inconclusive;
  std::string note;
};

Question12Report question12_report(const IdealQ& I, std::uint32_t p_min, std::uint32_t p_max,
                                   const SearchStrategy& strategy,
                                   const ScanOptions& opts = {});

}  // namespace fpure
