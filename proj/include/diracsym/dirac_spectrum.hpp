#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diracsym/symmetric_pair.hpp"

namespace diracsym {

// Partition of the noncompact positive roots alpha_1..alpha_m by the sign of
// <delta_K, alpha_i> (Killing product). Indices are 0-based positions in the
// lexicographic enumeration.
struct SignClassification {
  std::vector<int> i_plus, i_minus, i_zero;
  std::vector<Rational> pairings;  // <delta_K, alpha_i>, i = 0..m-1
};

SignClassification classify_noncompact(const SymmetricPair& p);

enum class HalfSpin { plus, minus };

struct MinimalWeight {
  std::vector<int> subset;  // I, a subset of i_zero (ascending)
  Weight beta;
  HalfSpin half_spin;       // parity of |I_-| + |I|; even -> Sigma^+
};

// All minimal-norm highest weights of the spin representation of K:
// beta_I = delta_p - sum_{I_-} alpha_i - sum_I alpha_i over subsets I of
// I_0, deduplicated as vectors. Every member is verified K-dominant and of
// the common norm.
struct MinimalWeightFamily {
  std::vector<MinimalWeight> members;
  Rational common_norm_sq;     // Killing norm
  int subset_count = 0;        // 2^{#I_0}, before deduplication
};

MinimalWeightFamily minimal_highest_weights(const SymmetricPair& p);

struct SpectrumReport {
  SignClassification signs;
  MinimalWeightFamily family;
  Rational lambda_min_sq;        // 2 min||beta||^2 + n/8
  Weight beta_g;                 // common G-dominant representative
  Rational casimir_crosscheck;   // <beta_g + 2 delta_G, beta_g> + n/16
  Rational friedrich_bound_sq;   // n^2 / (8(n-1))
  std::optional<Rational> structure_bound_sq;
};

/// First Dirac eigenvalue squared (Killing metric, Scal = n/2). NotSpin on
/// pairs without a spin structure.
Rational first_eigenvalue_squared(const SymmetricPair& p);

/// The G-dominant weight beta^G = delta_G - w^{-1} delta_K shared by every
/// minimal member; asserts uniqueness across the family and G-integrality.
Weight g_representation(const SymmetricPair& p);

/// <beta^G + 2 delta_G, beta^G> + n/16; asserted equal to
/// first_eigenvalue_squared.
Rational casimir_crosscheck(const SymmetricPair& p);

SpectrumReport spectrum_report(const SymmetricPair& p);

// Brute-force route over the Weyl group: W = {w : w Phi_G^+ contains
// Phi_K^+}, beta_w = w delta_G - delta_K.
struct OracleCheck {
  bool passed = false;
  std::string witness;  // empty when passed
};

struct OracleReport {
  long long weyl_order = 0;          // |W_G|
  long long w_set_size = 0;          // |W|
  std::vector<Weight> all_beta_w;    // in enumeration order
  std::map<std::string, OracleCheck> checks;

  bool all_passed() const;
};

/// Enumerates W_G (CapExceeded above weyl_cap) and runs the checks:
///   index:        |W| == |W_G| / |W_K|
///   k_dominant:   every beta_w is K-dominant
///   min_norm:     argmin set over W equals the direct minimal family
///   dim_tiling:   sum of K-Weyl dimensions of the beta_w == 2^m
///   g_dominant:   dominant representative identical across minimizers,
///                 G-dominant integral
///   casimir_k:    <beta_w + 2 delta_K, beta_w> == |delta_G|^2 - |delta_K|^2
///                 for every w in W
OracleReport parthasarathy_oracle(const SymmetricPair& p, long long weyl_cap);

/// The 2^m spin weights (all half-sums of signed noncompact roots) as a
/// sorted multiset. CapExceeded when 2^m > cap.
std::vector<Weight> spin_weights(const SymmetricPair& p, long long cap = 4096);

/// Independent tiling check: the multiset above must equal the union of the
/// weight systems of the K-components found by the oracle (Freudenthal
/// route). Returns a failed check with a witness weight on mismatch.
OracleCheck spin_weight_tiling(const SymmetricPair& p, long long weyl_cap,
                               long long cap = 4096);

/// Friedrich bound n^2/(8(n-1)) for the Killing metric.
Rational friedrich_bound_sq(long n);

/// Holonomy-refined bound when a structure flag applies: Kahler entries get
/// the Kirchberg bound for their complex-dimension parity, QK and Spin9
/// entries n(n+12)/(8(n+8)).
std::optional<Rational> structure_bound_sq(const SymmetricPair& p);

}  // namespace diracsym
