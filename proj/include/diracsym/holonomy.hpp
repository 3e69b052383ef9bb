#pragma once

#include <optional>
#include <string>
#include <vector>

#include "diracsym/dirac_spectrum.hpp"

namespace diracsym {

// Scalar holonomy data. The torus elements themselves (the center generator
// H, the coroot H_beta) are never represented; only the pairings survive,
// with the imaginary unit factored out: the Kahler form acts on the
// beta_I-component as i*t_I, the rescaled quaternionic Casimir vanishes iff
// s_I = 0.
struct KahlerMember {
  std::vector<int> subset;  // I, a subset of I_0
  long long t;              // #I+ - #I- + #(I0\I) - #I in the center-aligned view
};

struct QkMember {
  std::vector<int> subset;
  Rational s;  // 2<beta_I, beta>/<beta,beta>
};

struct KahlerReport {
  int m = 0;
  // Counts in the center-aligned repositivization (epsilon signs below).
  long long count_plus = 0, count_minus = 0, count_zero = 0;
  std::vector<int> epsilon;  // +-1 per noncompact root: sign of <h, alpha_i>
  std::vector<KahlerMember> members;
  long long min_abs_t = 0;
  long long fiberwise_min = 0;  // 0 for m even, 1 for m odd
  bool criterion_met = false;   // some t = 0 (m even) or +-1 (m odd)
  bool balanced = false;        // #I+ == #I-
};

struct QkFactorAnalysis {
  Weight factor_root;
  std::vector<QkMember> members;
  bool criterion_met = false;  // some s = 0
};

struct QkReport {
  Weight maximal_root;
  long long count_plus = 0, count_minus = 0, count_zero = 0;
  std::vector<QkMember> members;
  bool criterion_met = false;
  bool counting_identity = false;  // #I- + #I0 == #I+
  // Other rank-1 factors of K (the G2/SO4 and HP^1 dual-Sp1 analyses),
  // labeled by their root; the maximal-root factor above is the one carrying
  // the quaternionic structure.
  std::vector<QkFactorAnalysis> other_factors;
};

/// Kahler center pairing report. Requires the kahler flag (structure kahler
/// or the kahler-also marker). The t values are computed against the
/// K-central direction h, which reduces to the plain counting formula
/// whenever the stored positivity is center-aligned (all epsilon = +1).
KahlerReport kahler_report(const SymmetricPair& p);

/// The maximal root of Phi_G^+, validated to be compact and to satisfy the
/// Wolf conditions (<beta,theta> = 0 for compact theta != +-beta, and
/// <alpha,beta> = |beta|^2/2 on Phi_p^+). NotQuaternionKahler unless the
/// structure flag is quaternion_kahler.
Weight qk_structure(const SymmetricPair& p);

QkReport qk_report(const SymmetricPair& p);

enum class FiberwiseKind { kahler, quaternion_kahler };

/// Fiberwise spectra of the canonical forms on spinors: m-2r (times i) for
/// the Kahler 2-form, 6m - 4r(r+2) for the fundamental 4-form, r = 0..m.
std::vector<Rational> fiberwise_eigenvalues(FiberwiseKind kind, int m);

// The G2/SO4 Casimir split: per spin component S^{k1}H (x) S^{k2}H, the two
// factor Casimirs c1 = k1(k1+2)/48 and c2 = k2(k2+2)/16 (Killing
// normalization), summing to 1/2 on each component, and the induced action
// 64 c1 - 20 of the fundamental 4-form.
struct G2SplitRow {
  int k1, k2;
  Weight highest_weight;
  Rational c1, c2;
  Rational omega_value;  // 64 c1 - 20
};

struct G2CasimirSplit {
  std::vector<G2SplitRow> rows;   // (3,1), (4,0), (0,2)
  int trivial_second_factor_row;  // k2 = 0 (S^4 H x S^0 H)
  int trivial_first_factor_row;   // k1 = 0, the component of beta_empty = 2 w2
};

G2CasimirSplit g2_casimir_split();

}  // namespace diracsym
