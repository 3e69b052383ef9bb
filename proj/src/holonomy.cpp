#include "diracsym/holonomy.hpp"

#include <algorithm>
#include <cstdlib>

#include "diracsym/errors.hpp"

namespace diracsym {

namespace {

/// The direction of the (one-dimensional) center of K inside the span of the
/// G-roots: orthogonal to every compact root and to the complement of the
/// root span. Sign fixed so the lexicographically first noncompact root
/// pairs positively.
Weight center_direction(const SymmetricPair& p) {
  const RootSystem& rs = p.rs;
  const InnerProduct& g = rs.standard_product;

  // Rows: functionals <theta, .> over the compact roots, then <v, .> for a
  // basis of the orthogonal complement of the root span.
  RationalMatrix roots(static_cast<Eigen::Index>(rs.positive_roots.size()),
                       rs.ambient_dim);
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    roots.row(static_cast<Eigen::Index>(i)) =
        (g.gram * rs.positive_roots[i]).transpose();
  std::vector<Weight> complement = nullspace(roots);

  RationalMatrix sys(
      static_cast<Eigen::Index>(p.compact_positive.size() + complement.size()),
      rs.ambient_dim);
  Eigen::Index row = 0;
  for (int i : p.compact_positive)
    sys.row(row++) = (g.gram * rs.positive_roots[i]).transpose();
  for (const Weight& v : complement) sys.row(row++) = v.transpose();

  std::vector<Weight> sol = nullspace(sys);
  if (sol.size() != 1)
    throw NotKahler(p.name + ": center of K is " + std::to_string(sol.size()) +
                    "-dimensional, not a circle");
  Weight h = sol.front();
  Rational first = inner(g, h, p.noncompact_root(0));
  if (first == 0)
    throw NotKahler(p.name + ": center direction degenerate on Phi_p^+");
  if (first < 0) h = -h;
  return h;
}

}  // namespace

KahlerReport kahler_report(const SymmetricPair& p) {
  if (!p.is_kahler())
    throw NotKahler(p.name + " carries no Kahler structure flag");

  const RootSystem& rs = p.rs;
  KahlerReport r;
  r.m = p.m;
  Weight h = center_direction(p);

  // ad(H) acts on each root space by a scalar; on the noncompact side the
  // absolute pairing must be constant (Schur), the sign epsilon_i telling
  // whether alpha_i sits in the +i or the -i eigenspace.
  Rational unit = inner(rs.standard_product, h, p.noncompact_root(0));
  for (int i = 0; i < p.m; ++i) {
    Rational v = inner(rs.standard_product, h, p.noncompact_root(i));
    if (v != unit && v != -unit)
      throw NotKahler(p.name + ": center pairing not constant on Phi_p^+");
    r.epsilon.push_back(v == unit ? 1 : -1);
  }

  // Sign classification in the center-aligned repositivization: flipping the
  // epsilon = -1 roots realigns Phi_p^+ with the +i eigenspace, which is the
  // positivity the counting formula assumes.
  std::vector<int> i_zero;
  for (int i = 0; i < p.m; ++i) {
    Rational v = r.epsilon[i] *
                 inner(rs.killing_product, p.delta_k, p.noncompact_root(i));
    if (v > 0)
      ++r.count_plus;
    else if (v < 0)
      ++r.count_minus;
    else {
      ++r.count_zero;
      i_zero.push_back(i);
    }
  }
  r.balanced = r.count_plus == r.count_minus;
  check(r.balanced, p.name + ": Kahler balance #I+ = #I- failed (" +
                        std::to_string(r.count_plus) + " vs " +
                        std::to_string(r.count_minus) + ")");

  r.fiberwise_min = p.m % 2;
  bool first = true;
  for (int mask = 0; mask < (1 << i_zero.size()); ++mask) {
    KahlerMember member;
    long long t = r.count_plus - r.count_minus;
    for (std::size_t b = 0; b < i_zero.size(); ++b) {
      if (mask >> b & 1) {
        member.subset.push_back(i_zero[b]);
        --t;
      } else {
        ++t;
      }
    }
    member.t = t;
    check(std::llabs(t) <= p.m && (t - p.m) % 2 == 0,
          p.name + ": t outside the fiberwise spectrum");
    if (first || std::llabs(t) < r.min_abs_t) r.min_abs_t = std::llabs(t);
    first = false;
    if (p.m % 2 == 0 ? t == 0 : (t == 1 || t == -1)) r.criterion_met = true;
    r.members.push_back(std::move(member));
  }
  return r;
}

Weight qk_structure(const SymmetricPair& p) {
  if (p.structure != Structure::quaternion_kahler)
    throw NotQuaternionKahler(p.name + " is not flagged Quaternion-Kahler");
  const RootSystem& rs = p.rs;

  // Highest root: the long dominant one.
  Weight beta;
  Rational best = -1;
  for (const Weight& a : rs.positive_roots) {
    if (!is_dominant(rs, a)) continue;
    Rational n = norm_sq(rs.standard_product, a);
    if (n > best) {
      beta = a;
      best = n;
    }
  }
  int beta_idx = rs.root_index(beta);
  if (!p.is_compact_index(beta_idx))
    throw WolfViolation(p.name + ": maximal root " + to_string(beta) +
                        " is not compact");
  for (int i : p.compact_positive) {
    const Weight& theta = rs.positive_roots[i];
    if (theta == beta) continue;
    if (inner(rs.standard_product, theta, beta) != 0)
      throw WolfViolation(p.name + ": compact root " + to_string(theta) +
                          " not orthogonal to the maximal root");
  }
  Rational half = norm_sq(rs.standard_product, beta) / 2;
  for (int i : p.noncompact_positive) {
    const Weight& alpha = rs.positive_roots[i];
    if (inner(rs.standard_product, alpha, beta) != half)
      throw WolfViolation(p.name + ": <" + to_string(alpha) +
                          ", beta> != |beta|^2/2");
  }
  return beta;
}

namespace {

std::vector<QkMember> factor_pairings(const SymmetricPair& p,
                                      const SignClassification& signs,
                                      const Weight& factor_root,
                                      bool* criterion) {
  const InnerProduct& g = p.rs.killing_product;
  Weight base = p.delta_p;
  for (int i : signs.i_minus) base -= p.noncompact_root(i);
  Rational beta_norm = norm_sq(g, factor_root);
  std::vector<QkMember> members;
  *criterion = false;
  for (int mask = 0; mask < (1 << signs.i_zero.size()); ++mask) {
    QkMember m;
    Weight beta_i = base;
    for (std::size_t b = 0; b < signs.i_zero.size(); ++b)
      if (mask >> b & 1) {
        m.subset.push_back(signs.i_zero[b]);
        beta_i -= p.noncompact_root(signs.i_zero[b]);
      }
    m.s = 2 * inner(g, beta_i, factor_root) / beta_norm;
    if (m.s == 0) *criterion = true;
    members.push_back(std::move(m));
  }
  return members;
}

}  // namespace

QkReport qk_report(const SymmetricPair& p) {
  Weight beta = qk_structure(p);
  if (!p.has_spin) throw NotSpin(p.name + " carries no spin structure");

  QkReport r;
  r.maximal_root = beta;
  SignClassification signs = classify_noncompact(p);
  r.count_plus = static_cast<long long>(signs.i_plus.size());
  r.count_minus = static_cast<long long>(signs.i_minus.size());
  r.count_zero = static_cast<long long>(signs.i_zero.size());
  r.counting_identity = r.count_minus + r.count_zero == r.count_plus;
  r.members = factor_pairings(p, signs, beta, &r.criterion_met);

  // Rank-one factors of K other than the quaternionic one (the dual-Sp1
  // analyses for G2/SO4 and HP^1).
  std::vector<std::vector<Weight>> components;
  {
    const auto& pos = p.k.positive_roots;
    const int n = static_cast<int>(pos.size());
    std::vector<int> comp(n, -1);
    int n_comp = 0;
    for (int i = 0; i < n; ++i) {
      if (comp[i] >= 0) continue;
      std::vector<int> stack = {i};
      comp[i] = n_comp;
      while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < n; ++b)
          if (comp[b] < 0 &&
              inner(p.rs.standard_product, pos[a], pos[b]) != 0) {
            comp[b] = n_comp;
            stack.push_back(b);
          }
      }
      ++n_comp;
    }
    components.resize(n_comp);
    for (int i = 0; i < n; ++i) components[comp[i]].push_back(pos[i]);
  }
  for (const auto& component : components) {
    if (component.size() != 1 || component.front() == beta) continue;
    QkFactorAnalysis fa;
    fa.factor_root = component.front();
    fa.members = factor_pairings(p, signs, fa.factor_root, &fa.criterion_met);
    r.other_factors.push_back(std::move(fa));
  }
  return r;
}

std::vector<Rational> fiberwise_eigenvalues(FiberwiseKind kind, int m) {
  if (m < 1) throw DimensionMismatch("fiberwise_eigenvalues: m must be >= 1");
  std::vector<Rational> out;
  for (int r = 0; r <= m; ++r)
    out.push_back(kind == FiberwiseKind::kahler ? Rational(m - 2 * r)
                                                : Rational(6 * m - 4 * r * (r + 2)));
  return out;
}

G2CasimirSplit g2_casimir_split() {
  G2CasimirSplit split;
  auto w = [](long a, long b) {
    Weight v(2);
    v[0] = a;
    v[1] = b;
    return v;
  };
  const std::vector<std::pair<std::pair<int, int>, Weight>> data = {
      {{3, 1}, w(3, 1)}, {{4, 0}, w(4, 0)}, {{0, 2}, w(0, 2)}};
  for (const auto& [ks, hw] : data) {
    G2SplitRow row;
    row.k1 = ks.first;
    row.k2 = ks.second;
    row.highest_weight = hw;
    row.c1 = Rational(row.k1 * (row.k1 + 2), 48);
    row.c2 = Rational(row.k2 * (row.k2 + 2), 16);
    check(row.c1 + row.c2 == Rational(1, 2),
          "G2 split: factor Casimirs do not sum to 1/2 on S^" +
              std::to_string(row.k1) + " x S^" + std::to_string(row.k2));
    row.omega_value = 64 * row.c1 - 20;
    split.rows.push_back(std::move(row));
  }
  split.trivial_second_factor_row = 1;  // (4,0): the 4 w1 component
  split.trivial_first_factor_row = 2;   // (0,2): the 2 w2 component, beta_empty
  return split;
}

}  // namespace diracsym
