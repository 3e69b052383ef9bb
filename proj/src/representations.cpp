#include "diracsym/representations.hpp"

#include <algorithm>

#include "diracsym/errors.hpp"

namespace diracsym {

IrrepDescriptor irrep(const RootSystem& rs, Weight highest_weight) {
  if (highest_weight.size() != rs.ambient_dim)
    throw DimensionMismatch(rs.name + ": highest weight dimension mismatch");
  for (int i = 0; i < rs.num_simple(); ++i) {
    Rational c = cartan_pairing(rs.standard_product, highest_weight,
                                rs.simple_root(i));
    if (c < 0 || !is_integer(c))
      throw DimensionMismatch(rs.name + ": weight " + to_string(highest_weight) +
                              " is not dominant integral");
  }
  return IrrepDescriptor{&rs, std::move(highest_weight)};
}

Integer weyl_dimension(const IrrepDescriptor& ir) {
  const RootSystem& rs = *ir.rs;
  Rational dim = 1;
  Weight shifted = ir.highest_weight + rs.delta;
  for (const Weight& a : rs.positive_roots)
    dim *= inner(rs.standard_product, shifted, a) /
           inner(rs.standard_product, rs.delta, a);
  check(is_integer(dim) && dim > 0,
        rs.name + ": Weyl dimension " + to_string(dim) + " not a positive integer");
  return dim.get_num();
}

WeightMultiplicities weight_multiplicities(const IrrepDescriptor& ir,
                                           long long cap) {
  const RootSystem& rs = *ir.rs;
  Integer dim = weyl_dimension(ir);
  if (dim > Integer(static_cast<long>(cap)))
    throw CapExceeded(rs.name + ": weight system of size " + dim.get_str() +
                      " exceeds cap " + std::to_string(cap));

  const Weight lambda = ir.highest_weight;
  const Weight shifted_top = lambda + rs.delta;
  const Rational top_norm = norm_sq(rs.standard_product, shifted_top);

  WeightMultiplicities mult;  // confirmed weights only
  mult.emplace(lambda, 1);

  // Walk down by simple roots, one height level at a time. Every weight
  // below the top is reachable from a weight one level up, so expanding
  // confirmed weights only is exhaustive.
  std::vector<Weight> level = {lambda};
  while (!level.empty()) {
    std::map<Weight, bool, WeightLess> candidates;
    for (const Weight& mu : level)
      for (int i = 0; i < rs.num_simple(); ++i)
        candidates.emplace(mu - rs.simple_root(i), true);
    std::vector<Weight> next;
    for (const auto& [nu, unused] : candidates) {
      (void)unused;
      if (mult.count(nu)) continue;  // already confirmed on an earlier level
      // Freudenthal: (|lambda+delta|^2 - |nu+delta|^2) m(nu)
      //            = 2 sum_{a>0} sum_{k>=1} m(nu+ka) <nu+ka, a>.
      // Everything above nu in height is already in `mult`; weights vanish
      // outside the shell |w+delta|^2 <= |lambda+delta|^2, so each string is
      // walked until the (convex) shifted norm has climbed past the shell.
      Rational numer = 0;
      for (const Weight& a : rs.positive_roots) {
        Weight up = nu + a;
        Rational prev_shell = norm_sq(rs.standard_product, nu + rs.delta);
        for (;;) {
          Rational shell = norm_sq(rs.standard_product, up + rs.delta);
          if (shell > top_norm && shell >= prev_shell) break;
          auto it = mult.find(up);
          if (it != mult.end())
            numer += 2 * Rational(it->second) * inner(rs.standard_product, up, a);
          prev_shell = shell;
          up += a;
        }
      }
      if (numer == 0) continue;  // not a weight
      Rational denom = top_norm - norm_sq(rs.standard_product, nu + rs.delta);
      check(denom > 0, rs.name + ": degenerate Freudenthal denominator at " +
                           to_string(nu));
      Rational m = numer / denom;
      check(is_integer(m) && m > 0,
            rs.name + ": non-integral Freudenthal multiplicity at " + to_string(nu));
      mult.emplace(nu, m.get_num());
      next.push_back(nu);
    }
    level = std::move(next);
  }

  Integer total = 0;
  for (const auto& [w, m] : mult) total += m;
  check(total == dim, rs.name + ": weight multiplicities sum to " +
                          total.get_str() + ", dimension is " + dim.get_str());
  return mult;
}

WeightMultiplicities klimyk_tensor(const IrrepDescriptor& a,
                                   const IrrepDescriptor& b,
                                   long long cap) {
  if (a.rs != b.rs)
    throw DimensionMismatch("klimyk_tensor: factors live on different root systems");
  const RootSystem& rs = *a.rs;
  WeightMultiplicities weights_b = weight_multiplicities(b, cap);

  std::map<Weight, Integer, WeightLess> acc;
  for (const auto& [pi, m_pi] : weights_b) {
    Weight xi = a.highest_weight + pi + rs.delta;
    auto [nu, w] = dominant_representative(rs, xi);
    bool singular = false;
    for (int i = 0; i < rs.num_simple() && !singular; ++i)
      if (inner(rs.standard_product, nu, rs.simple_root(i)) == 0) singular = true;
    if (singular) continue;
    acc[nu - rs.delta] += w.det() * m_pi;
  }

  WeightMultiplicities out;
  for (const auto& [w, m] : acc) {
    check(m >= 0, rs.name + ": Klimyk cancellation failure at " + to_string(w));
    if (m > 0) out.emplace(w, m);
  }

  // Dimension bookkeeping: sum mult * d(nu) == d(a) * d(b).
  Integer lhs = 0;
  for (const auto& [w, m] : out) lhs += m * weyl_dimension(irrep(rs, w));
  check(lhs == weyl_dimension(a) * weyl_dimension(b),
        rs.name + ": Klimyk dimension bookkeeping failed");
  return out;
}

Rational casimir_eigenvalue(const InnerProduct& p, const Weight& lambda,
                            const Weight& delta) {
  return inner(p, lambda + 2 * delta, lambda);
}

}  // namespace diracsym
