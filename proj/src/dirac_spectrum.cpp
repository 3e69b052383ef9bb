#include "diracsym/dirac_spectrum.hpp"

#include <algorithm>
#include <set>

#include "diracsym/errors.hpp"
#include "diracsym/representations.hpp"

namespace diracsym {

SignClassification classify_noncompact(const SymmetricPair& p) {
  SignClassification s;
  for (int i = 0; i < p.m; ++i) {
    Rational v = inner(p.rs.killing_product, p.delta_k, p.noncompact_root(i));
    s.pairings.push_back(v);
    if (v > 0)
      s.i_plus.push_back(i);
    else if (v < 0)
      s.i_minus.push_back(i);
    else
      s.i_zero.push_back(i);
  }
  return s;
}

MinimalWeightFamily minimal_highest_weights(const SymmetricPair& p) {
  SignClassification signs = classify_noncompact(p);
  MinimalWeightFamily family;
  family.subset_count = 1 << signs.i_zero.size();

  Weight base = p.delta_p;
  for (int i : signs.i_minus) base -= p.noncompact_root(i);

  // |beta_I|^2 = |delta_p|^2 + 2 sum_{I-} <alpha_i, delta_K>, the common
  // minimal norm, verified per member below.
  Rational expected_norm = norm_sq(p.rs.killing_product, p.delta_p);
  for (int i : signs.i_minus)
    expected_norm +=
        2 * inner(p.rs.killing_product, p.noncompact_root(i), p.delta_k);
  family.common_norm_sq = expected_norm;

  std::set<Weight, WeightLess> seen;
  for (int mask = 0; mask < family.subset_count; ++mask) {
    MinimalWeight mw;
    Weight beta = base;
    for (std::size_t b = 0; b < signs.i_zero.size(); ++b)
      if (mask >> b & 1) {
        mw.subset.push_back(signs.i_zero[b]);
        beta -= p.noncompact_root(signs.i_zero[b]);
      }
    if (!seen.insert(beta).second) continue;
    check(norm_sq(p.rs.killing_product, beta) == expected_norm,
          p.name + ": |beta_I|^2 deviates from the common norm at subset mask " +
              std::to_string(mask));
    check(is_dominant(p.k, beta),
          p.name + ": beta_I not K-dominant at subset mask " + std::to_string(mask));
    std::size_t negatives = signs.i_minus.size() + mw.subset.size();
    mw.half_spin = negatives % 2 == 0 ? HalfSpin::plus : HalfSpin::minus;
    mw.beta = std::move(beta);
    family.members.push_back(std::move(mw));
  }
  return family;
}

Rational friedrich_bound_sq(long n) {
  return Rational(n, 1) * Rational(n, 8 * (n - 1));
}

std::optional<Rational> structure_bound_sq(const SymmetricPair& p) {
  const long n = p.n_dim;
  switch (p.structure) {
    case Structure::quaternion_kahler:
    case Structure::spin9:
      return Rational(n, 1) * Rational(n + 12, 8 * (n + 8));
    case Structure::kahler: {
      // Kirchberg, by the parity of the complex dimension n/2.
      long mc = n / 2;
      if (mc % 2 == 0) return Rational(n, 1) * Rational(n, 8 * (n - 2));
      return Rational(n + 2, 8);
    }
    case Structure::none:
      return std::nullopt;
  }
  return std::nullopt;
}

Rational first_eigenvalue_squared(const SymmetricPair& p) {
  if (!p.has_spin) throw NotSpin(p.name + " carries no spin structure");
  MinimalWeightFamily family = minimal_highest_weights(p);
  return 2 * family.common_norm_sq + Rational(p.n_dim, 8);
}

Weight g_representation(const SymmetricPair& p) {
  if (!p.has_spin) throw NotSpin(p.name + " carries no spin structure");
  MinimalWeightFamily family = minimal_highest_weights(p);
  check(!family.members.empty(), p.name + ": empty minimal family");
  Weight beta_g;
  for (const MinimalWeight& mw : family.members) {
    auto [nu, w] = dominant_representative(p.rs, mw.beta);
    if (beta_g.size() == 0)
      beta_g = nu;
    else
      check(nu == beta_g, p.name + ": minimal members reduce to distinct " +
                              "G-dominant weights " + to_string(beta_g) +
                              " and " + to_string(nu));
  }
  check(is_dominant_integral(p.rs, beta_g),
        p.name + ": beta^G " + to_string(beta_g) + " not G-dominant integral");
  return beta_g;
}

Rational casimir_crosscheck(const SymmetricPair& p) {
  Weight beta_g = g_representation(p);
  Rational value =
      casimir_eigenvalue(p.rs.killing_product, beta_g, p.rs.delta) +
      Rational(p.n_dim, 16);
  check(value == first_eigenvalue_squared(p),
        p.name + ": Casimir route disagrees with the minimal-norm route");
  return value;
}

SpectrumReport spectrum_report(const SymmetricPair& p) {
  SpectrumReport r;
  r.signs = classify_noncompact(p);
  r.family = minimal_highest_weights(p);
  r.lambda_min_sq = first_eigenvalue_squared(p);
  r.beta_g = g_representation(p);
  r.casimir_crosscheck = casimir_crosscheck(p);
  r.friedrich_bound_sq = friedrich_bound_sq(p.n_dim);
  r.structure_bound_sq = structure_bound_sq(p);
  return r;
}

bool OracleReport::all_passed() const {
  for (const auto& [name, c] : checks)
    if (!c.passed) return false;
  return true;
}

OracleReport parthasarathy_oracle(const SymmetricPair& p, long long weyl_cap) {
  const RootSystem& rs = p.rs;
  const int n_pos = rs.num_positive();
  std::vector<char> compact_mask(n_pos, 0);
  for (int i : p.compact_positive) compact_mask[i] = 1;
  const int n_compact = static_cast<int>(p.compact_positive.size());

  OracleReport report;
  report.weyl_order = rs.weyl_order;

  // W = {w : w Phi_G^+ contains Phi_K^+}; membership reads off the root
  // permutation: exactly |Phi_K^+| positive roots must land on positive
  // compact ones.
  for_each_weyl(rs, weyl_cap, [&](const WeylElement& w) {
    int hits = 0;
    for (int i = 0; i < n_pos; ++i) {
      int img = w.perm[i];
      if (img < n_pos && compact_mask[img]) ++hits;
    }
    if (hits != n_compact) return;
    ++report.w_set_size;
    // beta_w = w delta_G - delta_K, with w delta_G summed off the
    // permutation (independent of the direct-formula route).
    Weight image = Weight::Zero(rs.ambient_dim);
    for (int i = 0; i < n_pos; ++i) image += rs.signed_root(w.perm[i]);
    report.all_beta_w.push_back(image / 2 - p.delta_k);
  });

  auto set_check = [&](const std::string& name, bool ok, std::string witness) {
    report.checks[name] = OracleCheck{ok, ok ? "" : std::move(witness)};
  };

  set_check("index", report.w_set_size == rs.weyl_order / p.k.weyl_order,
            "|W| = " + std::to_string(report.w_set_size) + ", |W_G|/|W_K| = " +
                std::to_string(rs.weyl_order / p.k.weyl_order));

  {
    bool ok = true;
    std::string witness;
    for (const Weight& b : report.all_beta_w)
      if (!is_dominant(p.k, b)) {
        ok = false;
        witness = to_string(b) + " is not K-dominant";
        break;
      }
    set_check("k_dominant", ok, witness);
  }

  MinimalWeightFamily family = minimal_highest_weights(p);
  std::vector<const Weight*> minimizers;
  {
    Rational min_norm;
    bool first = true;
    for (const Weight& b : report.all_beta_w) {
      Rational n = norm_sq(rs.killing_product, b);
      if (first || n < min_norm) {
        min_norm = n;
        first = false;
      }
    }
    std::set<Weight, WeightLess> argmin, direct;
    for (const Weight& b : report.all_beta_w)
      if (norm_sq(rs.killing_product, b) == min_norm) {
        argmin.insert(b);
        minimizers.push_back(&b);
      }
    for (const MinimalWeight& mw : family.members) direct.insert(mw.beta);
    bool ok = !first && min_norm == family.common_norm_sq && argmin == direct;
    set_check("min_norm", ok,
              ok ? "" : "brute-force minimum " + to_string(min_norm) +
                            " with " + std::to_string(argmin.size()) +
                            " minimizers vs direct " +
                            to_string(family.common_norm_sq) + " with " +
                            std::to_string(direct.size()));
  }

  {
    Integer total = 0;
    for (const Weight& b : report.all_beta_w)
      total += weyl_dimension(irrep(p.k, b));
    Integer expected = Integer(1) << p.m;
    set_check("dim_tiling", total == expected,
              "component dimensions sum to " + total.get_str() + ", not 2^m = " +
                  expected.get_str());
  }

  {
    bool ok = true;
    std::string witness;
    Weight shared;
    for (const Weight* b : minimizers) {
      auto [nu, w] = dominant_representative(rs, *b);
      if (shared.size() == 0)
        shared = nu;
      else if (nu != shared) {
        ok = false;
        witness = "minimizers reduce to " + to_string(shared) + " and " +
                  to_string(nu);
        break;
      }
    }
    if (ok && !(shared.size() > 0 && is_dominant_integral(rs, shared))) {
      ok = false;
      witness = "beta^G not G-dominant integral";
    }
    set_check("g_dominant", ok, witness);
  }

  {
    Rational expected = norm_sq(rs.killing_product, rs.delta) -
                        norm_sq(rs.killing_product, p.delta_k);
    bool ok = true;
    std::string witness;
    for (const Weight& b : report.all_beta_w) {
      Rational c = casimir_eigenvalue(rs.killing_product, b, p.delta_k);
      if (c != expected) {
        ok = false;
        witness = "<beta_w + 2 delta_K, beta_w> = " + to_string(c) + " at " +
                  to_string(b) + ", expected " + to_string(expected);
        break;
      }
    }
    set_check("casimir_k", ok, witness);
  }

  return report;
}

std::vector<Weight> spin_weights(const SymmetricPair& p, long long cap) {
  if (p.m >= 63 || (1LL << p.m) > cap)
    throw CapExceeded(p.name + ": 2^" + std::to_string(p.m) +
                      " spin weights exceed cap " + std::to_string(cap));
  std::vector<Weight> out;
  out.reserve(1u << p.m);
  for (long long mask = 0; mask < (1LL << p.m); ++mask) {
    Weight w = p.delta_p;
    for (int i = 0; i < p.m; ++i)
      if (mask >> i & 1) w -= p.noncompact_root(i);
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

OracleCheck spin_weight_tiling(const SymmetricPair& p, long long weyl_cap,
                               long long cap) {
  std::vector<Weight> direct = spin_weights(p, cap);
  OracleReport oracle = parthasarathy_oracle(p, weyl_cap);
  std::vector<Weight> tiled;
  for (const Weight& b : oracle.all_beta_w) {
    WeightMultiplicities wm = weight_multiplicities(irrep(p.k, b), cap);
    for (const auto& [w, m] : wm)
      for (Integer c = 0; c < m; ++c) tiled.push_back(w);
  }
  std::sort(tiled.begin(), tiled.end(), lex_less);
  if (tiled.size() != direct.size())
    return {false, "tiled weight count " + std::to_string(tiled.size()) +
                       " != 2^m = " + std::to_string(direct.size())};
  for (std::size_t i = 0; i < direct.size(); ++i)
    if (tiled[i] != direct[i])
      return {false, "multiset mismatch at " + to_string(direct[i])};
  return {true, ""};
}

}  // namespace diracsym
