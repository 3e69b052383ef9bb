#include "diracsym/symmetric_pair.hpp"

#include <algorithm>
#include <set>

#include "diracsym/errors.hpp"

namespace diracsym {

std::string to_string(Structure s) {
  switch (s) {
    case Structure::none: return "none";
    case Structure::kahler: return "kahler";
    case Structure::quaternion_kahler: return "quaternion_kahler";
    case Structure::spin9: return "spin9";
  }
  return "none";
}

Structure structure_from_string(const std::string& s) {
  if (s == "none") return Structure::none;
  if (s == "kahler") return Structure::kahler;
  if (s == "quaternion_kahler") return Structure::quaternion_kahler;
  if (s == "spin9") return Structure::spin9;
  throw ParseError("unknown structure '" + s + "'");
}

bool SymmetricPair::is_compact_index(int positive_root_index) const {
  return std::binary_search(compact_positive.begin(), compact_positive.end(),
                            positive_root_index);
}

SymmetricPair make_pair(const RootSystem& rs, std::string name,
                        std::vector<int> compact_positive,
                        const PairMetadata& meta) {
  std::sort(compact_positive.begin(), compact_positive.end());
  compact_positive.erase(
      std::unique(compact_positive.begin(), compact_positive.end()),
      compact_positive.end());
  const int n_pos = rs.num_positive();
  for (int i : compact_positive)
    if (i < 0 || i >= n_pos)
      throw DimensionMismatch(name + ": compact root index out of range");

  SymmetricPair p;
  p.name = std::move(name);
  p.rs = rs;
  p.compact_positive = std::move(compact_positive);
  for (int i = 0; i < n_pos; ++i)
    if (!p.is_compact_index(i)) p.noncompact_positive.push_back(i);

  // Root-level bracket closure on sums of positive roots:
  // k+k -> k, k+p -> p, p+p -> k.
  for (int i = 0; i < n_pos; ++i)
    for (int j = i; j < n_pos; ++j) {
      Weight sum = rs.positive_roots[i] + rs.positive_roots[j];
      int idx = p.rs.root_index(sum);
      if (idx < 0) continue;
      check(idx < n_pos, p.name + ": sum of positive roots not positive");
      bool ci = p.is_compact_index(i), cj = p.is_compact_index(j);
      bool sum_compact_expected = ci == cj;  // k+k and p+p land in k
      if (p.is_compact_index(idx) != sum_compact_expected)
        throw ClosureViolation(
            p.name + ": roots " + to_string(rs.positive_roots[i]) + " + " +
            to_string(rs.positive_roots[j]) + " = " + to_string(sum) +
            " violate the bracket classification");
    }

  p.delta_k = Weight::Zero(rs.ambient_dim);
  for (int i : p.compact_positive) p.delta_k += rs.positive_roots[i];
  p.delta_k /= 2;
  p.delta_p = Weight::Zero(rs.ambient_dim);
  for (int i : p.noncompact_positive) p.delta_p += rs.positive_roots[i];
  p.delta_p /= 2;
  if (p.delta_k + p.delta_p != rs.delta)
    throw BadHalfSums(p.name + ": delta_K + delta_p != delta_G");

  p.m = static_cast<int>(p.noncompact_positive.size());
  p.n_dim = 2L * p.m;

  std::vector<Weight> compact_roots;
  for (int i : p.compact_positive) compact_roots.push_back(rs.positive_roots[i]);
  p.k = root_system_from_roots(p.name + ".K", std::move(compact_roots),
                               rs.standard_product, rs.killing_product,
                               rs.torus_rank);

  p.structure = meta.structure;
  p.kahler_also = meta.kahler_also;
  p.has_spin = meta.has_spin;
  p.spin_source = meta.spin_source;
  return p;
}

SymmetricPair make_pair_from_roots(const RootSystem& rs, std::string name,
                                   const std::vector<Weight>& compact_roots,
                                   const PairMetadata& meta) {
  std::vector<int> indices;
  for (const Weight& w : compact_roots) {
    int idx = rs.root_index(w);
    if (idx < 0 || idx >= rs.num_positive())
      throw DimensionMismatch(name + ": " + to_string(w) +
                              " is not a positive root");
    indices.push_back(idx);
  }
  return make_pair(rs, std::move(name), std::move(indices), meta);
}

std::pair<std::vector<Weight>, std::vector<Weight>> classify_roots(
    const SymmetricPair& p) {
  std::vector<Weight> compact, noncompact;
  for (int i : p.compact_positive) compact.push_back(p.rs.positive_roots[i]);
  for (int i : p.noncompact_positive) noncompact.push_back(p.rs.positive_roots[i]);
  return {std::move(compact), std::move(noncompact)};
}

const SymmetricPair& Catalog::at(const std::string& name) const {
  auto it = entries.find(name);
  if (it == entries.end()) throw ParseError("unknown space '" + name + "'");
  return it->second;
}

bool Catalog::contains(const std::string& name) const {
  return entries.count(name) > 0;
}

void Catalog::put(SymmetricPair pair) {
  std::string name = pair.name;
  auto [it, inserted] = entries.insert_or_assign(std::move(name), std::move(pair));
  if (inserted) order.push_back(it->first);
}

namespace {

/// The long dominant root (= the highest root).
Weight highest_root(const RootSystem& rs) {
  Weight best;
  Rational best_norm = -1;
  for (const Weight& a : rs.positive_roots) {
    if (!is_dominant(rs, a)) continue;
    Rational n = norm_sq(rs.standard_product, a);
    if (n > best_norm) {
      best = a;
      best_norm = n;
    }
  }
  check(best.size() > 0, rs.name + ": no dominant root");
  return best;
}

}  // namespace

SymmetricPair wolf_pair(const RootSystem& rs, std::string name,
                        const PairMetadata& meta) {
  Weight beta = highest_root(rs);
  std::vector<int> compact;
  for (int i = 0; i < rs.num_positive(); ++i) {
    const Weight& a = rs.positive_roots[i];
    if (a == beta || inner(rs.standard_product, a, beta) == 0)
      compact.push_back(i);
  }
  return make_pair(rs, std::move(name), std::move(compact), meta);
}

namespace {

Catalog build_catalog() {
  Catalog cat;
  PairMetadata qk;
  qk.structure = Structure::quaternion_kahler;
  qk.has_spin = true;
  qk.spin_source = SpinSource::paper_table;

  // Quaternionic projective spaces HP^m = Sp_{m+1} / Sp_1 x Sp_m.
  for (int m = 1; m <= 6; ++m) {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::C, m + 1));
    cat.put(wolf_pair(rs, "HP" + std::to_string(m), qk));
  }

  // Complex projective spaces CP^m = SU_{m+1} / S(U_1 x U_m); spin iff m is
  // odd. CP^1 is omitted: as the round 2-sphere it duplicates the
  // Friedrich-limiting role of HP^1 = S^4.
  for (int m : {3, 5, 7}) {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::A, m));
    std::vector<int> compact;
    for (int i = 0; i < rs.num_positive(); ++i)
      if (rs.positive_roots[i][0] == 0) compact.push_back(i);
    PairMetadata meta;
    meta.structure = Structure::kahler;
    meta.has_spin = true;
    meta.spin_source = SpinSource::asserted;
    cat.put(make_pair(rs, "CP" + std::to_string(m), compact, meta));
  }

  // Complex 2-plane Grassmannians Gr_2(C^{m+2}); both Quaternion-Kahler and
  // Kahler; spin iff m even.
  for (int m : {2, 4, 6, 8}) {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::A, m + 1));
    PairMetadata meta = qk;
    meta.kahler_also = true;
    cat.put(wolf_pair(rs, "Gr2_C" + std::to_string(m + 2), meta));
  }

  // Oriented real 4-plane Grassmannians Gr~_4(R^{m+4}); spin iff m even.
  for (int m : {4, 6, 8}) {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::D, (m + 4) / 2));
    cat.put(wolf_pair(rs, "Gr4t_R" + std::to_string(m + 4), qk));
  }

  {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::G, 2));
    cat.put(wolf_pair(rs, "G2_SO4", qk));
  }
  {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::E, 6));
    cat.put(wolf_pair(rs, "E6_SU6SU2", qk));
  }
  {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::E, 7));
    cat.put(wolf_pair(rs, "E7_Spin12SU2", qk));
  }
  {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::E, 8));
    cat.put(wolf_pair(rs, "E8_E7SU2", qk));
  }

  // The Cayley plane F4 / Spin_9: compact roots e_i and e_i +- e_j.
  {
    RootSystem rs = build_root_system(cartan_type(CartanFamily::F, 4));
    std::vector<int> compact;
    for (int i = 0; i < rs.num_positive(); ++i)
      if (is_integer(rs.positive_roots[i][0])) compact.push_back(i);
    PairMetadata meta;
    meta.structure = Structure::spin9;
    meta.has_spin = true;
    meta.spin_source = SpinSource::paper_table;
    cat.put(make_pair(rs, "F4_Spin9", compact, meta));
  }
  return cat;
}

}  // namespace

const Catalog& builtin_catalog() {
  static const Catalog cat = build_catalog();
  return cat;
}

}  // namespace diracsym
