#pragma once

#include <map>
#include <string>
#include <vector>

#include "diracsym/root_system.hpp"

namespace diracsym {

enum class Structure { none, kahler, quaternion_kahler, spin9 };
enum class SpinSource { paper_table, asserted };

std::string to_string(Structure s);
Structure structure_from_string(const std::string& s);

// An equal-rank ("inner") symmetric pair (G, K): the root system of G plus
// the subset of positive roots whose root spaces lie in the complexified
// Lie algebra of K. Everything else is derived and validated on
// construction.
struct SymmetricPair {
  std::string name;
  RootSystem rs;                     // G
  std::vector<int> compact_positive; // indices into rs.positive_roots, ascending
  RootSystem k;                      // K's root subsystem (shared products)
  std::vector<int> noncompact_positive;  // complement, ascending
  Weight delta_k;
  Weight delta_p;
  long n_dim = 0;      // real dimension of G/K
  int m = 0;           // |Phi_p^+| = n/2
  Structure structure = Structure::none;
  bool kahler_also = false;  // for the complex Grassmannians
  bool has_spin = false;
  SpinSource spin_source = SpinSource::paper_table;

  bool is_compact_index(int positive_root_index) const;
  const Weight& noncompact_root(int i) const {  // i in 0..m-1, lex order
    return rs.positive_roots[noncompact_positive[i]];
  }
  bool is_kahler() const {
    return structure == Structure::kahler || kahler_also;
  }
};

struct PairMetadata {
  Structure structure = Structure::none;
  bool kahler_also = false;
  bool has_spin = false;
  SpinSource spin_source = SpinSource::paper_table;
};

/// Validating constructor. Checks the root-level bracket closure
/// (k+k -> k, k+p -> p, p+p -> k on positive-root sums that are roots) and
/// the half-sum identity delta_G = delta_K + delta_p; names the offending
/// roots on failure.
SymmetricPair make_pair(const RootSystem& rs, std::string name,
                        std::vector<int> compact_positive,
                        const PairMetadata& meta);

/// Same, with the compact set given by coordinates.
SymmetricPair make_pair_from_roots(const RootSystem& rs, std::string name,
                                   const std::vector<Weight>& compact_roots,
                                   const PairMetadata& meta);

/// (Phi_K^+, Phi_p^+) in the deterministic lexicographic enumeration; the
/// noncompact list is the index set alpha_1..alpha_m used downstream.
std::pair<std::vector<Weight>, std::vector<Weight>> classify_roots(
    const SymmetricPair& p);

struct Catalog {
  std::vector<std::string> order;            // report order
  std::map<std::string, SymmetricPair> entries;

  const SymmetricPair& at(const std::string& name) const;
  bool contains(const std::string& name) const;
  /// Insert or replace; file entries shadow built-ins by name.
  void put(SymmetricPair pair);
};

/// Built-in entries: HP^m (m=1..6), CP^m (m=3,5,7), Gr_2(C^{m+2}) (m even
/// <= 8), Gr~_4(R^{m+4}) (m even <= 8), G2/SO4, the three exceptional
/// E-series Wolf spaces, and F4/Spin9. All carry spin structures.
const Catalog& builtin_catalog();

/// The Wolf construction: K generated by the highest root beta (an Sp1
/// factor) and everything orthogonal to it. Used for every
/// Quaternion-Kahler entry.
SymmetricPair wolf_pair(const RootSystem& rs, std::string name,
                        const PairMetadata& meta);

}  // namespace diracsym
