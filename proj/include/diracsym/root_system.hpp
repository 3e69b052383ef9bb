#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diracsym/inner_product.hpp"
#include "diracsym/rational.hpp"

namespace diracsym {

enum class CartanFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  CartanFamily family;
  int rank;

  bool admissible() const;
  std::string name() const;  // "F4", "A1", ...
};

CartanType cartan_type(CartanFamily family, int rank);
CartanType cartan_type_from_name(const std::string& name);

// One compact simple group's root data in a fixed coordinate realization,
// plus the machinery shared by every algorithm downstream. Also used for the
// compact subgroup K of a symmetric pair, in which case `cartan` is empty
// and the type decomposition lives in `component_types`.
struct RootSystem {
  std::string name;
  std::optional<CartanType> cartan;     // set for the catalogued simple types
  Eigen::Index ambient_dim = 0;
  int rank = 0;                         // number of simple roots
  int torus_rank = 0;                   // = rank for simple groups; ambient torus rank for subsystems
  std::vector<Weight> positive_roots;   // sorted lexicographically
  std::vector<int> simple_roots;        // indices into positive_roots, lex order
  InnerProduct standard_product;
  InnerProduct killing_product;         // positive multiple of standard_product
  Weight delta;                         // half-sum of positive roots
  long dim_g = 0;                       // torus_rank + |Phi|
  long long weyl_order = 0;
  std::vector<CartanType> component_types;  // irreducible components
  std::map<Weight, int, WeightLess> root_lookup;  // positive root -> index

  const Weight& simple_root(int i) const { return positive_roots[simple_roots[i]]; }
  int num_simple() const { return static_cast<int>(simple_roots.size()); }
  int num_positive() const { return static_cast<int>(positive_roots.size()); }

  /// Index of a root in the signed indexing scheme: positive roots get their
  /// position in positive_roots, the negative of root i gets i + N. Returns
  /// -1 when the vector is not a root.
  int root_index(const Weight& v) const;
  bool is_root(const Weight& v) const { return root_index(v) >= 0; }

  /// Signed root by index (0..2N-1).
  Weight signed_root(int idx) const;

  /// Reflection across root^perp applied to v (standard product).
  Weight reflect(const Weight& root, const Weight& v) const;
};

/// Standard realization of an irreducible root system: Bourbaki coordinates
/// for the classical and E families, the R^4 realization for F4, and the
/// half-spin fundamental-weight basis for G2. Throws on inadmissible types.
RootSystem build_root_system(const CartanType& t);

/// Root system from an explicit positive-root list (used for the compact
/// subgroup K of a symmetric pair). The two products are inherited from the
/// ambient group; `torus_rank` is the ambient torus rank.
RootSystem root_system_from_roots(std::string name,
                                  std::vector<Weight> positive_roots,
                                  const InnerProduct& standard,
                                  const InnerProduct& killing, int torus_rank);

/// <mu, theta_i> >= 0 for every simple root.
bool is_dominant(const RootSystem& rs, const Weight& mu);

/// Dominant integral: additionally 2<mu,theta_i>/<theta_i,theta_i> integer.
bool is_dominant_integral(const RootSystem& rs, const Weight& mu);

// An element of the Weyl group. The reduced word lists simple-root ordinals
// (0-based, in the order of RootSystem::simple_roots); `perm` is the
// permutation induced on the signed root list, which determines the element
// (reflections fix the orthogonal complement of the root span pointwise, so
// equal permutations mean equal ambient matrices). The matrix itself is
// derived on demand.
struct WeylElement {
  std::vector<std::uint8_t> word;
  std::vector<std::uint8_t> perm;

  bool operator==(const WeylElement& o) const { return perm == o.perm; }
  int det() const { return word.size() % 2 == 0 ? 1 : -1; }
};

WeylElement weyl_identity(const RootSystem& rs);
WeylElement weyl_simple_reflection(const RootSystem& rs, int i);
/// a then b as functions: (a*b)(v) = a(b(v)).
WeylElement weyl_compose(const RootSystem& rs, const WeylElement& a,
                         const WeylElement& b);
WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& w);
Weight weyl_apply(const RootSystem& rs, const WeylElement& w, const Weight& v);
RationalMatrix weyl_matrix(const RootSystem& rs, const WeylElement& w);

/// Chamber reduction: returns (nu, w) with nu dominant and w(mu) = nu,
/// by repeatedly reflecting by a simple root with negative pairing (lowest
/// index first; deterministic).
std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs,
                                                       const Weight& mu);

/// Full Weyl group, breadth-first over simple reflections; deterministic
/// order (word length, then lexicographic word). Throws CapExceeded when the
/// group order exceeds `cap`.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long long cap);

/// Streams every group element exactly once, same order as enumerate_weyl,
/// without materializing the list. `visit` may keep what it needs.
void for_each_weyl(const RootSystem& rs, long long cap,
                   const std::function<void(const WeylElement&)>& visit);

/// Irreducible components of an arbitrary root subsystem, classified by
/// (rank, root count, length counts).
std::vector<CartanType> classify_subsystem(
    const std::vector<Weight>& positive_roots, const InnerProduct& p);

/// |W| for an arbitrary (possibly reducible) root subsystem, via the
/// classification above. Works where enumeration is out of reach.
long long weyl_order_of_roots(const std::vector<Weight>& positive_roots,
                              const InnerProduct& p);

/// Order formula per type: (r+1)!, 2^r r!, ..., 696729600 for E8.
long long classical_weyl_order(const CartanType& t);

}  // namespace diracsym
