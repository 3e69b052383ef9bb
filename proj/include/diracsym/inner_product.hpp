#pragma once

#include <vector>

#include "diracsym/rational.hpp"

namespace diracsym {

// A symmetric bilinear form on the weight space, given by its Gram matrix in
// the ambient coordinates. Two of these coexist per root system: the
// "standard" one the coordinates are stated in, and the one induced by the
// Killing form sign-changed.
struct InnerProduct {
  RationalMatrix gram;

  InnerProduct() = default;
  explicit InnerProduct(RationalMatrix g);  // validates symmetry

  Eigen::Index dim() const { return gram.rows(); }

  static InnerProduct identity(Eigen::Index n);
  static InnerProduct scaled_identity(Eigen::Index n, const Rational& c);
};

/// v^T gram w, exactly.
Rational inner(const InnerProduct& p, const Weight& v, const Weight& w);

Rational norm_sq(const InnerProduct& p, const Weight& v);

/// 2<v,root>/<root,root>; the Cartan pairing used for dominance/integrality.
Rational cartan_pairing(const InnerProduct& p, const Weight& v,
                        const Weight& root);

/// Rescales `standard` to the form induced by the Killing form sign-changed:
/// the unique positive multiple with <mu,mu> = sum_{a in roots} <mu,a>^2 for
/// every mu. `all_roots` must be the full root set (both signs). The scale is
/// computed from one root and re-checked on several others.
InnerProduct killing_normalize(const InnerProduct& standard,
                               const std::vector<Weight>& all_roots);

/// Freudenthal / De Vries: <delta,delta> == dim_g/24 under the Killing form.
bool strange_formula_check(const InnerProduct& killing, const Weight& delta_g,
                           long dim_g);

/// Leading principal minors of the Gram matrix restricted to `basis`
/// (columns are pairings of basis vectors); all > 0 iff positive definite on
/// the span.
bool positive_definite_on(const InnerProduct& p,
                          const std::vector<Weight>& basis);

/// Exact kernel basis of an m x n rational matrix (fraction-free Gauss).
std::vector<Weight> nullspace(const RationalMatrix& m);

}  // namespace diracsym
