#pragma once

#include <vector>

#include "diracsym/representations.hpp"

namespace diracsym {

// The three Spin_9 spin components on the Cayley plane, as B4 highest
// weights with their dimensions: (3,1,1,1)/2 -> 128, (1,1,1,0) -> 84,
// (2,0,0,0) -> 44.
struct Spin9Component {
  Weight highest_weight;
  Integer dim;
};

std::vector<Spin9Component> spin9_components();

/// The B4 root system in the R^4 realization shared with F4, with
/// delta_K = (7,5,3,1)/2. Cached.
const RootSystem& spin9_root_system();

// Decomposition of V(beta) (x) R^9 with the conformal weight
// m(lambda) = (9 - |delta_K+lambda|^2 + |delta_K+beta|^2 - 1)/2 per row.
// Norms here are the *standard* SO_9 norm (identity gram), never the
// Killing one.
struct ConformalWeightRow {
  Weight lambda;
  Integer mult;   // always 1 for the three spin components; asserted
  Rational m_val;
  Integer dim;
};

struct ConformalWeightTable {
  Weight base;
  std::vector<ConformalWeightRow> rows;
};

ConformalWeightTable conformal_weights(const Weight& beta);

/// c_{beta,k} = (1/d(beta)) sum (-m(lambda))^k d(lambda) over the rows.
Rational higher_casimir(const Weight& beta, int k);

struct CasimirTable {
  std::vector<int> orders;
  std::vector<Weight> components;            // beta_1, beta_2, beta_3
  std::vector<std::vector<Rational>> values; // values[i][j] = c_{beta_i, k_j}
  std::vector<bool> verified;                // per order: paper ground truth exists
};

CasimirTable casimir_table(const std::vector<int>& orders);

struct CasimirArgmin {
  std::vector<Weight> minimizers;  // in component order
  Rational min_value;
  bool tie = false;
};

/// Component(s) minimizing c_{beta_i,k} over the three spin components.
CasimirArgmin casimir_argmin(int k);

}  // namespace diracsym
