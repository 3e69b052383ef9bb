#include "diracsym/f4_casimir.hpp"

#include "diracsym/errors.hpp"

namespace diracsym {

const RootSystem& spin9_root_system() {
  static const RootSystem rs = build_root_system(cartan_type(CartanFamily::B, 4));
  return rs;
}

namespace {

Weight b4_weight(const Rational& a, const Rational& b, const Rational& c,
                 const Rational& d) {
  Weight w(4);
  w[0] = a;
  w[1] = b;
  w[2] = c;
  w[3] = d;
  return w;
}

}  // namespace

std::vector<Spin9Component> spin9_components() {
  const RootSystem& b4 = spin9_root_system();
  std::vector<Weight> betas = {
      b4_weight(Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)),
      b4_weight(1, 1, 1, 0),
      b4_weight(2, 0, 0, 0),
  };
  std::vector<Spin9Component> out;
  for (Weight& b : betas) {
    Integer d = weyl_dimension(irrep(b4, b));
    out.push_back(Spin9Component{std::move(b), std::move(d)});
  }
  return out;
}

ConformalWeightTable conformal_weights(const Weight& beta) {
  const RootSystem& b4 = spin9_root_system();
  ConformalWeightTable table;
  table.base = beta;

  IrrepDescriptor base = irrep(b4, beta);
  IrrepDescriptor vector_rep = irrep(b4, b4_weight(1, 0, 0, 0));
  WeightMultiplicities decomposition = klimyk_tensor(base, vector_rep);

  // The conformal weight uses the *standard* SO_9 norm on R^4 (identity
  // gram), not the Killing normalization.
  const InnerProduct std9 = InnerProduct::identity(4);
  const Weight& delta_k = b4.delta;
  Rational base_norm = norm_sq(std9, delta_k + beta);

  Integer bookkeeping = 0;
  for (const auto& [lambda, mult] : decomposition) {
    ConformalWeightRow row;
    row.lambda = lambda;
    row.mult = mult;
    row.m_val =
        (9 - norm_sq(std9, delta_k + lambda) + base_norm - 1) / 2;
    row.dim = weyl_dimension(irrep(b4, lambda));
    bookkeeping += mult * row.dim;
    table.rows.push_back(std::move(row));
  }
  check(bookkeeping == 9 * weyl_dimension(base),
        "conformal weight table: dimension bookkeeping failed for " +
            to_string(beta));
  return table;
}

Rational higher_casimir(const Weight& beta, int k) {
  if (k < 0) throw DimensionMismatch("higher_casimir: order must be >= 0");
  ConformalWeightTable table = conformal_weights(beta);
  Rational sum = 0;
  for (const ConformalWeightRow& row : table.rows) {
    Rational term = 1;
    for (int i = 0; i < k; ++i) term *= -row.m_val;
    sum += Rational(row.mult) * term * Rational(row.dim);
  }
  return sum / Rational(weyl_dimension(irrep(spin9_root_system(), beta)));
}

CasimirTable casimir_table(const std::vector<int>& orders) {
  CasimirTable t;
  t.orders = orders;
  for (const Spin9Component& c : spin9_components())
    t.components.push_back(c.highest_weight);
  for (const Weight& beta : t.components) {
    // The paper's tensor decompositions are multiplicity-free; a repeated
    // component would make the printed tables ambiguous, so fail loudly.
    ConformalWeightTable table = conformal_weights(beta);
    for (const ConformalWeightRow& row : table.rows)
      check(row.mult == 1, "V(beta_i) (x) R^9 not multiplicity-free at " +
                               to_string(row.lambda));
  }
  for (std::size_t i = 0; i < t.components.size(); ++i) {
    std::vector<Rational> row;
    for (int k : orders) row.push_back(higher_casimir(t.components[i], k));
    t.values.push_back(std::move(row));
  }
  for (int k : orders) t.verified.push_back(k >= 0 && k <= 4);
  return t;
}

CasimirArgmin casimir_argmin(int k) {
  CasimirArgmin result;
  std::vector<Spin9Component> components = spin9_components();
  std::vector<Rational> values;
  for (const Spin9Component& c : components)
    values.push_back(higher_casimir(c.highest_weight, k));
  result.min_value = values.front();
  for (const Rational& v : values)
    if (v < result.min_value) result.min_value = v;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] == result.min_value)
      result.minimizers.push_back(components[i].highest_weight);
  result.tie = result.minimizers.size() > 1;
  return result;
}

}  // namespace diracsym
