#include "diracsym/inner_product.hpp"

#include "diracsym/errors.hpp"

namespace diracsym {

InnerProduct::InnerProduct(RationalMatrix g) : gram(std::move(g)) {
  if (gram.rows() != gram.cols())
    throw DimensionMismatch("gram matrix must be square");
  for (Eigen::Index i = 0; i < gram.rows(); ++i)
    for (Eigen::Index j = i + 1; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i))
        throw DimensionMismatch("gram matrix must be symmetric");
}

InnerProduct InnerProduct::identity(Eigen::Index n) {
  RationalMatrix g = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) g(i, i) = 1;
  return InnerProduct(std::move(g));
}

InnerProduct InnerProduct::scaled_identity(Eigen::Index n, const Rational& c) {
  RationalMatrix g = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) g(i, i) = c;
  return InnerProduct(std::move(g));
}

Rational inner(const InnerProduct& p, const Weight& v, const Weight& w) {
  if (v.size() != p.dim() || w.size() != p.dim())
    throw DimensionMismatch("inner: vector/gram dimension mismatch");
  Rational acc = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (Eigen::Index j = 0; j < w.size(); ++j)
      if (w[j] != 0) row += p.gram(i, j) * w[j];
    acc += v[i] * row;
  }
  return acc;
}

Rational norm_sq(const InnerProduct& p, const Weight& v) {
  return inner(p, v, v);
}

Rational cartan_pairing(const InnerProduct& p, const Weight& v,
                        const Weight& root) {
  return 2 * inner(p, v, root) / inner(p, root, root);
}

InnerProduct killing_normalize(const InnerProduct& standard,
                               const std::vector<Weight>& all_roots) {
  if (all_roots.empty()) throw DimensionMismatch("killing_normalize: empty root set");
  // <mu,mu>_new = sum_a <mu,a>_new^2 with new = c*std forces
  // c = <mu,mu>_std / sum_a <mu,a>_std^2, independently of mu; computed for
  // the first root and re-checked on further test vectors.
  auto scale_for = [&](const Weight& mu) -> Rational {
    Rational denom = 0;
    for (const Weight& a : all_roots) {
      Rational s = inner(standard, mu, a);
      denom += s * s;
    }
    if (denom == 0)
      throw DimensionMismatch("killing_normalize: degenerate standard form");
    return inner(standard, mu, mu) / denom;
  };
  Rational c = scale_for(all_roots.front());
  std::size_t checked = 0;
  for (std::size_t i = 1; i < all_roots.size() && checked < 3; i += 1 + i / 2) {
    check(scale_for(all_roots[i]) == c,
          "killing_normalize: scale depends on the test vector");
    ++checked;
  }
  if (c <= 0)
    throw DimensionMismatch("killing_normalize: standard form not positive");
  return InnerProduct(RationalMatrix(c * standard.gram));
}

bool strange_formula_check(const InnerProduct& killing, const Weight& delta_g,
                           long dim_g) {
  return norm_sq(killing, delta_g) == Rational(dim_g, 24);
}

bool positive_definite_on(const InnerProduct& p,
                          const std::vector<Weight>& basis) {
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());
  RationalMatrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = inner(p, basis[i], basis[j]);
  // Leading principal minors via exact elimination.
  for (Eigen::Index k = 0; k < n; ++k) {
    if (b(k, k) <= 0) return false;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      Rational f = b(i, k) / b(k, k);
      for (Eigen::Index j = k; j < n; ++j) b(i, j) -= f * b(k, j);
    }
  }
  return true;
}

std::vector<Weight> nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(r).swap(a.row(piv));
    Rational d = a(r, c);
    for (Eigen::Index j = 0; j < cols; ++j) a(r, j) /= d;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (Eigen::Index j = 0; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<Weight> basis;
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivot_col) is_pivot[c] = true;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Weight v = Weight::Zero(cols);
    v[free] = 1;
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(pivot_col.size()); ++k)
      v[pivot_col[k]] = -a(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace diracsym
