#include "diracsym/root_system.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "diracsym/errors.hpp"

namespace diracsym {

namespace {

Weight basis_vector(Eigen::Index n, Eigen::Index i, const Rational& c = 1) {
  Weight v = Weight::Zero(n);
  v[i] = c;
  return v;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

bool CartanType::admissible() const {
  switch (family) {
    case CartanFamily::A: return rank >= 1;
    case CartanFamily::B: return rank >= 2;
    case CartanFamily::C: return rank >= 2;
    case CartanFamily::D: return rank >= 3;
    case CartanFamily::E: return rank >= 6 && rank <= 8;
    case CartanFamily::F: return rank == 4;
    case CartanFamily::G: return rank == 2;
  }
  return false;
}

std::string CartanType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType cartan_type(CartanFamily family, int rank) {
  CartanType t{family, rank};
  if (!t.admissible())
    throw DimensionMismatch("inadmissible Cartan type " + t.name());
  return t;
}

CartanType cartan_type_from_name(const std::string& name) {
  if (name.size() < 2) throw ParseError("bad Cartan type name '" + name + "'");
  char f = name[0];
  int rank;
  try {
    rank = std::stoi(name.substr(1));
  } catch (...) {
    throw ParseError("bad Cartan type name '" + name + "'");
  }
  switch (f) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G': {
      CartanType t{static_cast<CartanFamily>(f), rank};
      if (!t.admissible())
        throw ParseError("inadmissible Cartan type '" + name + "'");
      return t;
    }
    default:
      throw ParseError("bad Cartan type name '" + name + "'");
  }
}

long long classical_weyl_order(const CartanType& t) {
  const int r = t.rank;
  switch (t.family) {
    case CartanFamily::A: return factorial(r + 1);
    case CartanFamily::B:
    case CartanFamily::C: return (1LL << r) * factorial(r);
    case CartanFamily::D: return (1LL << (r - 1)) * factorial(r);
    case CartanFamily::E:
      if (r == 6) return 51840;
      if (r == 7) return 2903040;
      return 696729600;
    case CartanFamily::F: return 1152;
    case CartanFamily::G: return 12;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// RootSystem basics

int RootSystem::root_index(const Weight& v) const {
  auto it = root_lookup.find(v);
  if (it != root_lookup.end()) return it->second;
  Weight neg = -v;
  it = root_lookup.find(neg);
  if (it != root_lookup.end()) return it->second + num_positive();
  return -1;
}

Weight RootSystem::signed_root(int idx) const {
  const int n = num_positive();
  if (idx < n) return positive_roots[idx];
  return -positive_roots[idx - n];
}

Weight RootSystem::reflect(const Weight& root, const Weight& v) const {
  Rational c = cartan_pairing(standard_product, v, root);
  return v - c * root;
}

// ---------------------------------------------------------------------------
// Construction

namespace {

void finalize(RootSystem& rs) {
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), lex_less);
  const int n = rs.num_positive();
  rs.root_lookup.clear();
  for (int i = 0; i < n; ++i) rs.root_lookup.emplace(rs.positive_roots[i], i);
  check(static_cast<int>(rs.root_lookup.size()) == n,
        rs.name + ": duplicate positive roots");
  // Simple roots: the indecomposable positive roots. A non-simple positive
  // root always splits as a sum of two positive ones, so by induction every
  // root is a nonnegative integer combination of the simples.
  rs.simple_roots.clear();
  for (int i = 0; i < n; ++i) {
    bool decomposable = false;
    for (int j = 0; j < n && !decomposable; ++j) {
      if (j == i) continue;
      Weight rest = rs.positive_roots[i] - rs.positive_roots[j];
      if (rs.root_lookup.count(rest)) decomposable = true;
    }
    if (!decomposable) rs.simple_roots.push_back(i);
  }
  rs.rank = static_cast<int>(rs.simple_roots.size());
  rs.delta = Weight::Zero(rs.ambient_dim);
  for (const Weight& a : rs.positive_roots) rs.delta += a;
  rs.delta /= 2;
  rs.dim_g = rs.torus_rank + 2L * n;

  // Structure checks that hold for every genuine positive system.
  std::set<Rational> lengths;
  for (const Weight& a : rs.positive_roots)
    lengths.insert(norm_sq(rs.standard_product, a));
  check(lengths.size() <= 2, rs.name + ": more than two root lengths");
  if (lengths.size() == 2) {
    Rational ratio = *lengths.rbegin() / *lengths.begin();
    check(ratio == 2 || ratio == 3, rs.name + ": invalid length ratio");
  }
  for (int i : rs.simple_roots)
    check(cartan_pairing(rs.standard_product, rs.delta,
                         rs.positive_roots[i]) == 1,
          rs.name + ": <delta, theta>/<theta,theta> != 1/2 on a simple root");
  std::vector<Weight> simple;
  for (int i : rs.simple_roots) simple.push_back(rs.positive_roots[i]);
  check(positive_definite_on(rs.standard_product, simple),
        rs.name + ": standard form not positive definite on the simple roots");
}

}  // namespace

RootSystem build_root_system(const CartanType& t) {
  if (!t.admissible())
    throw DimensionMismatch("inadmissible Cartan type " + t.name());
  RootSystem rs;
  rs.cartan = t;
  rs.name = t.name();
  const int r = t.rank;
  auto e = [&](Eigen::Index i) { return basis_vector(rs.ambient_dim, i); };

  switch (t.family) {
    case CartanFamily::A: {
      rs.ambient_dim = r + 1;
      for (int i = 0; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) rs.positive_roots.push_back(e(i) - e(j));
      rs.standard_product = InnerProduct::identity(rs.ambient_dim);
      break;
    }
    case CartanFamily::B: {
      rs.ambient_dim = r;
      for (int i = 0; i < r; ++i) rs.positive_roots.push_back(e(i));
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          rs.positive_roots.push_back(e(i) - e(j));
          rs.positive_roots.push_back(e(i) + e(j));
        }
      rs.standard_product = InnerProduct::identity(rs.ambient_dim);
      break;
    }
    case CartanFamily::C: {
      rs.ambient_dim = r;
      for (int i = 0; i < r; ++i) rs.positive_roots.push_back(2 * e(i));
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          rs.positive_roots.push_back(e(i) - e(j));
          rs.positive_roots.push_back(e(i) + e(j));
        }
      rs.standard_product = InnerProduct::identity(rs.ambient_dim);
      break;
    }
    case CartanFamily::D: {
      rs.ambient_dim = r;
      for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
          rs.positive_roots.push_back(e(i) - e(j));
          rs.positive_roots.push_back(e(i) + e(j));
        }
      rs.standard_product = InnerProduct::identity(rs.ambient_dim);
      break;
    }
    case CartanFamily::E: {
      rs.ambient_dim = 8;
      if (r == 8) {
        for (int j = 1; j < 8; ++j)
          for (int i = 0; i < j; ++i) {
            rs.positive_roots.push_back(e(j) - e(i));
            rs.positive_roots.push_back(e(j) + e(i));
          }
        for (unsigned mask = 0; mask < 128; ++mask) {
          if (__builtin_popcount(mask) % 2 != 0) continue;  // even # of minus
          Weight v = Weight::Zero(8);
          v[7] = Rational(1, 2);
          for (int i = 0; i < 7; ++i)
            v[i] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
          rs.positive_roots.push_back(std::move(v));
        }
      } else if (r == 7) {
        for (int j = 1; j < 6; ++j)
          for (int i = 0; i < j; ++i) {
            rs.positive_roots.push_back(e(j) - e(i));
            rs.positive_roots.push_back(e(j) + e(i));
          }
        rs.positive_roots.push_back(e(7) - e(6));
        for (unsigned mask = 0; mask < 64; ++mask) {
          if (__builtin_popcount(mask) % 2 != 1) continue;  // odd # of minus
          Weight v = Weight::Zero(8);
          v[7] = Rational(1, 2);
          v[6] = Rational(-1, 2);
          for (int i = 0; i < 6; ++i)
            v[i] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
          rs.positive_roots.push_back(std::move(v));
        }
      } else {  // E6
        for (int j = 1; j < 5; ++j)
          for (int i = 0; i < j; ++i) {
            rs.positive_roots.push_back(e(j) - e(i));
            rs.positive_roots.push_back(e(j) + e(i));
          }
        for (unsigned mask = 0; mask < 32; ++mask) {
          if (__builtin_popcount(mask) % 2 != 0) continue;
          Weight v = Weight::Zero(8);
          v[7] = Rational(1, 2);
          v[6] = Rational(-1, 2);
          v[5] = Rational(-1, 2);
          for (int i = 0; i < 5; ++i)
            v[i] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
          rs.positive_roots.push_back(std::move(v));
        }
      }
      rs.standard_product = InnerProduct::identity(rs.ambient_dim);
      break;
    }
    case CartanFamily::F: {
      rs.ambient_dim = 4;
      for (int i = 0; i < 4; ++i) rs.positive_roots.push_back(e(i));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          rs.positive_roots.push_back(e(i) - e(j));
          rs.positive_roots.push_back(e(i) + e(j));
        }
      for (unsigned mask = 0; mask < 8; ++mask) {
        Weight v(4);
        v[0] = Rational(1, 2);
        for (int i = 0; i < 3; ++i)
          v[i + 1] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
        rs.positive_roots.push_back(std::move(v));
      }
      rs.standard_product = InnerProduct::identity(rs.ambient_dim);
      break;
    }
    case CartanFamily::G: {
      // Half-spin fundamental-weight basis (w1, w2) of SO4, with the G2
      // roots as in the G2/SO4 analysis; the standard form diag(1/3, 1)
      // Killing-normalizes to (1/16) diag(1/3, 1).
      rs.ambient_dim = 2;
      auto w = [&](long a, long b) {
        Weight v(2);
        v[0] = a;
        v[1] = b;
        return v;
      };
      rs.positive_roots = {w(2, 0), w(-3, 1), w(-1, 1), w(1, 1), w(0, 2), w(3, 1)};
      RationalMatrix g = RationalMatrix::Zero(2, 2);
      g(0, 0) = Rational(1, 3);
      g(1, 1) = 1;
      rs.standard_product = InnerProduct(std::move(g));
      break;
    }
  }

  rs.torus_rank = r;
  finalize(rs);
  check(rs.rank == r, rs.name + ": simple root count != rank");

  std::vector<Weight> all;
  for (const Weight& a : rs.positive_roots) {
    all.push_back(a);
    all.push_back(-a);
  }
  rs.killing_product = killing_normalize(rs.standard_product, all);
  check(strange_formula_check(rs.killing_product, rs.delta, rs.dim_g),
        rs.name + ": strange formula failed");
  rs.weyl_order = classical_weyl_order(t);
  rs.component_types = {t};
  return rs;
}

RootSystem root_system_from_roots(std::string name,
                                  std::vector<Weight> positive_roots,
                                  const InnerProduct& standard,
                                  const InnerProduct& killing,
                                  int torus_rank) {
  RootSystem rs;
  rs.name = std::move(name);
  rs.positive_roots = std::move(positive_roots);
  rs.ambient_dim = rs.positive_roots.empty() ? standard.dim()
                                             : rs.positive_roots.front().size();
  rs.standard_product = standard;
  rs.killing_product = killing;
  rs.torus_rank = torus_rank;
  if (!rs.positive_roots.empty()) {
    finalize(rs);
    rs.component_types = classify_subsystem(rs.positive_roots, rs.standard_product);
    rs.weyl_order = 1;
    for (const CartanType& t : rs.component_types)
      rs.weyl_order *= classical_weyl_order(t);
  } else {
    rs.delta = Weight::Zero(rs.ambient_dim);
    rs.dim_g = torus_rank;
    rs.weyl_order = 1;
  }
  return rs;
}

bool is_dominant(const RootSystem& rs, const Weight& mu) {
  if (mu.size() != rs.ambient_dim)
    throw DimensionMismatch("is_dominant: dimension mismatch");
  for (int i = 0; i < rs.num_simple(); ++i)
    if (inner(rs.standard_product, mu, rs.simple_root(i)) < 0) return false;
  return true;
}

bool is_dominant_integral(const RootSystem& rs, const Weight& mu) {
  if (!is_dominant(rs, mu)) return false;
  for (int i = 0; i < rs.num_simple(); ++i)
    if (!is_integer(cartan_pairing(rs.standard_product, mu, rs.simple_root(i))))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Weyl elements

WeylElement weyl_identity(const RootSystem& rs) {
  WeylElement w;
  w.perm.resize(2 * rs.num_positive());
  for (std::size_t k = 0; k < w.perm.size(); ++k)
    w.perm[k] = static_cast<std::uint8_t>(k);
  return w;
}

WeylElement weyl_simple_reflection(const RootSystem& rs, int i) {
  const int n = rs.num_positive();
  check(2 * n <= 255, rs.name + ": root count exceeds permutation encoding");
  WeylElement w;
  w.word = {static_cast<std::uint8_t>(i)};
  w.perm.resize(2 * n);
  const Weight& theta = rs.simple_root(i);
  for (int k = 0; k < 2 * n; ++k) {
    int img = rs.root_index(rs.reflect(theta, rs.signed_root(k)));
    check(img >= 0, rs.name + ": reflection does not permute the roots");
    w.perm[k] = static_cast<std::uint8_t>(img);
  }
  return w;
}

WeylElement weyl_compose(const RootSystem& rs, const WeylElement& a,
                         const WeylElement& b) {
  (void)rs;
  WeylElement w;
  w.word.reserve(a.word.size() + b.word.size());
  w.word.insert(w.word.end(), a.word.begin(), a.word.end());
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  w.perm.resize(a.perm.size());
  for (std::size_t k = 0; k < w.perm.size(); ++k) w.perm[k] = a.perm[b.perm[k]];
  return w;
}

WeylElement weyl_inverse(const RootSystem& rs, const WeylElement& w) {
  (void)rs;
  WeylElement inv;
  inv.word.assign(w.word.rbegin(), w.word.rend());
  inv.perm.resize(w.perm.size());
  for (std::size_t k = 0; k < w.perm.size(); ++k) inv.perm[w.perm[k]] = static_cast<std::uint8_t>(k);
  return inv;
}

Weight weyl_apply(const RootSystem& rs, const WeylElement& w, const Weight& v) {
  Weight x = v;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    x = rs.reflect(rs.simple_root(*it), x);
  return x;
}

RationalMatrix weyl_matrix(const RootSystem& rs, const WeylElement& w) {
  const Eigen::Index n = rs.ambient_dim;
  RationalMatrix m(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    m.col(j) = weyl_apply(rs, w, basis_vector(n, j));
  return m;
}

std::pair<Weight, WeylElement> dominant_representative(const RootSystem& rs,
                                                       const Weight& mu) {
  Weight x = mu;
  std::vector<std::uint8_t> steps;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < rs.num_simple(); ++i)
      if (inner(rs.standard_product, x, rs.simple_root(i)) < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    x = rs.reflect(rs.simple_root(neg), x);
    steps.push_back(static_cast<std::uint8_t>(neg));
  }
  // The element applied last comes first in the composition.
  WeylElement w = weyl_identity(rs);
  for (auto it = steps.begin(); it != steps.end(); ++it)
    w = weyl_compose(rs, weyl_simple_reflection(rs, *it), w);
  return {std::move(x), std::move(w)};
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// An element is identified by the images of the simple roots, packed into a
// 64-bit key (rank <= 8, signed root indices <= 254).
std::uint64_t element_key(const RootSystem& rs,
                          const std::vector<std::uint8_t>& perm) {
  std::uint64_t key = 0;
  for (int i = 0; i < rs.num_simple(); ++i)
    key = key << 8 | perm[rs.simple_roots[i]];
  return key;
}

}  // namespace

void for_each_weyl(const RootSystem& rs, long long cap,
                   const std::function<void(const WeylElement&)>& visit) {
  if (rs.weyl_order > cap)
    throw CapExceeded(rs.name + ": Weyl group order " +
                      std::to_string(rs.weyl_order) + " exceeds cap " +
                      std::to_string(cap));
  check(rs.num_simple() <= 8, rs.name + ": rank exceeds key encoding");
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.num_simple(); ++i)
    gens.push_back(weyl_simple_reflection(rs, i));

  std::unordered_set<std::uint64_t> visited;
  visited.reserve(static_cast<std::size_t>(rs.weyl_order) * 2);
  std::vector<WeylElement> level = {weyl_identity(rs)};
  visited.insert(element_key(rs, level.front().perm));
  long long seen = 0;
  while (!level.empty()) {
    std::vector<WeylElement> next;
    for (const WeylElement& w : level) {
      visit(w);
      ++seen;
      for (int s = 0; s < rs.num_simple(); ++s) {
        // w' = w o sigma_s (word grows on the right).
        WeylElement cand;
        cand.perm.resize(w.perm.size());
        for (std::size_t k = 0; k < w.perm.size(); ++k)
          cand.perm[k] = w.perm[gens[s].perm[k]];
        std::uint64_t key = element_key(rs, cand.perm);
        if (!visited.insert(key).second) continue;
        cand.word.reserve(w.word.size() + 1);
        cand.word = w.word;
        cand.word.push_back(static_cast<std::uint8_t>(s));
        next.push_back(std::move(cand));
      }
    }
    level = std::move(next);
  }
  check(seen == rs.weyl_order,
        rs.name + ": enumeration closed at " + std::to_string(seen) +
            " elements, expected " + std::to_string(rs.weyl_order));
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, long long cap) {
  std::vector<WeylElement> out;
  out.reserve(static_cast<std::size_t>(std::min<long long>(rs.weyl_order, cap)));
  for_each_weyl(rs, cap, [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

// ---------------------------------------------------------------------------
// Order of an arbitrary subsystem

namespace {

int rational_rank(const std::vector<Weight>& vecs) {
  if (vecs.empty()) return 0;
  RationalMatrix m(static_cast<Eigen::Index>(vecs.size()), vecs.front().size());
  for (std::size_t i = 0; i < vecs.size(); ++i)
    m.row(static_cast<Eigen::Index>(i)) = vecs[i].transpose();
  int rank = 0;
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < m.cols() && row < m.rows(); ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    m.row(row).swap(m.row(piv));
    for (Eigen::Index i = row + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(row, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    ++rank;
    ++row;
  }
  return rank;
}

CartanType classify_component(const std::vector<Weight>& pos,
                              const InnerProduct& p) {
  const int count = static_cast<int>(pos.size());
  const int rank = rational_rank(pos);
  std::set<Rational> lengths;
  for (const Weight& a : pos) lengths.insert(norm_sq(p, a));
  check(lengths.size() <= 2, "subsystem with more than two root lengths");
  if (lengths.size() == 1) {
    if (count == rank * (rank + 1) / 2) return CartanType{CartanFamily::A, rank};
    if (count == rank * (rank - 1)) return CartanType{CartanFamily::D, rank};
    if (rank == 6 && count == 36) return CartanType{CartanFamily::E, 6};
    if (rank == 7 && count == 63) return CartanType{CartanFamily::E, 7};
    if (rank == 8 && count == 120) return CartanType{CartanFamily::E, 8};
  } else {
    Rational lo = *lengths.begin(), hi = *lengths.rbegin();
    int n_short = 0;
    for (const Weight& a : pos)
      if (norm_sq(p, a) == lo) ++n_short;
    if (hi == 3 * lo && rank == 2 && count == 6)
      return CartanType{CartanFamily::G, 2};
    if (rank == 4 && count == 24) return CartanType{CartanFamily::F, 4};
    if (count == rank * rank) {
      if (n_short == rank) return CartanType{CartanFamily::C, rank};
      if (count - n_short == rank) return CartanType{CartanFamily::B, rank};
    }
  }
  throw AssertionFailure("unclassifiable root subsystem (rank " +
                         std::to_string(rank) + ", " + std::to_string(count) +
                         " positive roots)");
}

}  // namespace

std::vector<CartanType> classify_subsystem(
    const std::vector<Weight>& positive_roots, const InnerProduct& p) {
  const int n = static_cast<int>(positive_roots.size());
  std::vector<CartanType> types;
  if (n == 0) return types;
  // Connected components under non-orthogonality.
  std::vector<int> comp(n, -1);
  int n_comp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack = {i};
    comp[i] = n_comp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < n; ++b) {
        if (comp[b] >= 0) continue;
        if (inner(p, positive_roots[a], positive_roots[b]) != 0) {
          comp[b] = n_comp;
          stack.push_back(b);
        }
      }
    }
    ++n_comp;
  }
  for (int c = 0; c < n_comp; ++c) {
    std::vector<Weight> part;
    for (int i = 0; i < n; ++i)
      if (comp[i] == c) part.push_back(positive_roots[i]);
    types.push_back(classify_component(part, p));
  }
  return types;
}

long long weyl_order_of_roots(const std::vector<Weight>& positive_roots,
                              const InnerProduct& p) {
  long long order = 1;
  for (const CartanType& t : classify_subsystem(positive_roots, p))
    order *= classical_weyl_order(t);
  return order;
}

}  // namespace diracsym
