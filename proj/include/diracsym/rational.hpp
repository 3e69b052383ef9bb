#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <string>

namespace Eigen {

// Exact rational scalar support (see the custom-scalar section of the Eigen
// manual). All costs are rough; nothing here is performance critical.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace diracsym {

// Exact scalar for everything: arbitrary-precision rationals, always kept in
// canonical form (lowest terms, positive denominator) by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// A weight (or root) in the ambient coordinate realization of the weight
// space of a fixed maximal torus.
using Weight = VectorX<Rational>;
using RationalMatrix = MatrixX<Rational>;

/// Renders "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p/q" etc.; canonicalizes; throws ParseError on junk.
Rational rational_from_string(const std::string& s);

Rational rational(long num, long den = 1);

bool is_integer(const Rational& q);

/// Floor of an exact rational (used only in tests and rendering).
Integer to_integer(const Rational& q);  // requires is_integer

// Exact lexicographic order on coordinate vectors; the tie-break order used
// everywhere a deterministic enumeration is required.
bool lex_less(const Weight& a, const Weight& b);

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const {
    return lex_less(a, b);
  }
};

std::string to_string(const Weight& w);  // "(a, b, ...)" with exact entries

}  // namespace diracsym
