#pragma once

#include <map>
#include <vector>

#include "diracsym/root_system.hpp"

namespace diracsym {

// A finite-dimensional irreducible representation, named by its dominant
// integral highest weight.
struct IrrepDescriptor {
  const RootSystem* rs;
  Weight highest_weight;
};

IrrepDescriptor irrep(const RootSystem& rs, Weight highest_weight);  // validates

using WeightMultiplicities = std::map<Weight, Integer, WeightLess>;

/// Weyl dimension formula: prod <lambda+delta,a>/<delta,a> over positive
/// roots. Exact; the result is asserted integral.
Integer weyl_dimension(const IrrepDescriptor& ir);

/// Full weight system with multiplicities by the Freudenthal recursion,
/// iterating over the dominant weights below lambda in height order and
/// expanding Weyl orbits. Throws CapExceeded if the dimension exceeds `cap`.
WeightMultiplicities weight_multiplicities(const IrrepDescriptor& ir,
                                           long long cap = 100000);

/// Tensor product decomposition by the Klimyk rule: highest weights with
/// multiplicities, keyed by weight. Signed accumulations must come out
/// nonnegative; a surviving negative count is an internal error.
WeightMultiplicities klimyk_tensor(const IrrepDescriptor& a,
                                   const IrrepDescriptor& b,
                                   long long cap = 100000);

/// Casimir eigenvalue in Freudenthal form: <lambda + 2 delta, lambda>.
Rational casimir_eigenvalue(const InnerProduct& p, const Weight& lambda,
                            const Weight& delta);

}  // namespace diracsym
