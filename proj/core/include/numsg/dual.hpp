#pragma once

// The dual of the maximal ideal, H* = M - M = H u PF(H), and the invariants
// relating H to H*.

#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

/// H* computed as the ideal quotient M - M; checked against H u PF(H).
NumericalSemigroup dual_of_maximal(const NumericalSemigroup& h);

/// L(H) = {a in H : a - m(H) not in H*}. Its size is m(H) - t(H).
std::vector<Int> l_set(const NumericalSemigroup& h);

/// Ap(H*, m(H)), which equals PF(H) u L(H).
std::vector<Int> apery_of_dual(const NumericalSemigroup& h);

/// F(H*) = F(H) - m(H).
Int frobenius_of_dual(const NumericalSemigroup& h);

/// T = <h, h + alpha_1, ..., h + alpha_{h-1}> built from Ap(H, h). T has
/// maximal embedding dimension and T* = H.
NumericalSemigroup med_cover(const NumericalSemigroup& h, Int element);

struct DualReport {
  bool almost_symmetric = false;
  bool dual_almost_symmetric = false;
  Int multiplicity = 0;
  Int type = 0;
  Int dual_type = 0;
  /// m(H) = t(H) + t(H*).
  bool type_sum_identity = false;
};

/// When H is almost symmetric, H* is almost symmetric iff m = t + t*.
DualReport dual_almost_symmetry_report(const NumericalSemigroup& h);

}  // namespace numsg
