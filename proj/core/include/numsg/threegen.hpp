#pragma once

// Three-generated semigroups <a, b, c> that are not symmetric. Their relation
// ideal is generated by the 2x2 minors of
//
//   ( X^alpha    Y^beta     Z^gamma   )
//   ( Y^beta'    Z^gamma'   X^alpha'  )
//
// and the six exponents determine the pseudo-Frobenius numbers.

#include <optional>
#include <string>

#include "numsg/semigroup.hpp"

namespace numsg {

struct HerzogMatrix {
  Int alpha = 0;
  Int beta = 0;
  Int gamma = 0;
  Int alpha_p = 0;
  Int beta_p = 0;
  Int gamma_p = 0;

  /// Two-row layout "X^a Y^b Z^c / Y^b' Z^c' X^a'".
  std::string to_string() const;
  friend bool operator==(const HerzogMatrix&, const HerzogMatrix&) = default;
};

/// The generators in arrangement order with d*b = a + c and
/// gcd(a, b) = gcd(b, c) = 1.
struct PMThreeGenArrangement {
  Int a = 0;
  Int b = 0;
  Int c = 0;
  Int d = 0;
  friend bool operator==(const PMThreeGenArrangement&, const PMThreeGenArrangement&) = default;
};

struct PMThreeGenClass {
  bool symmetric = false;
  bool pseudo_symmetric = false;
  std::optional<Int> frobenius;
  std::optional<Int> genus;
};

/// Exponents for H = <a < b < c> (generators in ascending order).
HerzogMatrix herzog_matrix(const NumericalSemigroup& h);
/// Exponents with X, Y, Z labelling the given ordering of the minimal
/// generators.
HerzogMatrix herzog_matrix(const NumericalSemigroup& h, Int a, Int b, Int c);

/// Checks a = beta*gamma + beta'*gamma + beta'*gamma' (and cyclic) plus the
/// three kernel relations.
bool satisfies_relations(const HerzogMatrix& mat, Int a, Int b, Int c);

/// {alpha*a + (gamma+gamma')c - (a+b+c), beta'*b + (gamma+gamma')c - (a+b+c)}, ascending.
std::pair<Int, Int> pf_from_matrix(const NumericalSemigroup& h, const HerzogMatrix& mat);

/// alpha*beta*gamma = 1 or alpha'*beta'*gamma' = 1.
bool is_pseudo_symmetric_by_matrix(const NumericalSemigroup& h);

/// The lexicographically first arrangement (a < c) in normal form, if any.
std::optional<PMThreeGenArrangement> pm_arrangement_3(const NumericalSemigroup& h);

/// Symmetric iff d = gcd(a, c); pseudo-symmetric iff d = (a+1)/2 or (c+1)/2.
/// F and g are filled from the closed forms when either holds.
PMThreeGenClass classify_pm_threegen(const PMThreeGenArrangement& arr);

}  // namespace numsg
