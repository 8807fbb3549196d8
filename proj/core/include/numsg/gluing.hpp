#pragma once

// Gluings <x*H1, y*H2> with y in H1 and x in H2 both non-generators and
// gcd(x, y) = 1, plus complete-intersection detection by recursive
// decomposition.

#include <string>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

struct GluingSpec {
  NumericalSemigroup h1 = NumericalSemigroup::natural();
  NumericalSemigroup h2 = NumericalSemigroup::natural();
  Int x = 0;
  Int y = 0;

  friend bool operator==(const GluingSpec&, const GluingSpec&) = default;
};

/// Throws InvalidGluing naming the first violated condition.
void validate(const GluingSpec& spec);

/// <x*H1, y*H2>; the union of scaled generators must already be minimal.
NumericalSemigroup glue(const GluingSpec& spec);

/// Ap(H, xy) = {x*s + y*t : s in Ap(H1, y), t in Ap(H2, x)}, ascending.
std::vector<Int> apery_of_gluing(const GluingSpec& spec);

/// PF(H) = {x*f + y*f' + xy : f in PF(H1), f' in PF(H2)}, ascending.
std::vector<Int> pf_of_gluing(const GluingSpec& spec);

/// F(H) = x*F(H1) + y*F(H2) + xy.
Int frobenius_of_gluing(const GluingSpec& spec);

/// Every split of the minimal generators into A | B (A holding the smallest
/// generator) for which <A/gcd(A)>, <B/gcd(B)>, x = gcd(A), y = gcd(B) is a
/// valid gluing. Empty for N.
std::vector<GluingSpec> find_gluing_decompositions(const NumericalSemigroup& h);

bool is_complete_intersection(const NumericalSemigroup& h);

}  // namespace numsg
