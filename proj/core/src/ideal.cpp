#include "numsg/ideal.hpp"

#include <algorithm>

#include "numsg/error.hpp"

namespace numsg {

RelativeIdeal RelativeIdeal::from_window(const NumericalSemigroup& base, Int lo, Int hi,
                                         const std::function<bool(Int)>& pred) {
  RelativeIdeal ideal(base);
  hi = std::max(hi, lo);
  // Shrink the conductor bound while the member just below it is present.
  Int c = hi;
  while (c > lo && pred(c - 1)) --c;
  ideal.conductor_ = c;
  for (Int z = lo; z < c; ++z) {
    if (pred(z)) ideal.below_.push_back(z);
  }
  for (Int z : ideal.below_) {
    for (Int a : base.generators()) {
      if (!ideal.contains(z + a)) {
        throw Error(ErrorCode::BadParameters,
                    "set is not a relative ideal: " + std::to_string(z) + " + " + std::to_string(a) + " missing");
      }
    }
  }
  return ideal;
}

RelativeIdeal RelativeIdeal::whole(const NumericalSemigroup& base) {
  return from_window(base, 0, base.conductor(), [&](Int z) { return base.contains(z); });
}

RelativeIdeal RelativeIdeal::maximal(const NumericalSemigroup& base) {
  return from_window(base, 1, std::max<Int>(base.conductor(), 1), [&](Int z) { return z > 0 && base.contains(z); });
}

bool RelativeIdeal::contains(Int z) const {
  if (z >= conductor_) return true;
  return std::binary_search(below_.begin(), below_.end(), z);
}

std::optional<Int> RelativeIdeal::subset_witness(const RelativeIdeal& other) const {
  for (Int z : below_) {
    if (!other.contains(z)) return z;
  }
  for (Int z = conductor_; z < other.conductor(); ++z) {
    if (!other.contains(z)) return z;
  }
  return std::nullopt;
}

bool RelativeIdeal::subset_of(const RelativeIdeal& other) const { return !subset_witness(other).has_value(); }

RelativeIdeal ideal_subtract(const RelativeIdeal& i, const RelativeIdeal& j) {
  // z + J is contained in I iff z + g lies in I for the H-generators g of J;
  // those all lie below conductor(J) + m(H).
  const Int m = i.base().multiplicity();
  std::vector<Int> probes;
  for (Int z : j.below()) probes.push_back(z);
  for (Int z = j.conductor(); z < j.conductor() + m; ++z) probes.push_back(z);

  // z + min(J) >= min(I) is necessary; z >= conductor(I) - min(J) is sufficient.
  const Int lo = i.min() - j.min();
  const Int hi = i.conductor() - j.min();
  return RelativeIdeal::from_window(i.base(), lo, hi, [&](Int z) {
    return std::all_of(probes.begin(), probes.end(), [&](Int g) { return i.contains(z + g); });
  });
}

}  // namespace numsg
