#pragma once

#include <initializer_list>
#include <vector>

#include "numsg/error.hpp"
#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"

namespace numsg::testing {

using IntVec = std::vector<Int>;

inline NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }

/// <a, a+2, ..., 3a-2> for odd a.
inline NumericalSemigroup odd_family(Int a) {
  IntVec gens;
  for (Int v = a; v <= 3 * a - 2; v += 2) gens.push_back(v);
  return NumericalSemigroup::from_generators(gens);
}

/// Every semigroup of genus <= g, built once per process.
inline const std::vector<NumericalSemigroup>& up_to_genus(int g) {
  static std::vector<std::vector<NumericalSemigroup>> cache(oracle::kDefaultGenusCap + 1);
  auto& slot = cache[static_cast<std::size_t>(g)];
  if (slot.empty()) slot = oracle::enumerate_by_genus(g);
  return slot;
}

template <class F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected numsg::Error");
}

}  // namespace numsg::testing
