#include "numsg/dual.hpp"

#include <algorithm>

#include "numsg/classify.hpp"
#include "numsg/error.hpp"
#include "numsg/ideal.hpp"

namespace numsg {
namespace {

void require_proper(const NumericalSemigroup& h, const char* op) {
  if (h.is_natural()) throw Error(ErrorCode::WholeLine, std::string(op) + " is not defined for N");
}

}  // namespace

NumericalSemigroup dual_of_maximal(const NumericalSemigroup& h) {
  require_proper(h, "dual_of_maximal");
  const auto maximal = RelativeIdeal::maximal(h);
  const auto quotient = ideal_subtract(maximal, maximal);
  detail::ensure(quotient.min() == 0, "M - M must have minimum 0");
  auto dual = NumericalSemigroup::from_small_elements(quotient.below(), quotient.conductor());

  const auto pf = pseudo_frobenius(h);
  for (Int x = 0; x <= h.conductor(); ++x) {
    const bool expected = h.contains(x) || std::binary_search(pf.begin(), pf.end(), x);
    detail::ensure(dual.contains(x) == expected, "M - M differs from H u PF(H)");
  }
  return dual;
}

std::vector<Int> l_set(const NumericalSemigroup& h) {
  require_proper(h, "l_set");
  const auto dual = dual_of_maximal(h);
  const Int m = h.multiplicity();
  std::vector<Int> out;
  // a - m not in H* forces a - m not in H, so a lies in Ap(H, m).
  for (Int a : h.apery_table()) {
    if (!dual.contains(a - m)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  detail::ensure(static_cast<Int>(out.size()) == m - type_of(h), "|L(H)| must equal m(H) - t(H)");
  return out;
}

std::vector<Int> apery_of_dual(const NumericalSemigroup& h) {
  require_proper(h, "apery_of_dual");
  const auto dual = dual_of_maximal(h);
  auto ap = apery_set(dual, h.multiplicity()).elements;

  auto expected = pseudo_frobenius(h);
  const auto l = l_set(h);
  expected.insert(expected.end(), l.begin(), l.end());
  std::sort(expected.begin(), expected.end());
  detail::ensure(ap == expected, "Ap(H*, m) differs from PF(H) u L(H)");
  return ap;
}

Int frobenius_of_dual(const NumericalSemigroup& h) {
  require_proper(h, "frobenius_of_dual");
  // m - 1 is always a gap, so the value is >= -1; -1 means H* = N.
  const Int value = h.frobenius() - h.multiplicity();
  detail::ensure(value == dual_of_maximal(h).frobenius(), "F(H*) differs from F(H) - m(H)");
  return value;
}

NumericalSemigroup med_cover(const NumericalSemigroup& h, Int element) {
  if (element == 1) throw Error(ErrorCode::BadParameters, "element 1 gives T = N, which has no dual");
  const auto ap = apery_set(h, element);
  std::vector<Int> gens;
  gens.reserve(ap.elements.size());
  gens.push_back(element);
  for (Int w : ap.elements) {
    if (w != 0) gens.push_back(element + w);
  }
  auto cover = NumericalSemigroup::from_generators(gens);
  detail::ensure(is_maximal_embedding_dimension(cover), "MED cover lacks maximal embedding dimension");
  detail::ensure(dual_of_maximal(cover) == h, "dual of the MED cover differs from H");
  return cover;
}

DualReport dual_almost_symmetry_report(const NumericalSemigroup& h) {
  require_proper(h, "dual_almost_symmetry_report");
  const auto dual = dual_of_maximal(h);
  DualReport r;
  r.almost_symmetric = is_almost_symmetric(h);
  r.dual_almost_symmetric = is_almost_symmetric(dual);
  r.multiplicity = h.multiplicity();
  r.type = type_of(h);
  r.dual_type = type_of(dual);
  r.type_sum_identity = r.multiplicity == r.type + r.dual_type;
  if (r.almost_symmetric) {
    detail::ensure(r.dual_almost_symmetric == r.type_sum_identity, "H almost symmetric but H* AS differs from m = t + t*");
  }
  return r;
}

}  // namespace numsg
