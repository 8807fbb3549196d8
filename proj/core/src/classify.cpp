#include "numsg/classify.hpp"

#include <algorithm>

#include "numsg/error.hpp"

namespace numsg {

std::string_view to_string(SymmetryKind kind) noexcept {
  switch (kind) {
    case SymmetryKind::Symmetric: return "symmetric";
    case SymmetryKind::PseudoSymmetric: return "pseudo-symmetric";
    case SymmetryKind::AlmostSymmetricOther: return "almost-symmetric";
    case SymmetryKind::NotAlmostSymmetric: return "none";
  }
  return "none";
}

bool is_symmetric(const NumericalSemigroup& h) {
  const Int f = h.frobenius();
  const bool by_genus = 2 * h.genus() == f + 1;
  bool by_scan = true;
  for (Int z = 0; z <= f && by_scan; ++z) by_scan = h.contains(z) || h.contains(f - z);
  detail::ensure(by_genus == by_scan, "symmetry: 2g = F + 1 disagrees with the z / F - z scan");
  detail::ensure(by_genus == (type_of(h) == 1), "symmetry: 2g = F + 1 disagrees with t = 1");
  return by_genus;
}

bool is_pseudo_symmetric(const NumericalSemigroup& h) {
  const Int f = h.frobenius();
  const bool by_genus = 2 * h.genus() == f + 2;
  bool by_scan = f >= 0 && f % 2 == 0;
  for (Int z = 0; z <= f && by_scan; ++z) {
    if (2 * z == f) continue;
    by_scan = h.contains(z) || h.contains(f - z);
  }
  detail::ensure(by_genus == by_scan, "pseudo-symmetry: 2g = F + 2 disagrees with the dichotomy scan");
  return by_genus;
}

std::optional<PfViolation> pf_symmetry_violation(const NumericalSemigroup& h) {
  const auto pf = pseudo_frobenius(h);
  const Int t = static_cast<Int>(pf.size());
  const Int f = pf.back();
  // pf[k] is f_{k+1}.
  for (Int i = 1; i <= t - 1; ++i) {
    const Int sum = pf[static_cast<std::size_t>(i - 1)] + pf[static_cast<std::size_t>(t - i - 1)];
    if (sum != f) return PfViolation{i, sum};
  }
  return std::nullopt;
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
  if (h.is_natural()) throw Error(ErrorCode::WholeLine, "the canonical ideal of N is not defined");
  const Int f = h.frobenius();
  return RelativeIdeal::from_window(h, 0, f + 1, [&](Int x) { return !h.contains(f - x); });
}

AperyPartition apery_partition(const NumericalSemigroup& h, Int n) {
  const auto ap = apery_set(h, n);
  const auto pf = pseudo_frobenius(h);
  const Int top = ap.elements.back();
  AperyPartition part;
  for (Int w : ap.elements) {
    const bool is_beta = w != top && std::binary_search(pf.begin(), pf.end(), w - n);
    (is_beta ? part.betas : part.alphas).push_back(w);
  }
  return part;
}

bool almost_symmetric_by_genus(const NumericalSemigroup& h) {
  return 2 * h.genus() == h.frobenius() + type_of(h);
}

bool almost_symmetric_by_pf_symmetry(const NumericalSemigroup& h) { return !pf_symmetry_violation(h).has_value(); }

bool almost_symmetric_by_gap_dichotomy(const NumericalSemigroup& h) {
  const auto pf = pseudo_frobenius(h);
  const Int f = h.frobenius();
  for (Int z : gaps(h)) {
    if (!h.contains(f - z) && !std::binary_search(pf.begin(), pf.end(), z)) return false;
  }
  return true;
}

bool almost_symmetric_by_apery_pairing(const NumericalSemigroup& h, Int n) {
  const auto part = apery_partition(h, n);
  const auto& alpha = part.alphas;
  const auto& beta = part.betas;
  const Int m = static_cast<Int>(alpha.size()) - 1;
  const Int t = static_cast<Int>(beta.size()) + 1;
  const Int top = alpha.back();
  for (Int i = 1; i <= m - 1; ++i) {
    if (alpha[static_cast<std::size_t>(i)] + alpha[static_cast<std::size_t>(m - i)] != top) return false;
  }
  for (Int j = 1; j <= t - 1; ++j) {
    if (beta[static_cast<std::size_t>(j - 1)] + beta[static_cast<std::size_t>(t - j - 1)] != top + n) return false;
  }
  return true;
}

bool almost_symmetric_by_canonical_ideal(const NumericalSemigroup& h) {
  if (h.is_natural()) return true;
  const auto maximal = RelativeIdeal::maximal(h);
  return canonical_ideal(h).subset_of(ideal_subtract(maximal, maximal));
}

bool is_almost_symmetric(const NumericalSemigroup& h) {
  const bool result = almost_symmetric_by_genus(h);
  detail::ensure(result == almost_symmetric_by_pf_symmetry(h), "almost symmetry: 2g = F + t disagrees with PF symmetry");
  detail::ensure(result == almost_symmetric_by_canonical_ideal(h),
                 "almost symmetry: 2g = F + t disagrees with K contained in M - M");
  return result;
}

SymmetryClass classify(const NumericalSemigroup& h) {
  SymmetryClass out;
  out.type = type_of(h);
  out.violation = pf_symmetry_violation(h);
  if (is_symmetric(h)) {
    out.kind = SymmetryKind::Symmetric;
  } else if (is_pseudo_symmetric(h)) {
    out.kind = SymmetryKind::PseudoSymmetric;
  } else if (is_almost_symmetric(h)) {
    out.kind = SymmetryKind::AlmostSymmetricOther;
  } else {
    out.kind = SymmetryKind::NotAlmostSymmetric;
    const auto pf = pseudo_frobenius(h);
    for (Int z : gaps(h)) {
      if (!h.contains(h.frobenius() - z) && !std::binary_search(pf.begin(), pf.end(), z)) {
        out.gap_witness = z;
        break;
      }
    }
  }
  return out;
}

}  // namespace numsg
