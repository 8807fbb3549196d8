#pragma once

// Symmetry classes of numerical semigroups.
//
// H is symmetric when 2g = F + 1, pseudo-symmetric when 2g = F + 2 and almost
// symmetric when 2g = F + t. Almost symmetry has several equivalent
// characterizations; each is exposed separately so callers (and the test
// suites) can compare them.

#include <optional>
#include <string>
#include <vector>

#include "numsg/ideal.hpp"
#include "numsg/semigroup.hpp"

namespace numsg {

enum class SymmetryKind { Symmetric, PseudoSymmetric, AlmostSymmetricOther, NotAlmostSymmetric };

std::string_view to_string(SymmetryKind kind) noexcept;

/// Least index i (1-based, PF ascending with f_t = F) where f_i + f_{t-i} != F.
struct PfViolation {
  Int index = 0;
  Int sum = 0;
  friend bool operator==(const PfViolation&, const PfViolation&) = default;
};

struct SymmetryClass {
  SymmetryKind kind = SymmetryKind::Symmetric;
  Int type = 1;
  std::optional<PfViolation> violation;
  /// A gap z with F - z not in H and z not pseudo-Frobenius, when one exists.
  std::optional<Int> gap_witness;
};

/// Ap(H, n) split into the chain {0 < alpha_1 < ... < alpha_m} (whose maximum
/// gives F + n) and the remaining maximal elements beta_j (beta_j - n in PF).
struct AperyPartition {
  std::vector<Int> alphas;
  std::vector<Int> betas;
};

bool is_symmetric(const NumericalSemigroup& h);
bool is_pseudo_symmetric(const NumericalSemigroup& h);
/// Decided by 2g = F + t; also evaluates the PF-symmetry and canonical-ideal
/// characterizations and throws InconsistencyError on disagreement.
bool is_almost_symmetric(const NumericalSemigroup& h);

std::optional<PfViolation> pf_symmetry_violation(const NumericalSemigroup& h);
RelativeIdeal canonical_ideal(const NumericalSemigroup& h);
AperyPartition apery_partition(const NumericalSemigroup& h, Int n);
SymmetryClass classify(const NumericalSemigroup& h);

// Individual characterizations of almost symmetry.
bool almost_symmetric_by_genus(const NumericalSemigroup& h);
bool almost_symmetric_by_pf_symmetry(const NumericalSemigroup& h);
bool almost_symmetric_by_gap_dichotomy(const NumericalSemigroup& h);
bool almost_symmetric_by_apery_pairing(const NumericalSemigroup& h, Int n);
bool almost_symmetric_by_canonical_ideal(const NumericalSemigroup& h);

}  // namespace numsg
