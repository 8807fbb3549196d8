#pragma once

// Relative ideals of a numerical semigroup: bounded-below subsets I of Z with
// I + H contained in I. Stored as the explicit members below a conductor
// bound; every integer at or above the bound is a member.

#include <functional>
#include <optional>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

class RelativeIdeal {
 public:
  /// Builds the ideal whose members in [lo, hi) are those satisfying `pred`,
  /// with nothing below lo and everything from hi on. Checks closure under
  /// adding generators of `base`.
  static RelativeIdeal from_window(const NumericalSemigroup& base, Int lo, Int hi,
                                   const std::function<bool(Int)>& pred);

  /// H as an ideal of itself.
  static RelativeIdeal whole(const NumericalSemigroup& base);
  /// M = H \ {0}.
  static RelativeIdeal maximal(const NumericalSemigroup& base);

  const NumericalSemigroup& base() const noexcept { return base_; }
  /// Members strictly below conductor(), ascending.
  const std::vector<Int>& below() const noexcept { return below_; }
  Int conductor() const noexcept { return conductor_; }
  Int min() const noexcept { return below_.empty() ? conductor_ : below_.front(); }

  bool contains(Int z) const;
  bool subset_of(const RelativeIdeal& other) const;
  /// First member of *this missing from `other`, if any.
  std::optional<Int> subset_witness(const RelativeIdeal& other) const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.conductor_ == b.conductor_ && a.below_ == b.below_;
  }

 private:
  RelativeIdeal(NumericalSemigroup base) : base_(std::move(base)) {}

  NumericalSemigroup base_;
  std::vector<Int> below_;
  Int conductor_ = 0;
};

/// I - J = {z : z + J contained in I}.
RelativeIdeal ideal_subtract(const RelativeIdeal& i, const RelativeIdeal& j);

}  // namespace numsg
