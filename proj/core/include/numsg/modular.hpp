#pragma once

// Proportionally modular semigroups S(a, b, c) = {x in N : a*x mod b <= c*x},
// semigroups of rational intervals, and opened modular semigroups
// S(]b/a, b/(a-1)[) together with their closed-form invariants.
//
// All endpoint comparisons are exact (128-bit cross multiplication).

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg {

struct ProportionalInequality {
  Int a = 1;
  Int b = 1;
  Int c = 1;
};

/// Positive rational in lowest terms.
class Rational {
 public:
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) noexcept {
    const __int128 l = static_cast<__int128>(x.num_) * y.den_;
    const __int128 r = static_cast<__int128>(y.num_) * x.den_;
    return l < r ? std::strong_ordering::less : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Int num_;
  Int den_;
};

struct RationalInterval {
  Rational lo{1, 1};
  Rational hi{1, 1};
  bool lo_open = false;
  bool hi_open = false;

  /// "[11/5..11/4]", "]11/5..11/4[" or "(11/5..11/4)".
  std::string to_string() const;
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

/// Parses "a:b:c".
ProportionalInequality parse_inequality(std::string_view text);
/// Parses "[lo..hi]" with '[' for closed and '(' or ']' for open ends; the
/// closing bracket may be omitted, in which case it mirrors the opening one.
RationalInterval parse_interval(std::string_view text);

NumericalSemigroup solve_inequality(const ProportionalInequality& q);
NumericalSemigroup semigroup_of_interval(const RationalInterval& interval);
/// The closed interval [b/a, b/(a-c)]; requires c < a.
RationalInterval interval_of_inequality(const ProportionalInequality& q);

/// S(]b/a, b/(a-1)[) for 2 <= a <= b.
NumericalSemigroup opened_modular(Int a, Int b);
/// {0, m, m+1, ...}.
NumericalSemigroup half_line(Int m);

/// Least k in [1, a-1] with kb mod a + floor(kb/a)c > (c-1)b + a - c.
/// Requires c < a < b.
Int delta(Int a, Int b, Int c);
/// F(S(a, b, c)) = b - floor(delta*b/a) - 1.
Int frobenius_modular(Int a, Int b, Int c);

struct OpenedModularInvariants {
  Int frobenius = 0;
  Int genus = 0;
  Int type = 0;
};

/// F = b, g = (b + d + d' - 1)/2, t = d + d' - 1 with d = gcd(a, b), d' = gcd(a-1, b).
OpenedModularInvariants opened_modular_invariants(Int a, Int b);
/// Genus of S([b/a, b/(a-1)]) = (b + 1 - d - d')/2.
Int closed_interval_genus(Int a, Int b);

struct MultiplicityResult {
  Int value = 0;
  /// False when delta is undefined (a = b) and the value was read off the
  /// semigroup directly.
  bool from_formula = true;
};

/// m = floor(delta*b/a) + 1 with delta evaluated at c = 1.
MultiplicityResult multiplicity_opened_modular(Int a, Int b);

/// An ordering of the minimal generators with gcd(a_i, a_{i+1}) = 1 and
/// a_{i-1} + a_{i+1} = 0 mod a_i, if one exists (H proportionally modular).
std::optional<std::vector<Int>> proportionally_modular_arrangement(const NumericalSemigroup& h);

}  // namespace numsg
