#pragma once

// Canonical representation of a numerical semigroup and its basic
// invariants.
//
// A NumericalSemigroup is stored as its minimal generating set together with
// the Apery table with respect to the multiplicity m: entry i is the least
// element congruent to i mod m. Membership is then a single comparison.
//
// Conventions for the whole line N = <1>: F(N) = -1, PF(N) = {-1}, t(N) = 1.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace numsg {

using Int = std::int64_t;

class NumericalSemigroup {
 public:
  /// The semigroup generated by `gens`. Input need not be minimal, sorted or
  /// duplicate-free; the result is canonical.
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  /// The semigroup whose members below `conductor` are exactly `small`
  /// (which must contain 0) and which contains every integer >= conductor.
  /// Throws if the set is not closed under addition.
  static NumericalSemigroup from_small_elements(std::span<const Int> small, Int conductor);

  /// N itself.
  static NumericalSemigroup natural();

  const std::vector<Int>& generators() const noexcept { return gens_; }
  /// Apery table with respect to the multiplicity, indexed by residue.
  const std::vector<Int>& apery_table() const noexcept { return apery_; }

  Int multiplicity() const noexcept { return gens_.front(); }
  Int embedding_dimension() const noexcept { return static_cast<Int>(gens_.size()); }
  Int frobenius() const noexcept { return frobenius_; }
  Int genus() const noexcept { return genus_; }
  /// Smallest c with every integer >= c a member (F + 1).
  Int conductor() const noexcept { return frobenius_ + 1; }
  bool is_natural() const noexcept { return gens_.size() == 1; }

  bool contains(Int x) const noexcept {
    if (x < 0) return false;
    const Int m = multiplicity();
    return x >= apery_[static_cast<std::size_t>(x % m)];
  }

  /// Comma-separated generators, e.g. "5,8,11,12".
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.gens_ == b.gens_;
  }
  friend bool operator<(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.gens_ < b.gens_;
  }

 private:
  NumericalSemigroup() = default;

  std::vector<Int> gens_;
  std::vector<Int> apery_;
  Int frobenius_ = -1;
  Int genus_ = 0;
};

/// Apery set Ap(H, n) = {h in H : h - n not in H}, sorted ascending.
struct AperySet {
  Int base = 0;
  std::vector<Int> elements;
};

bool contains(const NumericalSemigroup& h, Int x) noexcept;
AperySet apery_set(const NumericalSemigroup& h, Int n);
Int frobenius(const NumericalSemigroup& h) noexcept;
Int genus(const NumericalSemigroup& h) noexcept;
std::vector<Int> gaps(const NumericalSemigroup& h);
/// Pseudo-Frobenius numbers, ascending. PF(N) = {-1}.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& h);
Int type_of(const NumericalSemigroup& h);
bool is_maximal_embedding_dimension(const NumericalSemigroup& h) noexcept;

/// Parses "5,8,11,12" (whitespace tolerated).
NumericalSemigroup parse_semigroup(std::string_view text);
std::vector<Int> parse_int_list(std::string_view text);
std::string join(std::span<const Int> values, std::string_view sep = ",");

}  // namespace numsg
