#pragma once

// Brute-force ground truth. Nothing here uses the Apery-table membership or
// the maximality-based pseudo-Frobenius routine from semigroup.cpp; every
// invariant is read off a plain boolean membership table built by dynamic
// programming over the generators.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "numsg/gluing.hpp"
#include "numsg/semigroup.hpp"

namespace numsg::oracle {

struct OracleSemigroup {
  std::vector<Int> generators;  // minimal, ascending
  /// member[x] for 0 <= x < member.size(); all larger integers are members.
  std::vector<char> member;
  Int frobenius = -1;
  Int genus = 0;
  Int multiplicity = 1;
  Int embedding_dimension = 1;
  std::vector<Int> gaps;
  std::vector<Int> pseudo_frobenius;  // {-1} for N
  Int type = 1;

  bool contains(Int x) const {
    if (x < 0) return false;
    if (x >= static_cast<Int>(member.size())) return true;
    return member[static_cast<std::size_t>(x)] != 0;
  }
};

/// Membership table and invariants by definition.
OracleSemigroup oracle_semigroup(const std::vector<Int>& gens);

/// Ap(S, n) by direct scan of the table.
std::vector<Int> apery_by_scan(const OracleSemigroup& s, Int n);

// Symmetry classes by their literal definitions.
bool symmetric_by_definition(const OracleSemigroup& s);
bool pseudo_symmetric_by_definition(const OracleSemigroup& s);
/// Every gap z has F - z in S or z in PF(S).
bool almost_symmetric_by_definition(const OracleSemigroup& s);

/// H u PF(H) as an oracle table.
OracleSemigroup dual_by_definition(const OracleSemigroup& s);

/// Hard cap on the genus accepted by enumerate_by_genus.
inline constexpr int kDefaultGenusCap = 25;

/// Calls `visit` once for every numerical semigroup of genus <= g_max,
/// depth first with children in ascending order of the removed generator.
void enumerate_by_genus(int g_max, const std::function<void(const NumericalSemigroup&)>& visit,
                        int genus_cap = kDefaultGenusCap);
std::vector<NumericalSemigroup> enumerate_by_genus(int g_max, int genus_cap = kDefaultGenusCap);

struct Check {
  std::string name;
  std::string fast_value;
  std::string oracle_value;
  bool pass = false;
};

struct OracleReport {
  std::string subject;
  std::vector<Check> checks;

  bool all_pass() const;
  /// TAP-like lines: "ok 1 - frobenius" / "not ok 2 - genus # fast=.. oracle=..".
  std::string to_tap() const;
};

/// Runs the fast operations on `h` against their oracle counterparts.
OracleReport verify(const NumericalSemigroup& h);
/// Adds the closed-form checks for S(]b/a, b/(a-1)[).
OracleReport verify_opened_modular(Int a, Int b);
/// Adds the gluing formula checks.
OracleReport verify_gluing(const GluingSpec& spec);

/// Every worked instance with known values: the named semigroups, the
/// <a, a+2, ..., 3a-2> family for odd a <= 21, the opened modular examples
/// and the gluing examples (including <2T, k> for T = <3, b, 2b-3>).
std::vector<OracleReport> verify_goldens();

/// Valid gluings of T = <3, b, 2b-3> with N, x = 2 and odd y = k in T that is
/// not a generator, k < limit.
std::vector<GluingSpec> two_t_gluings(Int b, Int limit);

}  // namespace numsg::oracle
