#include "numsg/gluing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "numsg/error.hpp"

namespace numsg {
namespace {

bool is_generator(const NumericalSemigroup& h, Int v) {
  const auto& g = h.generators();
  return std::binary_search(g.begin(), g.end(), v);
}

std::optional<std::string> violation(const GluingSpec& s) {
  if (s.x <= 0 || s.y <= 0) return "x and y must be positive";
  if (std::gcd(s.x, s.y) != 1) return "gcd(x, y) = " + std::to_string(std::gcd(s.x, s.y)) + " != 1";
  if (!s.h1.contains(s.y)) return "y = " + std::to_string(s.y) + " is not in H1";
  if (is_generator(s.h1, s.y)) return "y = " + std::to_string(s.y) + " is a minimal generator of H1";
  if (!s.h2.contains(s.x)) return "x = " + std::to_string(s.x) + " is not in H2";
  if (is_generator(s.h2, s.x)) return "x = " + std::to_string(s.x) + " is a minimal generator of H2";
  return std::nullopt;
}

void collect_splits(const std::vector<Int>& gens, std::size_t idx, Int gcd_a, Int gcd_b, std::vector<Int>& a_side,
                    std::vector<Int>& b_side, std::vector<GluingSpec>& out) {
  // Both multipliers are at least 2, so a side whose gcd reaches 1 is dead.
  if (gcd_a == 1 || gcd_b == 1) return;
  if (idx == gens.size()) {
    if (b_side.empty()) return;
    std::vector<Int> a_red, b_red;
    for (Int v : a_side) a_red.push_back(v / gcd_a);
    for (Int v : b_side) b_red.push_back(v / gcd_b);
    GluingSpec spec{NumericalSemigroup::from_generators(a_red), NumericalSemigroup::from_generators(b_red), gcd_a,
                    gcd_b};
    if (!violation(spec)) out.push_back(std::move(spec));
    return;
  }
  const Int g = gens[idx];
  a_side.push_back(g);
  collect_splits(gens, idx + 1, std::gcd(gcd_a, g), gcd_b, a_side, b_side, out);
  a_side.pop_back();
  b_side.push_back(g);
  collect_splits(gens, idx + 1, gcd_a, std::gcd(gcd_b, g), a_side, b_side, out);
  b_side.pop_back();
}

bool complete_intersection(const NumericalSemigroup& h, std::map<std::vector<Int>, bool>& memo) {
  if (h.is_natural()) return true;
  if (auto it = memo.find(h.generators()); it != memo.end()) return it->second;
  bool result = false;
  for (const auto& spec : find_gluing_decompositions(h)) {
    if (complete_intersection(spec.h1, memo) && complete_intersection(spec.h2, memo)) {
      result = true;
      break;
    }
  }
  memo.emplace(h.generators(), result);
  return result;
}

}  // namespace

void validate(const GluingSpec& spec) {
  if (auto why = violation(spec)) throw Error(ErrorCode::InvalidGluing, *why);
}

NumericalSemigroup glue(const GluingSpec& spec) {
  validate(spec);
  std::vector<Int> gens;
  for (Int a : spec.h1.generators()) gens.push_back(spec.x * a);
  for (Int b : spec.h2.generators()) gens.push_back(spec.y * b);
  std::sort(gens.begin(), gens.end());
  auto h = NumericalSemigroup::from_generators(gens);
  if (h.generators() != gens) {
    throw Error(ErrorCode::InvalidGluing, "scaled generators {" + join(gens) + "} are not minimal");
  }
  return h;
}

std::vector<Int> apery_of_gluing(const GluingSpec& spec) {
  const auto glued = glue(spec);
  const auto ap1 = apery_set(spec.h1, spec.y).elements;
  const auto ap2 = apery_set(spec.h2, spec.x).elements;
  std::vector<Int> out;
  out.reserve(ap1.size() * ap2.size());
  for (Int s : ap1) {
    for (Int t : ap2) out.push_back(spec.x * s + spec.y * t);
  }
  std::sort(out.begin(), out.end());
  detail::ensure(std::adjacent_find(out.begin(), out.end()) == out.end(), "gluing Apery sums are not distinct");
  detail::ensure(static_cast<Int>(out.size()) == spec.x * spec.y, "gluing Apery set size differs from xy");
  detail::ensure(out == apery_set(glued, spec.x * spec.y).elements, "gluing Apery formula differs from Ap(H, xy)");
  return out;
}

std::vector<Int> pf_of_gluing(const GluingSpec& spec) {
  const auto glued = glue(spec);
  const auto pf1 = pseudo_frobenius(spec.h1);
  const auto pf2 = pseudo_frobenius(spec.h2);
  std::vector<Int> out;
  for (Int f : pf1) {
    for (Int fp : pf2) out.push_back(spec.x * f + spec.y * fp + spec.x * spec.y);
  }
  std::sort(out.begin(), out.end());
  detail::ensure(out.size() == pf1.size() * pf2.size() &&
                     std::adjacent_find(out.begin(), out.end()) == out.end(),
                 "gluing type is not multiplicative");
  detail::ensure(out == pseudo_frobenius(glued), "gluing PF formula differs from PF(H)");
  return out;
}

Int frobenius_of_gluing(const GluingSpec& spec) {
  const auto glued = glue(spec);
  const Int value = spec.x * spec.h1.frobenius() + spec.y * spec.h2.frobenius() + spec.x * spec.y;
  detail::ensure(value == glued.frobenius(), "gluing Frobenius formula mismatch");
  return value;
}

std::vector<GluingSpec> find_gluing_decompositions(const NumericalSemigroup& h) {
  std::vector<GluingSpec> out;
  const auto& gens = h.generators();
  if (gens.size() < 2) return out;
  std::vector<Int> a_side{gens.front()};
  std::vector<Int> b_side;
  collect_splits(gens, 1, gens.front(), 0, a_side, b_side, out);
  return out;
}

bool is_complete_intersection(const NumericalSemigroup& h) {
  std::map<std::vector<Int>, bool> memo;
  return complete_intersection(h, memo);
}

}  // namespace numsg
