#include "numsg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "numsg/classify.hpp"
#include "numsg/dual.hpp"
#include "numsg/error.hpp"
#include "numsg/gluing.hpp"
#include "numsg/modular.hpp"

namespace numsg::oracle {
namespace {

// Fills invariants from a membership table whose tail (last `period`
// entries) is known to be all members.
OracleSemigroup finish(std::vector<char> member) {
  OracleSemigroup s;
  const Int size = static_cast<Int>(member.size());
  Int frob = -1;
  for (Int x = size - 1; x >= 1; --x) {
    if (!member[static_cast<std::size_t>(x)]) {
      frob = x;
      break;
    }
  }
  s.frobenius = frob;
  for (Int x = 1; x <= frob; ++x) {
    if (!member[static_cast<std::size_t>(x)]) s.gaps.push_back(x);
  }
  s.genus = static_cast<Int>(s.gaps.size());
  s.member = std::move(member);

  s.multiplicity = 1;
  while (!s.contains(s.multiplicity)) ++s.multiplicity;

  // Minimal generators: nonzero members that are not a sum of two nonzero members.
  for (Int x = 1; x <= std::max<Int>(frob, 0) + s.multiplicity; ++x) {
    if (!s.contains(x)) continue;
    bool sum = false;
    for (Int u = 1; u <= x / 2 && !sum; ++u) sum = s.contains(u) && s.contains(x - u);
    if (!sum) s.generators.push_back(x);
  }
  s.embedding_dimension = static_cast<Int>(s.generators.size());

  if (frob < 0) {
    s.pseudo_frobenius = {-1};
  } else {
    // x gap with x + h in S for every nonzero h in S; h >= F + 1 is automatic.
    for (Int x : s.gaps) {
      bool ok = true;
      for (Int h = 1; h <= frob && ok; ++h) {
        if (s.contains(h)) ok = s.contains(x + h);
      }
      if (ok) s.pseudo_frobenius.push_back(x);
    }
  }
  s.type = static_cast<Int>(s.pseudo_frobenius.size());
  return s;
}

bool tail_full(const std::vector<char>& member, Int period) {
  const Int size = static_cast<Int>(member.size());
  for (Int x = std::max<Int>(0, size - period); x < size; ++x) {
    if (!member[static_cast<std::size_t>(x)]) return false;
  }
  return true;
}

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string show(const std::vector<Int>& v) { return "{" + join(v) + "}"; }
std::string show(bool v) { return v ? "true" : "false"; }

class Recorder {
 public:
  explicit Recorder(OracleReport& report) : report_(report) {}

  template <typename Fast, typename Expected>
  void check(const std::string& name, Fast&& fast, const Expected& expected) {
    Check c{name, "", show(expected), false};
    try {
      const auto value = fast();
      c.fast_value = show(value);
      c.pass = value == expected;
    } catch (const std::exception& e) {
      c.fast_value = std::string("threw: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

 private:
  OracleReport& report_;
};

// Membership in S([b/a, b/(a-1)]) (or the open interval) by trying every
// multiplier k with k*b/a near n.
bool interval_member(Int n, Int b, Int a, bool open) {
  if (n == 0) return true;
  for (Int k = std::max<Int>(1, n * (a - 1) / b); k <= n * a / b + 1; ++k) {
    // k*b/a <= n <= k*b/(a-1), strict when open.
    const Int lhs = k * b;
    const Int rhs_lo = n * a;
    const Int rhs_hi = n * (a - 1);
    const bool low_ok = open ? lhs < rhs_lo : lhs <= rhs_lo;
    const bool high_ok = open ? rhs_hi < lhs : rhs_hi <= lhs;
    if (low_ok && high_ok) return true;
  }
  return false;
}

OracleSemigroup interval_oracle(Int a, Int b, bool open) {
  // For k >= 2a the open intervals overlap by more than 1, so every n > 2b is
  // covered; the extra b entries confirm it.
  const Int size = 3 * b + 2;
  std::vector<char> member(static_cast<std::size_t>(size), 0);
  for (Int n = 0; n < size; ++n) member[static_cast<std::size_t>(n)] = interval_member(n, b, a, open);
  numsg::detail::ensure(tail_full(member, b), "interval oracle table did not stabilize");
  return finish(std::move(member));
}

}  // namespace

OracleSemigroup oracle_semigroup(const std::vector<Int>& input) {
  if (input.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  std::vector<Int> gens(input);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.front() <= 0) throw Error(ErrorCode::BadParameters, "generators must be positive");
  Int d = 0;
  for (Int g : gens) d = std::gcd(d, g);
  if (d != 1) throw Error(ErrorCode::GcdNotOne, "gcd of generators is " + std::to_string(d));

  const Int m = gens.front();
  // Conductor <= (m-1)*max (Apery elements use at most m-1 generators), and
  // <= (p-1)(q-1) for any coprime pair p, q of generators.
  Int bound = (m - 1) * gens.back() + 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (std::gcd(gens[i], gens[j]) == 1) bound = std::min(bound, (gens[i] - 1) * (gens[j] - 1));
    }
  }
  const Int size = bound + m + 1;
  std::vector<char> member(static_cast<std::size_t>(size), 0);
  member[0] = 1;
  for (Int x = 1; x < size; ++x) {
    for (Int g : gens) {
      if (g > x) break;
      if (member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  numsg::detail::ensure(tail_full(member, m), "oracle membership table did not stabilize");
  return finish(std::move(member));
}

std::vector<Int> apery_by_scan(const OracleSemigroup& s, Int n) {
  std::vector<Int> out;
  for (Int x = 0; x <= s.frobenius + n; ++x) {
    if (s.contains(x) && !s.contains(x - n)) out.push_back(x);
  }
  return out;
}

bool symmetric_by_definition(const OracleSemigroup& s) {
  for (Int z = 0; z <= s.frobenius; ++z) {
    if (!s.contains(z) && !s.contains(s.frobenius - z)) return false;
  }
  return true;
}

bool pseudo_symmetric_by_definition(const OracleSemigroup& s) {
  if (s.frobenius < 0 || s.frobenius % 2 != 0) return false;
  for (Int z = 0; z <= s.frobenius; ++z) {
    if (2 * z == s.frobenius) continue;
    if (!s.contains(z) && !s.contains(s.frobenius - z)) return false;
  }
  return true;
}

bool almost_symmetric_by_definition(const OracleSemigroup& s) {
  for (Int z : s.gaps) {
    const bool in_pf = std::find(s.pseudo_frobenius.begin(), s.pseudo_frobenius.end(), z) != s.pseudo_frobenius.end();
    if (!s.contains(s.frobenius - z) && !in_pf) return false;
  }
  return true;
}

OracleSemigroup dual_by_definition(const OracleSemigroup& s) {
  std::vector<char> member = s.member;
  for (Int f : s.pseudo_frobenius) {
    if (f >= 0) member[static_cast<std::size_t>(f)] = 1;
  }
  return finish(std::move(member));
}

void enumerate_by_genus(int g_max, const std::function<void(const NumericalSemigroup&)>& visit, int genus_cap) {
  if (g_max < 0) throw Error(ErrorCode::BadParameters, "genus must be nonnegative");
  if (g_max > genus_cap) {
    throw Error(ErrorCode::CapExceeded, "genus " + std::to_string(g_max) + " exceeds cap " + std::to_string(genus_cap));
  }
  // Every minimal generator of a semigroup of genus g is <= F + m <= 3g.
  const Int limit = 3 * static_cast<Int>(g_max) + 3;

  struct Node {
    std::vector<char> member;
    Int frobenius;
    int genus;
  };
  auto min_gens = [&](const std::vector<char>& member) {
    std::vector<Int> out;
    for (Int x = 1; x <= limit; ++x) {
      if (!member[static_cast<std::size_t>(x)]) continue;
      bool sum = false;
      for (Int u = 1; u <= x / 2 && !sum; ++u) sum = member[static_cast<std::size_t>(u)] && member[static_cast<std::size_t>(x - u)];
      if (!sum) out.push_back(x);
    }
    return out;
  };

  std::vector<Node> stack;
  stack.push_back({std::vector<char>(static_cast<std::size_t>(limit + 1), 1), -1, 0});
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const auto gens = min_gens(node.member);
    visit(NumericalSemigroup::from_generators(gens));
    if (node.genus == g_max) continue;
    // Push in descending order so children are visited ascending.
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
      if (*it <= node.frobenius) continue;
      Node child{node.member, *it, node.genus + 1};
      child.member[static_cast<std::size_t>(*it)] = 0;
      stack.push_back(std::move(child));
    }
  }
}

std::vector<NumericalSemigroup> enumerate_by_genus(int g_max, int genus_cap) {
  std::vector<NumericalSemigroup> out;
  enumerate_by_genus(g_max, [&](const NumericalSemigroup& h) { out.push_back(h); }, genus_cap);
  return out;
}

bool OracleReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string OracleReport::to_tap() const {
  std::ostringstream os;
  os << "# " << subject << "\n1.." << checks.size() << "\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    os << (c.pass ? "ok " : "not ok ") << (i + 1) << " - " << c.name;
    if (!c.pass) os << " # fast=" << c.fast_value << " oracle=" << c.oracle_value;
    os << "\n";
  }
  return os.str();
}

OracleReport verify(const NumericalSemigroup& h) {
  OracleReport report;
  report.subject = "<" + h.to_string() + ">";
  Recorder rec(report);
  const auto o = oracle_semigroup(h.generators());

  rec.check("generators", [&] { return h.generators(); }, o.generators);
  rec.check("membership", [&] {
    std::vector<Int> members;
    for (Int x = -2; x <= o.frobenius + 2 * o.multiplicity; ++x) {
      if (h.contains(x)) members.push_back(x);
    }
    return members;
  }, [&] {
    std::vector<Int> members;
    for (Int x = -2; x <= o.frobenius + 2 * o.multiplicity; ++x) {
      if (o.contains(x)) members.push_back(x);
    }
    return members;
  }());
  rec.check("frobenius", [&] { return frobenius(h); }, o.frobenius);
  rec.check("genus", [&] { return genus(h); }, o.genus);
  rec.check("gaps", [&] { return gaps(h); }, o.gaps);
  rec.check("multiplicity", [&] { return h.multiplicity(); }, o.multiplicity);
  rec.check("embedding_dimension", [&] { return h.embedding_dimension(); }, o.embedding_dimension);
  rec.check("apery_multiplicity", [&] { return apery_set(h, h.multiplicity()).elements; },
            apery_by_scan(o, o.multiplicity));
  const Int other = o.generators.back();
  rec.check("apery_largest_generator", [&] { return apery_set(h, other).elements; }, apery_by_scan(o, other));
  rec.check("pseudo_frobenius", [&] { return pseudo_frobenius(h); }, o.pseudo_frobenius);
  rec.check("type", [&] { return type_of(h); }, o.type);
  rec.check("genus_inequality", [&] { return 2 * genus(h) >= frobenius(h) + type_of(h); }, true);
  rec.check("maximal_embedding_dimension", [&] { return is_maximal_embedding_dimension(h); },
            o.embedding_dimension == o.multiplicity);
  rec.check("symmetric", [&] { return is_symmetric(h); }, symmetric_by_definition(o));
  rec.check("pseudo_symmetric", [&] { return is_pseudo_symmetric(h); }, pseudo_symmetric_by_definition(o));
  rec.check("almost_symmetric", [&] { return is_almost_symmetric(h); }, almost_symmetric_by_definition(o));
  if (!h.is_natural()) {
    const auto od = dual_by_definition(o);
    rec.check("dual_generators", [&] { return dual_of_maximal(h).generators(); }, od.generators);
    rec.check("dual_frobenius", [&] { return frobenius_of_dual(h); }, od.frobenius);
    rec.check("dual_genus", [&] { return genus(h) - type_of(h); }, od.genus);
  }
  return report;
}

OracleReport verify_opened_modular(Int a, Int b) {
  const auto h = opened_modular(a, b);
  OracleReport report = verify(h);
  report.subject = "opened_modular(" + std::to_string(a) + "," + std::to_string(b) + ") = " + report.subject;
  Recorder rec(report);
  const auto open = interval_oracle(a, b, true);
  const auto closed = interval_oracle(a, b, false);
  rec.check("opened_generators", [&] { return h.generators(); }, open.generators);
  rec.check("opened_frobenius_formula", [&] { return opened_modular_invariants(a, b).frobenius; }, open.frobenius);
  rec.check("opened_genus_formula", [&] { return opened_modular_invariants(a, b).genus; }, open.genus);
  rec.check("opened_type_formula", [&] { return opened_modular_invariants(a, b).type; }, open.type);
  rec.check("closed_interval_genus_formula", [&] { return closed_interval_genus(a, b); }, closed.genus);
  rec.check("dual_is_closed_interval", [&] { return dual_of_maximal(h).generators(); }, closed.generators);
  if (a < b) {
    rec.check("multiplicity_formula", [&] { return multiplicity_opened_modular(a, b).value; }, open.multiplicity);
    // S(a, b, 1) by scanning the inequality itself.
    std::vector<char> member(static_cast<std::size_t>(b + a * b + 1), 0);
    for (Int x = 0; x < static_cast<Int>(member.size()); ++x) member[static_cast<std::size_t>(x)] = (a * x) % b <= x;
    const auto ineq = finish(std::move(member));
    rec.check("delta_frobenius_formula", [&] { return frobenius_modular(a, b, 1); }, ineq.frobenius);
  }
  return report;
}

OracleReport verify_gluing(const GluingSpec& spec) {
  const auto h = glue(spec);
  OracleReport report = verify(h);
  report.subject = "gluing <" + std::to_string(spec.x) + "*<" + spec.h1.to_string() + ">, " + std::to_string(spec.y) +
                   "*<" + spec.h2.to_string() + ">> = " + report.subject;
  Recorder rec(report);
  const auto o = oracle_semigroup(h.generators());
  const auto o1 = oracle_semigroup(spec.h1.generators());
  const auto o2 = oracle_semigroup(spec.h2.generators());
  rec.check("gluing_apery", [&] { return apery_of_gluing(spec); }, apery_by_scan(o, spec.x * spec.y));
  rec.check("gluing_pseudo_frobenius", [&] { return pf_of_gluing(spec); }, o.pseudo_frobenius);
  rec.check("gluing_frobenius", [&] { return frobenius_of_gluing(spec); }, o.frobenius);
  rec.check("gluing_type_product", [&] { return static_cast<Int>(pf_of_gluing(spec).size()); }, o1.type * o2.type);
  return report;
}

std::vector<GluingSpec> two_t_gluings(Int b, Int limit) {
  const auto t = NumericalSemigroup::from_generators({3, b, 2 * b - 3});
  std::vector<GluingSpec> out;
  for (Int k = 1; k < limit; k += 2) {
    if (!t.contains(k) || k == 3 || k == b || k == 2 * b - 3) continue;
    out.push_back({t, NumericalSemigroup::natural(), 2, k});
  }
  return out;
}

std::vector<OracleReport> verify_goldens() {
  std::vector<OracleReport> out;
  auto add = [&](std::initializer_list<Int> gens) { out.push_back(verify(NumericalSemigroup::from_generators(gens))); };
  add({5, 8, 11, 12});
  add({4, 6, 9, 10, 13});
  add({3, 7, 8});
  add({5, 6, 8, 9});
  add({3, 4, 5});
  add({5, 7, 16});
  add({5, 7, 8, 9, 11});
  add({2, 3});
  add({1});
  for (Int a = 3; a <= 21; a += 2) {
    std::vector<Int> gens;
    for (Int v = a; v <= 3 * a - 2; v += 2) gens.push_back(v);
    out.push_back(verify(NumericalSemigroup::from_generators(gens)));
    out.push_back(verify(NumericalSemigroup::from_generators({2, a})));
  }
  out.push_back(verify_opened_modular(5, 11));
  out.push_back(verify_opened_modular(4, 10));
  out.push_back(verify_opened_modular(2, 2));
  out.push_back(verify_gluing({NumericalSemigroup::from_generators({6, 10, 11, 13, 14}),
                               NumericalSemigroup::from_generators({7, 8, 10, 13}), 14, 17}));
  out.push_back(verify_gluing({NumericalSemigroup::from_generators({2, 3}), NumericalSemigroup::natural(), 2, 9}));
  for (Int b : {5, 7, 11}) {
    for (const auto& spec : two_t_gluings(b, 6 * b)) out.push_back(verify_gluing(spec));
  }
  return out;
}

}  // namespace numsg::oracle
