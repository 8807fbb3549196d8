// Acceptance suite. Each criterion prints one PASS/FAIL line with its wall
// time; failing criteria print the first mismatches underneath.
//
//   numsg_acceptance                 run every criterion
//   numsg_acceptance --criterion 7   run one

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "numsg/classify.hpp"
#include "numsg/dual.hpp"
#include "numsg/error.hpp"
#include "numsg/gluing.hpp"
#include "numsg/modular.hpp"
#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/threegen.hpp"

namespace {

using numsg::Int;
using numsg::NumericalSemigroup;
using IntVec = std::vector<Int>;

constexpr int kMaxDetails = 8;

std::string show(const IntVec& v) { return "{" + numsg::join(v) + "}"; }
std::string show(Int v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }

class Checker {
 public:
  template <class T>
  void equal(const std::string& what, const T& got, const T& want) {
    ++checks_;
    if (got == want) return;
    fail(what + ": expected " + show(want) + ", got " + show(got));
  }

  void holds(const std::string& what, bool ok) {
    ++checks_;
    if (!ok) fail(what);
  }

  // Runs body, turning library exceptions into failures.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      ++checks_;
      fail(what + ": threw " + e.what());
    }
  }

  void note(const std::string& text) { notes_.push_back(text); }

  bool ok() const { return failures_ == 0; }
  long checks() const { return checks_; }
  long failures() const { return failures_; }
  const std::vector<std::string>& details() const { return details_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  void fail(const std::string& text) {
    ++failures_;
    if (static_cast<int>(details_.size()) < kMaxDetails) details_.push_back(text);
  }

  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> details_;
  std::vector<std::string> notes_;
};

NumericalSemigroup sg(std::initializer_list<Int> gens) { return NumericalSemigroup::from_generators(gens); }

NumericalSemigroup odd_family(Int a) {
  IntVec gens;
  for (Int v = a; v <= 3 * a - 2; v += 2) gens.push_back(v);
  return NumericalSemigroup::from_generators(gens);
}

IntVec evens_below(Int a) {
  IntVec v;
  for (Int x = 2; x <= 2 * (a - 1); x += 2) v.push_back(x);
  return v;
}

// 1. <5,8,11,12>, checked against the stated values.
void golden_example_2_6_1(Checker& c) {
  const auto h = sg({5, 8, 11, 12});
  c.equal("Ap(H,5)", numsg::apery_set(h, 5).elements, IntVec{0, 8, 11, 12, 16});
  c.equal("PF(H)", numsg::pseudo_frobenius(h), IntVec{6, 7, 11});
  c.equal("almost symmetric", numsg::is_almost_symmetric(h), false);
}

// 2. <a, a+2, ..., 3a-2> for odd a in [3, 21].
void golden_example_2_6_2(Checker& c) {
  for (Int a = 3; a <= 21; a += 2) {
    const std::string tag = "a=" + std::to_string(a) + " ";
    const auto h = odd_family(a);
    c.equal(tag + "PF", numsg::pseudo_frobenius(h), evens_below(a));
    c.equal(tag + "almost symmetric", numsg::is_almost_symmetric(h), true);
    c.equal(tag + "MED", numsg::is_maximal_embedding_dimension(h), true);
    const auto d = numsg::dual_of_maximal(h);
    c.equal(tag + "H*", d.generators(), IntVec{2, a});
    c.equal(tag + "H* symmetric", numsg::is_symmetric(d), true);
    c.holds(tag + "(AS and MED) <=> H* symmetric",
            (numsg::is_almost_symmetric(h) && numsg::is_maximal_embedding_dimension(h)) == numsg::is_symmetric(d));
  }
}

// 3. Two semigroups with the same dual <3,4,5>.
void golden_remark_3_6(Checker& c) {
  const auto h1 = sg({5, 6, 8, 9});
  const auto h2 = sg({3, 7, 8});
  c.equal("dual <5,6,8,9>", numsg::dual_of_maximal(h1).generators(), IntVec{3, 4, 5});
  c.equal("dual <3,7,8>", numsg::dual_of_maximal(h2).generators(), IntVec{3, 4, 5});
  c.equal("PF <5,6,8,9>", numsg::pseudo_frobenius(h1), IntVec{3, 4, 7});
  c.equal("PF <3,7,8>", numsg::pseudo_frobenius(h2), IntVec{4, 5});
}

// 4. S(]11/5, 11/4[).
void golden_example_4_15(Checker& c) {
  const auto h = numsg::opened_modular(5, 11);
  const auto inv = numsg::opened_modular_invariants(5, 11);
  const auto mult = numsg::multiplicity_opened_modular(5, 11);
  c.equal("generators", h.generators(), IntVec{5, 7, 8, 9});
  c.equal("F", h.frobenius(), Int{11});
  c.equal("F formula", inv.frobenius, Int{11});
  c.equal("g", h.genus(), Int{6});
  c.equal("g formula", inv.genus, Int{6});
  c.equal("t", numsg::type_of(h), Int{1});
  c.equal("t formula", inv.type, Int{1});
  c.equal("delta(5,11,1)", numsg::delta(5, 11, 1), Int{2});
  c.equal("multiplicity formula", mult.value, Int{5});
  c.equal("multiplicity from formula", mult.from_formula, true);
  c.equal("PF", numsg::pseudo_frobenius(h), IntVec{11});
  const auto closed = numsg::semigroup_of_interval(numsg::parse_interval("[11/5..11/4]"));
  c.equal("S([11/5,11/4])", closed.generators(), IntVec{5, 7, 8, 9, 11});
  c.equal("H*", numsg::dual_of_maximal(h).generators(), IntVec{5, 7, 8, 9, 11});
}

// 5. <5,7,16>.
void golden_example_5_6(Checker& c) {
  const auto h = sg({5, 7, 16});
  const auto mt = numsg::herzog_matrix(h);
  c.holds("matrix (1,1,1,5,2,1), got " + std::to_string(mt.alpha) + "," + std::to_string(mt.beta) + "," +
              std::to_string(mt.gamma) + "," + std::to_string(mt.alpha_p) + "," + std::to_string(mt.beta_p) + "," +
              std::to_string(mt.gamma_p),
          mt == numsg::HerzogMatrix{1, 1, 1, 5, 2, 1});
  c.equal("5 = bg + b'g + b'g'", IntVec{mt.beta * mt.gamma, mt.beta_p * mt.gamma, mt.beta_p * mt.gamma_p},
          IntVec{1, 2, 2});
  c.equal("7 = ga + g'a + g'a'", IntVec{mt.gamma * mt.alpha, mt.gamma_p * mt.alpha, mt.gamma_p * mt.alpha_p},
          IntVec{1, 1, 5});
  c.equal("16 = ab + a'b + a'b'", IntVec{mt.alpha * mt.beta, mt.alpha_p * mt.beta, mt.alpha_p * mt.beta_p},
          IntVec{1, 5, 10});
  c.holds("relations", numsg::satisfies_relations(mt, 5, 7, 16));
  const auto pf = numsg::pf_from_matrix(h, mt);
  c.equal("pf_from_matrix", IntVec{pf.first, pf.second}, IntVec{9, 18});
  c.equal("pseudo-symmetric (matrix)", numsg::is_pseudo_symmetric_by_matrix(h), true);
  c.equal("pseudo-symmetric", numsg::is_pseudo_symmetric(h), true);
  const auto arr = numsg::pm_arrangement_3(h);
  c.holds("arrangement exists", arr.has_value());
  if (!arr) return;
  c.equal("d", arr->d, Int{3});
  c.equal("d = (a+1)/2", 2 * arr->d, arr->a + 1);
  const auto cls = numsg::classify_pm_threegen(*arr);
  c.equal("closed form F", cls.frobenius.value_or(-100), Int{18});
  c.equal("closed form g", cls.genus.value_or(-100), Int{10});
}

// 6. <14 H1, 17 H2>.
void golden_example_6_9_1(Checker& c) {
  const numsg::GluingSpec spec{sg({6, 10, 11, 13, 14}), sg({7, 8, 10, 13}), 14, 17};
  const auto h = numsg::glue(spec);
  c.equal("generators", h.generators(), IntVec{84, 119, 136, 140, 154, 170, 182, 196, 221});
  c.equal("PF (formula)", numsg::pf_of_gluing(spec), IntVec{659, 673, 771});
  c.equal("PF (direct)", numsg::pseudo_frobenius(h), IntVec{659, 673, 771});
  c.equal("almost symmetric", numsg::is_almost_symmetric(h), false);
}

// 7. Almost-symmetry characterizations over every semigroup of genus <= 18.
void property_classification(Checker& c) {
  long count = 0, as_count = 0;
  numsg::oracle::enumerate_by_genus(18, [&](const NumericalSemigroup& h) {
    ++count;
    const std::string tag = "<" + h.to_string() + "> ";
    c.guard(tag, [&] {
      const bool by_genus = numsg::almost_symmetric_by_genus(h);
      const bool by_pairing = numsg::almost_symmetric_by_apery_pairing(h, h.multiplicity());
      const bool by_pf = numsg::almost_symmetric_by_pf_symmetry(h);
      const bool by_gaps = numsg::almost_symmetric_by_gap_dichotomy(h);
      c.equal(tag + "2g=F+t vs Apery pairing", by_pairing, by_genus);
      c.equal(tag + "2g=F+t vs PF symmetry", by_pf, by_genus);
      c.equal(tag + "2g=F+t vs gap dichotomy", by_gaps, by_genus);
      if (!h.is_natural()) c.equal(tag + "2g=F+t vs K in M-M", numsg::almost_symmetric_by_canonical_ideal(h), by_genus);
      const Int t = numsg::type_of(h);
      c.holds(tag + "2g >= F + t", 2 * h.genus() >= h.frobenius() + t);
      c.equal(tag + "(AS and t=2) <=> pseudo-symmetric", by_genus && t == 2, numsg::is_pseudo_symmetric(h));
      if (by_genus) ++as_count;
    });
  });
  c.note(std::to_string(count) + " semigroups, " + std::to_string(as_count) + " almost symmetric");
}

// 8. Duality statements over every semigroup of genus <= 18.
void property_duality(Checker& c) {
  long count = 0, cor311_instances = 0, cor312_instances = 0, converse_counterexamples = 0;
  long lower_bound_failures = 0;
  Int smallest_lower_genus = 0;
  std::string first_converse, smallest_lower;
  numsg::oracle::enumerate_by_genus(18, [&](const NumericalSemigroup& h) {
    if (h.is_natural()) return;
    ++count;
    const std::string tag = "<" + h.to_string() + "> ";
    c.guard(tag, [&] {
      const auto d = numsg::dual_of_maximal(h);
      const Int m = h.multiplicity();
      const Int e = h.embedding_dimension();
      const Int t = numsg::type_of(h);
      const Int td = numsg::type_of(d);
      const bool as = numsg::is_almost_symmetric(h);
      const bool das = numsg::is_almost_symmetric(d);

      auto pf_l = numsg::pseudo_frobenius(h);
      const auto ls = numsg::l_set(h);
      pf_l.insert(pf_l.end(), ls.begin(), ls.end());
      std::sort(pf_l.begin(), pf_l.end());
      c.equal(tag + "Ap(H*,m) = PF u L", numsg::apery_set(d, m).elements, pf_l);
      c.equal(tag + "F(H*) = F - m", d.frobenius(), h.frobenius() - m);
      c.equal(tag + "g(H*) = g - t", d.genus(), h.genus() - t);
      c.equal(tag + "(AS and MED) <=> H* symmetric", as && e == m, numsg::is_symmetric(d));
      if (as && e < m) {
        c.holds(tag + "max Ap(H,m) != largest generator",
                numsg::apery_set(h, m).elements.back() != h.generators().back());
        c.holds(tag + "e+1 <= t+t*", e + 1 <= t + td);
        c.holds(tag + "t+t* <= m", t + td <= m);
        if (e + 1 > t + td) {
          ++lower_bound_failures;
          if (smallest_lower.empty() || h.genus() < smallest_lower_genus) {
            smallest_lower = h.to_string() + "> (g=" + std::to_string(h.genus()) + " m=" + std::to_string(m) +
                             " e=" + std::to_string(e) + " t=" + std::to_string(t) + " t*=" + std::to_string(td) + ")";
            smallest_lower_genus = h.genus();
          }
        }
        c.holds(tag + "t* <= e", td <= e);
      }
      if (as && e == m - 1) {
        ++cor311_instances;
        c.holds(tag + "e = m-1 => H* AS with t* >= 2", das && td >= 2);
      }
      if (numsg::is_symmetric(h) && e < m) {
        ++cor312_instances;
        c.equal(tag + "symmetric: e = m-1 <=> (H* AS and t* >= 2)", e == m - 1, das && td >= 2);
      }
      if (as) c.equal(tag + "H* AS <=> m = t + t*", das, m == t + td);
      if (as && das && td >= 2 && e != m - 1 && e < m) {
        if (converse_counterexamples++ == 0) first_converse = h.to_string();
      }
    });
  });
  c.note(std::to_string(count) + " semigroups; e = m-1 instances " + std::to_string(cor311_instances) +
         "; symmetric e < m instances " + std::to_string(cor312_instances));
  c.note("converse search (AS, H* AS, t* >= 2, e < m-1): " + std::to_string(converse_counterexamples) + " found" +
         (first_converse.empty() ? "" : ", first <" + first_converse + ">"));
  c.note("e+1 <= t+t* fails on " + std::to_string(lower_bound_failures) + " almost symmetric H with e < m" +
         (smallest_lower.empty() ? "" : "; smallest genus <" + smallest_lower));
}

// F of {x : a*x mod b <= c*x} read off a plain scan; every x >= b solves it.
Int scanned_frobenius(Int a, Int b, Int c) {
  Int f = -1;
  for (Int x = 0; x <= 2 * b; ++x) {
    if ((a * x) % b > c * x) f = x;
  }
  return f;
}

// 9. Modular formulas on the full grids.
void property_modular(Checker& c) {
  long triples = 0;
  for (Int b = 3; b <= 100; ++b) {
    for (Int a = 2; a < b; ++a) {
      for (Int cc = 1; cc < a; ++cc) {
        ++triples;
        const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(cc) + ") ";
        c.guard(tag, [&] { c.equal(tag + "F formula", numsg::frobenius_modular(a, b, cc), scanned_frobenius(a, b, cc)); });
      }
    }
  }
  long pairs = 0, formula_mult = 0;
  for (Int b = 2; b <= 150; ++b) {
    for (Int a = 2; a <= b; ++a) {
      ++pairs;
      const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ") ";
      c.guard(tag, [&] {
        const auto report = numsg::oracle::verify_opened_modular(a, b);
        for (const auto& chk : report.checks) {
          c.holds(tag + chk.name + " fast=" + chk.fast_value + " oracle=" + chk.oracle_value, chk.pass);
        }
        const auto h = numsg::opened_modular(a, b);
        const auto d = numsg::dual_of_maximal(h);
        const auto mult = numsg::multiplicity_opened_modular(a, b);
        if (mult.from_formula) ++formula_mult;
        c.equal(tag + "m = F(H) - F(H*)", mult.value, h.frobenius() - d.frobenius());
        c.holds(tag + "almost symmetric", numsg::is_almost_symmetric(h));
        const auto closed = numsg::semigroup_of_interval(
            {numsg::Rational(b, a), numsg::Rational(b, a - 1), false, false});
        c.holds(tag + "H u PF(H) = S([b/a, b/(a-1)])", d == closed);
        if (a < b) c.holds(tag + "S(a,b,1) = S([b/a, b/(a-1)])", numsg::solve_inequality({a, b, 1}) == closed);
      });
    }
  }
  c.note(std::to_string(triples) + " (a,b,c) triples; " + std::to_string(pairs) + " (a,b) pairs, multiplicity formula on " +
         std::to_string(formula_mult) + ", direct on the " + std::to_string(pairs - formula_mult) + " with a = b");
}

// 10. Random gluings, then complete intersection => symmetric.
void property_gluing(Checker& c) {
  const auto pool = numsg::oracle::enumerate_by_genus(10);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<Int> mult(1, 40);
  int tested = 0, both_symmetric = 0, one_not = 0;
  long attempts = 0;
  while (tested < 500) {
    ++attempts;
    const numsg::GluingSpec spec{pool[pick(rng)], pool[pick(rng)], mult(rng), mult(rng)};
    try {
      numsg::validate(spec);
    } catch (const numsg::Error&) {
      continue;
    }
    ++tested;
    const std::string tag = "<" + std::to_string(spec.x) + "*<" + spec.h1.to_string() + ">, " +
                            std::to_string(spec.y) + "*<" + spec.h2.to_string() + ">> ";
    c.guard(tag, [&] {
      const auto h = numsg::glue(spec);
      const auto o = numsg::oracle::oracle_semigroup(h.generators());
      c.equal(tag + "Ap(H, xy)", numsg::apery_of_gluing(spec), numsg::oracle::apery_by_scan(o, spec.x * spec.y));
      c.equal(tag + "PF", numsg::pf_of_gluing(spec), o.pseudo_frobenius);
      c.equal(tag + "t multiplicative", o.type, numsg::type_of(spec.h1) * numsg::type_of(spec.h2));
      c.equal(tag + "F", numsg::frobenius_of_gluing(spec), o.frobenius);
      const bool s1 = numsg::is_symmetric(spec.h1);
      const bool s2 = numsg::is_symmetric(spec.h2);
      if (s1 && s2) {
        ++both_symmetric;
        c.holds(tag + "gluing of symmetric is symmetric", numsg::oracle::symmetric_by_definition(o));
      } else {
        ++one_not;
        c.holds(tag + "a non-symmetric factor gives a non-almost-symmetric gluing",
                !numsg::oracle::almost_symmetric_by_definition(o));
      }
    });
  }
  long ci = 0, count = 0;
  numsg::oracle::enumerate_by_genus(18, [&](const NumericalSemigroup& h) {
    ++count;
    const std::string tag = "<" + h.to_string() + "> ";
    c.guard(tag, [&] {
      if (numsg::is_complete_intersection(h)) {
        ++ci;
        c.holds(tag + "complete intersection => symmetric", numsg::is_symmetric(h));
      }
    });
  });
  c.note(std::to_string(tested) + " valid specs from " + std::to_string(attempts) + " draws (" +
         std::to_string(both_symmetric) + " with symmetric factors, " + std::to_string(one_not) + " with a non-symmetric factor)");
  c.note(std::to_string(ci) + " complete intersections among " + std::to_string(count) + " semigroups of genus <= 18");
}

// 11. verify on 500 random enumerated semigroups and every golden instance.
void oracle_independence(Checker& c) {
  const auto pool = numsg::oracle::enumerate_by_genus(18);
  std::vector<NumericalSemigroup> picked;
  std::mt19937_64 rng(11);
  std::sample(pool.begin(), pool.end(), std::back_inserter(picked), 500, rng);
  auto consume = [&](const numsg::oracle::OracleReport& r) {
    for (const auto& chk : r.checks) {
      c.holds(r.subject + ": " + chk.name + " fast=" + chk.fast_value + " oracle=" + chk.oracle_value, chk.pass);
    }
  };
  for (const auto& h : picked) c.guard(h.to_string(), [&] { consume(numsg::oracle::verify(h)); });
  std::size_t goldens = 0;
  c.guard("goldens", [&] {
    const auto reports = numsg::oracle::verify_goldens();
    goldens = reports.size();
    for (const auto& r : reports) consume(r);
  });
  c.note(std::to_string(picked.size()) + " random semigroups + " + std::to_string(goldens) + " golden instances");
}

struct Criterion {
  int id;
  std::string title;
  std::optional<double> target_seconds;
  std::function<void(Checker&)> body;
};

std::vector<Criterion> criteria() {
  return {
      {1, "golden <5,8,11,12>: Ap, PF, not almost symmetric", 1e-3, golden_example_2_6_1},
      {2, "golden <a,a+2,...,3a-2>, odd a <= 21", 10e-3, golden_example_2_6_2},
      {3, "golden duals of <5,6,8,9> and <3,7,8>", std::nullopt, golden_remark_3_6},
      {4, "golden opened modular S(]11/5,11/4[)", std::nullopt, golden_example_4_15},
      {5, "golden Herzog matrix of <5,7,16>", std::nullopt, golden_example_5_6},
      {6, "golden gluing <14H1, 17H2>", std::nullopt, golden_example_6_9_1},
      {7, "property: almost-symmetry characterizations, genus <= 18", 60.0, property_classification},
      {8, "property: duality statements, genus <= 18", 60.0, property_duality},
      {9, "property: modular formulas on the full grids", 120.0, property_modular},
      {10, "property: 500 random gluings, CI => symmetric", 60.0, property_gluing},
      {11, "oracle independence: 500 random + goldens", 30.0, oracle_independence},
  };
}

std::string format_seconds(double s) {
  std::ostringstream os;
  if (s < 1e-3) {
    os << std::fixed << std::setprecision(1) << s * 1e6 << " us";
  } else if (s < 1.0) {
    os << std::fixed << std::setprecision(2) << s * 1e3 << " ms";
  } else {
    os << std::fixed << std::setprecision(2) << s << " s";
  }
  return os.str();
}

bool run_one(const Criterion& cr) {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  c.guard("criterion", [&] { cr.body(c); });
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = !cr.target_seconds || elapsed < *cr.target_seconds;
  const bool pass = c.ok() && in_time;

  std::cout << (pass ? "PASS" : "FAIL") << "  c" << std::setw(2) << std::setfill('0') << cr.id << std::setfill(' ')
            << "  " << cr.title << "  [" << c.checks() << " checks, " << format_seconds(elapsed);
  if (cr.target_seconds) std::cout << ", target < " << format_seconds(*cr.target_seconds);
  std::cout << "]\n";
  for (const auto& n : c.notes()) std::cout << "        " << n << "\n";
  if (!c.ok()) {
    std::cout << "        " << c.failures() << " mismatches";
    if (c.failures() > kMaxDetails) std::cout << " (first " << kMaxDetails << " shown)";
    std::cout << "\n";
    for (const auto& d : c.details()) std::cout << "        - " << d << "\n";
  }
  if (!in_time) std::cout << "        - over the time target\n";
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: numsg_acceptance [--criterion N]\n";
      return 2;
    }
  }
  int failed = 0, ran = 0;
  for (const auto& cr : criteria()) {
    if (only && cr.id != *only) continue;
    ++ran;
    if (!run_one(cr)) ++failed;
  }
  if (ran == 0) {
    std::cerr << "no criterion " << *only << "\n";
    return 2;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
