#include "numsg_cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "numsg/classify.hpp"
#include "numsg/dual.hpp"
#include "numsg/error.hpp"
#include "numsg/gluing.hpp"
#include "numsg/modular.hpp"
#include "numsg/oracle.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/threegen.hpp"

namespace numsg::cli {
namespace {

using json = nlohmann::ordered_json;

struct Settings {
  bool json = false;
  int jobs = 1;
  int genus_cap = oracle::kDefaultGenusCap;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + ": expected an integer, got '" + text + "'");
}

// key = value lines; '#' starts a comment.
void apply_config_file(const std::string& path, Settings& s) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    auto trim = [](std::string v) {
      const auto b = v.find_first_not_of(" \t\r\"");
      const auto e = v.find_last_not_of(" \t\r\"");
      return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    if (trim(line).empty()) continue;
    if (eq == std::string::npos) throw UsageError("config line without '=': " + line);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "genus_cap") {
      s.genus_cap = parse_int(value, "genus_cap");
    } else if (key == "jobs") {
      s.jobs = parse_int(value, "jobs");
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

json block(const NumericalSemigroup& h) {
  return json{{"generators", h.generators()},    {"multiplicity", h.multiplicity()},
              {"embedding_dimension", h.embedding_dimension()}, {"frobenius", h.frobenius()},
              {"genus", h.genus()},              {"type", type_of(h)},
              {"pf", pseudo_frobenius(h)},       {"conductor", h.conductor()}};
}

void print_block(std::ostream& out, const NumericalSemigroup& h) {
  out << "generators=" << h.to_string() << "\n"
      << "multiplicity=" << h.multiplicity() << "\n"
      << "embedding_dimension=" << h.embedding_dimension() << "\n"
      << "frobenius=" << h.frobenius() << "\n"
      << "genus=" << h.genus() << "\n"
      << "type=" << type_of(h) << "\n"
      << "pf=" << join(pseudo_frobenius(h)) << "\n";
}

const char* yes_no(bool v) { return v ? "true" : "false"; }

// Applies fn to every index in [0, n) on up to `jobs` threads; results keep
// their index order so output never depends on scheduling.
template <class R>
std::vector<R> parallel_map(std::size_t n, int jobs, const std::function<R(std::size_t)>& fn) {
  std::vector<R> results(n);
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) results[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

json violation_json(const SymmetryClass& c) {
  if (!c.violation) return nullptr;
  return json{{"index", c.violation->index}, {"sum", c.violation->sum}};
}

int cmd_info(const Settings& s, const std::string& gens, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  const auto ap = apery_set(h, h.multiplicity()).elements;
  const auto cls = classify(h);
  if (s.json) {
    auto j = block(h);
    j["gaps"] = gaps(h);
    j["apery"] = ap;
    j["class"] = to_string(cls.kind);
    out << j.dump() << "\n";
    return kExitOk;
  }
  print_block(out, h);
  out << "gaps=" << join(gaps(h)) << "\n"
      << "apery=" << join(ap) << "\n"
      << "class=" << to_string(cls.kind) << "\n";
  return kExitOk;
}

int cmd_classify(const Settings& s, const std::string& gens, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  const auto cls = classify(h);
  if (s.json) {
    json j{{"semigroup", block(h)},
           {"class", to_string(cls.kind)},
           {"type", cls.type},
           {"violation", violation_json(cls)},
           {"gap_witness", cls.gap_witness ? json(*cls.gap_witness) : json(nullptr)}};
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "class=" << to_string(cls.kind) << "\n" << "type=" << cls.type << "\n";
  if (cls.violation) {
    out << "violation_index=" << cls.violation->index << "\n" << "violation_sum=" << cls.violation->sum << "\n";
  } else {
    out << "violation=none\n";
  }
  if (cls.gap_witness) out << "gap_witness=" << *cls.gap_witness << "\n";
  return kExitOk;
}

int cmd_dual(const Settings& s, const std::string& gens, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  const auto d = dual_of_maximal(h);
  const auto report = dual_almost_symmetry_report(h);
  const auto ls = l_set(h);
  const auto ap = apery_of_dual(h);
  if (s.json) {
    json j{{"semigroup", block(h)},
           {"dual", block(d)},
           {"l_set", ls},
           {"apery_of_dual", ap},
           {"almost_symmetric", report.almost_symmetric},
           {"dual_almost_symmetric", report.dual_almost_symmetric},
           {"type_sum_identity", report.type_sum_identity}};
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "dual=" << d.to_string() << "\n"
      << "dual_frobenius=" << d.frobenius() << "\n"
      << "dual_genus=" << d.genus() << "\n"
      << "dual_type=" << report.dual_type << "\n"
      << "l_set=" << join(ls) << "\n"
      << "apery_of_dual=" << join(ap) << "\n"
      << "almost_symmetric=" << yes_no(report.almost_symmetric) << "\n"
      << "dual_almost_symmetric=" << yes_no(report.dual_almost_symmetric) << "\n"
      << "type_sum_identity=" << yes_no(report.type_sum_identity) << "\n";
  return kExitOk;
}

int cmd_medcover(const Settings& s, const std::string& gens, Int element, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  const auto cover = med_cover(h, element);
  if (s.json) {
    out << json{{"semigroup", block(h)}, {"element", element}, {"cover", block(cover)}}.dump() << "\n";
    return kExitOk;
  }
  print_block(out, cover);
  return kExitOk;
}

int cmd_modular(const Settings& s, const std::string& text, std::ostream& out) {
  const auto q = parse_inequality(text);
  const auto h = solve_inequality(q);
  std::optional<std::string> interval;
  if (q.c < q.a) interval = interval_of_inequality(q).to_string();
  std::optional<Int> formula;
  if (0 < q.c && q.c < q.a && q.a < q.b) {
    try {
      formula = frobenius_modular(q.a, q.b, q.c);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NoDelta) throw;
    }
  }
  if (s.json) {
    json j{{"inequality", {{"a", q.a}, {"b", q.b}, {"c", q.c}}},
           {"semigroup", block(h)},
           {"interval", interval ? json(*interval) : json(nullptr)},
           {"frobenius_formula", formula ? json(*formula) : json(nullptr)}};
    out << j.dump() << "\n";
    return kExitOk;
  }
  print_block(out, h);
  if (interval) out << "interval=" << *interval << "\n";
  if (formula) out << "frobenius_formula=" << *formula << "\n";
  return kExitOk;
}

int cmd_opened(const Settings& s, Int a, Int b, std::ostream& out) {
  const auto h = opened_modular(a, b);
  const auto inv = opened_modular_invariants(a, b);
  const auto mult = multiplicity_opened_modular(a, b);
  if (s.json) {
    json j{{"a", a},
           {"b", b},
           {"semigroup", block(h)},
           {"formula",
            {{"frobenius", inv.frobenius},
             {"genus", inv.genus},
             {"type", inv.type},
             {"multiplicity", mult.value},
             {"multiplicity_from_formula", mult.from_formula},
             {"closed_interval_genus", closed_interval_genus(a, b)}}},
           {"dual", block(dual_of_maximal(h))}};
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "F=" << inv.frobenius << " g=" << inv.genus << " t=" << inv.type << " m=" << mult.value
      << " gens=" << h.to_string() << "\n";
  return kExitOk;
}

int cmd_interval(const Settings& s, const std::string& text, std::ostream& out) {
  const auto iv = parse_interval(text);
  const auto h = semigroup_of_interval(iv);
  if (s.json) {
    out << json{{"interval", iv.to_string()}, {"semigroup", block(h)}}.dump() << "\n";
    return kExitOk;
  }
  out << "interval=" << iv.to_string() << "\n";
  print_block(out, h);
  return kExitOk;
}

int cmd_threegen(const Settings& s, const std::string& gens, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  if (h.embedding_dimension() != 3) {
    throw Error(ErrorCode::NotThreeGenerated,
                "<" + h.to_string() + "> has embedding dimension " + std::to_string(h.embedding_dimension()));
  }
  const bool sym = is_symmetric(h);
  std::optional<HerzogMatrix> mt;
  std::pair<Int, Int> pf{};
  if (!sym) {
    mt = herzog_matrix(h);
    pf = pf_from_matrix(h, *mt);
  }
  const auto arr = pm_arrangement_3(h);
  std::optional<PMThreeGenClass> cls;
  if (arr) cls = classify_pm_threegen(*arr);

  if (s.json) {
    json j{{"semigroup", block(h)}, {"symmetric", sym}};
    if (mt) {
      j["matrix"] = {{"alpha", mt->alpha},     {"beta", mt->beta},     {"gamma", mt->gamma},
                     {"alpha_p", mt->alpha_p}, {"beta_p", mt->beta_p}, {"gamma_p", mt->gamma_p}};
      j["pf_from_matrix"] = {pf.first, pf.second};
      j["pseudo_symmetric"] = is_pseudo_symmetric_by_matrix(h);
    } else {
      j["matrix"] = nullptr;
      j["pf_from_matrix"] = nullptr;
      j["pseudo_symmetric"] = false;
    }
    if (arr) {
      j["arrangement"] = {{"a", arr->a}, {"b", arr->b}, {"c", arr->c}, {"d", arr->d}};
      j["closed_forms"] = {{"symmetric", cls->symmetric},
                           {"pseudo_symmetric", cls->pseudo_symmetric},
                           {"frobenius", cls->frobenius ? json(*cls->frobenius) : json(nullptr)},
                           {"genus", cls->genus ? json(*cls->genus) : json(nullptr)}};
    } else {
      j["arrangement"] = nullptr;
      j["closed_forms"] = nullptr;
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  if (mt) {
    out << mt->to_string() << "\n"
        << "pf=" << pf.first << "," << pf.second << "\n"
        << "pseudo_symmetric=" << yes_no(is_pseudo_symmetric_by_matrix(h)) << "\n";
  } else {
    out << "symmetric=true\n";
  }
  if (arr) {
    out << "arrangement=" << arr->a << "," << arr->b << "," << arr->c << " d=" << arr->d << "\n";
    if (cls->frobenius) out << "closed_form_frobenius=" << *cls->frobenius << "\n";
    if (cls->genus) out << "closed_form_genus=" << *cls->genus << "\n";
  } else {
    out << "arrangement=none\n";
  }
  return kExitOk;
}

int cmd_glue(const Settings& s, const std::string& h1, const std::string& h2, Int x, Int y, std::ostream& out) {
  const GluingSpec spec{parse_semigroup(h1), parse_semigroup(h2), x, y};
  const auto h = glue(spec);
  const auto pf = pf_of_gluing(spec);
  const Int f = frobenius_of_gluing(spec);
  const bool as = is_almost_symmetric(h);
  const bool sym = is_symmetric(h);
  if (s.json) {
    json j{{"h1", block(spec.h1)},
           {"h2", block(spec.h2)},
           {"x", x},
           {"y", y},
           {"semigroup", block(h)},
           {"pf", pf},
           {"frobenius", f},
           {"symmetric", sym},
           {"almost_symmetric", as},
           {"class", to_string(classify(h).kind)}};
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "generators=" << h.to_string() << "\n"
      << "pf=" << join(pf) << "\n"
      << "frobenius=" << f << "\n"
      << "type=" << pf.size() << "\n"
      << "symmetric=" << yes_no(sym) << "\n"
      << "almost_symmetric=" << yes_no(as) << "\n";
  return kExitOk;
}

int cmd_decompose(const Settings& s, const std::string& gens, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  const auto decs = find_gluing_decompositions(h);
  if (s.json) {
    json list = json::array();
    for (const auto& d : decs) {
      list.push_back({{"h1", d.h1.generators()}, {"h2", d.h2.generators()}, {"x", d.x}, {"y", d.y}});
    }
    out << json{{"semigroup", block(h)}, {"decompositions", list}}.dump() << "\n";
    return kExitOk;
  }
  out << "decompositions=" << decs.size() << "\n";
  for (const auto& d : decs) {
    out << "x=" << d.x << " y=" << d.y << " h1=" << d.h1.to_string() << " h2=" << d.h2.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_ci(const Settings& s, const std::string& gens, std::ostream& out) {
  const auto h = parse_semigroup(gens);
  const bool ci = is_complete_intersection(h);
  const bool sym = is_symmetric(h);
  if (s.json) {
    out << json{{"semigroup", block(h)}, {"complete_intersection", ci}, {"symmetric", sym}}.dump() << "\n";
    return kExitOk;
  }
  out << "complete_intersection=" << yes_no(ci) << "\n" << "symmetric=" << yes_no(sym) << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string generators;
  int random = 0;
  std::uint64_t seed = 1;
  int max_genus = 12;
  bool golden = false;
  std::vector<Int> opened;
};

json report_json(const oracle::OracleReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"fast", c.fast_value}, {"oracle", c.oracle_value}});
  }
  return json{{"subject", r.subject}, {"all_pass", r.all_pass()}, {"checks", checks}};
}

int cmd_verify(const Settings& s, const VerifyArgs& v, std::ostream& out) {
  std::vector<oracle::OracleReport> reports;
  if (!v.generators.empty()) reports.push_back(oracle::verify(parse_semigroup(v.generators)));
  if (!v.opened.empty()) reports.push_back(oracle::verify_opened_modular(v.opened[0], v.opened[1]));
  if (v.golden) {
    auto g = oracle::verify_goldens();
    reports.insert(reports.end(), g.begin(), g.end());
  }
  if (v.random > 0) {
    const auto pool = oracle::enumerate_by_genus(v.max_genus, s.genus_cap);
    std::vector<NumericalSemigroup> picked;
    std::mt19937_64 rng(v.seed);
    std::sample(pool.begin(), pool.end(), std::back_inserter(picked), static_cast<std::size_t>(v.random), rng);
    auto rs = parallel_map<oracle::OracleReport>(picked.size(), s.jobs,
                                                 [&](std::size_t i) { return oracle::verify(picked[i]); });
    reports.insert(reports.end(), rs.begin(), rs.end());
  }
  if (reports.empty()) throw UsageError("verify needs generators, --opened, --golden or --random");

  std::size_t failed = 0;
  for (const auto& r : reports) {
    if (!r.all_pass()) ++failed;
    if (s.json) {
      out << report_json(r).dump() << "\n";
    } else {
      out << r.to_tap();
    }
  }
  if (!s.json) out << "# subjects=" << reports.size() << " failed=" << failed << "\n";
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

bool passes_filter(const NumericalSemigroup& h, const std::string& filter) {
  if (filter == "all") return true;
  if (filter == "symmetric") return is_symmetric(h);
  if (filter == "pseudo-symmetric") return is_pseudo_symmetric(h);
  if (filter == "almost-symmetric") return is_almost_symmetric(h);
  if (filter == "none") return !is_almost_symmetric(h);
  if (filter == "med") return is_maximal_embedding_dimension(h);
  if (filter == "ci") return is_complete_intersection(h);
  throw UsageError("unknown filter '" + filter + "'");
}

int cmd_enumerate(const Settings& s, int genus, const std::string& filter, bool exact, std::ostream& out) {
  passes_filter(NumericalSemigroup::natural(), filter);
  auto emit = [&](const NumericalSemigroup& h) {
    if (s.json) {
      out << block(h).dump() << "\n";
    } else {
      out << h.to_string() << "\n";
    }
  };
  if (s.jobs <= 1) {
    oracle::enumerate_by_genus(
        genus,
        [&](const NumericalSemigroup& h) {
          if ((!exact || h.genus() == genus) && passes_filter(h, filter)) emit(h);
        },
        s.genus_cap);
    return kExitOk;
  }
  auto all = oracle::enumerate_by_genus(genus, s.genus_cap);
  const auto keep = parallel_map<char>(all.size(), s.jobs, [&](std::size_t i) {
    return static_cast<char>((!exact || all[i].genus() == genus) && passes_filter(all[i], filter));
  });
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) emit(all[i]);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with numerical semigroups", "numsg"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_flag = false;
  int jobs = 0;
  int genus_cap = 0;
  std::string config_path;
  app.add_flag("--json", json_flag, "Emit JSON instead of key=value text");
  app.add_option("--jobs", jobs, "Worker threads for verify and enumerate")->check(CLI::PositiveNumber);
  app.add_option("--genus-cap", genus_cap, "Enumeration hard cap on the genus")->check(CLI::NonNegativeNumber);
  app.add_option("--config", config_path, "key=value file with defaults (genus_cap, jobs)");

  std::string gens;
  Int element = 0, a = 0, b = 0, x = 0, y = 0;
  std::string text, h1, h2 = "1", filter = "all";
  int genus = 0;
  bool exact = false;
  VerifyArgs verify_args;

  auto* info = app.add_subcommand("info", "Invariants of <generators>");
  info->add_option("generators", gens, "Comma-separated generators")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Symmetric / pseudo-symmetric / almost symmetric / none");
  classify_cmd->add_option("generators", gens)->required();
  auto* dual = app.add_subcommand("dual", "Dual of the maximal ideal, M - M");
  dual->add_option("generators", gens)->required();
  auto* medcover = app.add_subcommand("medcover", "The MED semigroup whose dual is H, built from an element of H");
  medcover->add_option("generators", gens)->required();
  medcover->add_option("element", element)->required();
  auto* modular = app.add_subcommand("modular", "Solutions of a*x mod b <= c*x, given as a:b:c");
  modular->add_option("inequality", text)->required();
  auto* opened = app.add_subcommand("opened", "Opened modular semigroup S(]b/a, b/(a-1)[)");
  opened->add_option("a", a)->required();
  opened->add_option("b", b)->required();
  auto* interval = app.add_subcommand("interval", "Semigroup of a rational interval such as [11/5..11/4]");
  interval->add_option("interval", text)->required();
  auto* threegen = app.add_subcommand("threegen", "Herzog matrix and arrangement of a 3-generated semigroup");
  threegen->add_option("generators", gens)->required();
  auto* glue_cmd = app.add_subcommand("glue", "Gluing <x*H1, y*H2>");
  glue_cmd->add_option("--h1", h1)->required();
  glue_cmd->add_option("--h2", h2, "Defaults to 1 (the naturals)");
  glue_cmd->add_option("--x", x)->required();
  glue_cmd->add_option("--y", y)->required();
  auto* decompose = app.add_subcommand("decompose", "All gluing decompositions");
  decompose->add_option("generators", gens)->required();
  auto* ci = app.add_subcommand("ci", "Complete intersection test");
  ci->add_option("generators", gens)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check fast routines against the brute-force oracle");
  verify_cmd->add_option("generators", verify_args.generators);
  verify_cmd->add_option("--random", verify_args.random, "Number of random semigroups from the enumeration");
  verify_cmd->add_option("--seed", verify_args.seed);
  verify_cmd->add_option("--max-genus", verify_args.max_genus, "Genus bound for --random");
  verify_cmd->add_flag("--golden", verify_args.golden, "Every worked example");
  verify_cmd->add_option("--opened", verify_args.opened, "a b for S(]b/a, b/(a-1)[)")->expected(2);
  auto* enumerate = app.add_subcommand("enumerate", "Every semigroup of genus <= N, one per line");
  enumerate->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--filter", filter,
                        "all | symmetric | pseudo-symmetric | almost-symmetric | none | med | ci");
  enumerate->add_flag("--exact", exact, "Only genus exactly N");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Settings s;
    if (!config_path.empty()) apply_config_file(config_path, s);
    if (const char* env = std::getenv("NUMSGPS_GENUS_CAP"); env != nullptr && *env != '\0') {
      s.genus_cap = parse_int(env, "NUMSGPS_GENUS_CAP");
    }
    if (app.count("--genus-cap") > 0) s.genus_cap = genus_cap;
    if (app.count("--jobs") > 0) s.jobs = jobs;
    s.json = json_flag;

    if (info->parsed()) return cmd_info(s, gens, out);
    if (classify_cmd->parsed()) return cmd_classify(s, gens, out);
    if (dual->parsed()) return cmd_dual(s, gens, out);
    if (medcover->parsed()) return cmd_medcover(s, gens, element, out);
    if (modular->parsed()) return cmd_modular(s, text, out);
    if (opened->parsed()) return cmd_opened(s, a, b, out);
    if (interval->parsed()) return cmd_interval(s, text, out);
    if (threegen->parsed()) return cmd_threegen(s, gens, out);
    if (glue_cmd->parsed()) return cmd_glue(s, h1, h2, x, y, out);
    if (decompose->parsed()) return cmd_decompose(s, gens, out);
    if (ci->parsed()) return cmd_ci(s, gens, out);
    if (verify_cmd->parsed()) return cmd_verify(s, verify_args, out);
    if (enumerate->parsed()) return cmd_enumerate(s, genus, filter, exact, out);
    throw UsageError("no subcommand");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::Parse ? kExitUsage : kExitDomain;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitCheckFailed;
  }
}

}  // namespace numsg::cli
