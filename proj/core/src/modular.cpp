#include "numsg/modular.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "numsg/error.hpp"

namespace numsg {
namespace {

using Wide = __int128;

Int floor_div(Wide n, Wide d) {
  Wide q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return static_cast<Int>(q);
}

Int ceil_div(Wide n, Wide d) { return -floor_div(-n, d); }

// n in S(I) for n >= 1: some k >= 1 with k*lo <= n <= k*hi (strict on open ends).
bool in_interval_semigroup(const RationalInterval& iv, Int n) {
  if (n == 0) return true;
  const Wide top = static_cast<Wide>(n) * iv.lo.den();
  Int kmax = floor_div(top, iv.lo.num());
  if (iv.lo_open && top % iv.lo.num() == 0) --kmax;
  const Wide bottom = static_cast<Wide>(n) * iv.hi.den();
  Int kmin = ceil_div(bottom, iv.hi.num());
  if (iv.hi_open && bottom % iv.hi.num() == 0) ++kmin;
  return std::max<Int>(kmin, 1) <= kmax;
}

Int parse_int(std::string_view tok) {
  while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
  while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
  if (tok.size() >= 2 && tok.front() == '(' && tok.back() == ')') tok = tok.substr(1, tok.size() - 2);
  Int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorCode::Parse, "bad integer '" + std::string(tok) + "'");
  }
  return v;
}

Rational parse_rational(std::string_view tok) {
  const auto slash = tok.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(tok), 1);
  return Rational(parse_int(tok.substr(0, slash)), parse_int(tok.substr(slash + 1)));
}

void require_opened_range(Int a, Int b) {
  if (a < 2 || b < a) {
    throw Error(ErrorCode::BadParameters,
                "opened modular parameters need 2 <= a <= b, got a=" + std::to_string(a) + " b=" + std::to_string(b));
  }
}

}  // namespace

Rational::Rational(Int num, Int den) {
  if (den == 0) throw Error(ErrorCode::BadParameters, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::string RationalInterval::to_string() const {
  return std::string(lo_open ? "]" : "[") + lo.to_string() + ".." + hi.to_string() + (hi_open ? "[" : "]");
}

ProportionalInequality parse_inequality(std::string_view text) {
  const auto values_text = std::string(text);
  std::vector<Int> parts;
  std::size_t pos = 0;
  while (true) {
    const auto end = values_text.find(':', pos);
    parts.push_back(parse_int(std::string_view(values_text).substr(pos, end == std::string::npos ? std::string::npos : end - pos)));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  if (parts.size() != 3) throw Error(ErrorCode::Parse, "inequality must be a:b:c");
  for (Int v : parts) {
    if (v <= 0) throw Error(ErrorCode::BadParameters, "a, b, c must be positive");
  }
  return {parts[0], parts[1], parts[2]};
}

RationalInterval parse_interval(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::Parse, "empty interval");
  RationalInterval iv;
  const char open = text.front();
  if (open != '[' && open != '(' && open != ']') throw Error(ErrorCode::Parse, "interval must start with '[', '(' or ']'");
  iv.lo_open = open != '[';
  text.remove_prefix(1);
  iv.hi_open = iv.lo_open;
  if (!text.empty() && (text.back() == ']' || text.back() == ')' || text.back() == '[')) {
    iv.hi_open = text.back() != ']';
    text.remove_suffix(1);
  }
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw Error(ErrorCode::Parse, "interval needs 'lo..hi'");
  iv.lo = parse_rational(text.substr(0, dots));
  iv.hi = parse_rational(text.substr(dots + 2));
  return iv;
}

NumericalSemigroup solve_inequality(const ProportionalInequality& q) {
  if (q.a <= 0 || q.b <= 0 || q.c <= 0) throw Error(ErrorCode::BadParameters, "a, b, c must be positive");
  if (q.c >= q.a) return NumericalSemigroup::natural();
  // For x >= b: a*x mod b < b <= x <= c*x, so the conductor is at most b.
  std::vector<Int> small;
  for (Int x = 0; x < q.b; ++x) {
    if (static_cast<Wide>(q.a) * x % q.b <= static_cast<Wide>(q.c) * x) small.push_back(x);
  }
  return NumericalSemigroup::from_small_elements(small, q.b);
}

NumericalSemigroup semigroup_of_interval(const RationalInterval& iv) {
  if (iv.lo.num() <= 0) throw Error(ErrorCode::EmptyInterval, "interval must lie in the positive reals");
  if (iv.hi < iv.lo || (iv.hi == iv.lo && (iv.lo_open || iv.hi_open))) {
    throw Error(ErrorCode::EmptyInterval, iv.to_string() + " is empty");
  }
  if (iv.hi == iv.lo) {
    // Integer points k*p/q are the multiples of p.
    if (iv.lo.num() != 1) {
      throw Error(ErrorCode::GcdNotOne, iv.to_string() + " only yields multiples of " + std::to_string(iv.lo.num()));
    }
    return NumericalSemigroup::natural();
  }
  // For k >= K = ceil((lo + 1)/(hi - lo)) consecutive open intervals
  // (k*lo, k*hi) overlap by at least 1, so every n > K*lo is a member.
  const Wide width_num = static_cast<Wide>(iv.hi.num()) * iv.lo.den() - static_cast<Wide>(iv.lo.num()) * iv.hi.den();
  const Wide width_den = static_cast<Wide>(iv.hi.den()) * iv.lo.den();
  const Wide lo_plus_one_num = static_cast<Wide>(iv.lo.num()) + iv.lo.den();
  const Int k0 = std::max<Int>(1, ceil_div(lo_plus_one_num * width_den, static_cast<Wide>(iv.lo.den()) * width_num));
  const Int conductor_bound = floor_div(static_cast<Wide>(k0) * iv.lo.num(), iv.lo.den()) + 1;

  std::vector<Int> small;
  for (Int n = 0; n < conductor_bound; ++n) {
    if (in_interval_semigroup(iv, n)) small.push_back(n);
  }
  return NumericalSemigroup::from_small_elements(small, conductor_bound);
}

RationalInterval interval_of_inequality(const ProportionalInequality& q) {
  if (q.c >= q.a) throw Error(ErrorCode::ProportionTooLarge, "interval form needs c < a");
  RationalInterval iv{Rational(q.b, q.a), Rational(q.b, q.a - q.c), false, false};
  detail::ensure(semigroup_of_interval(iv) == solve_inequality(q), "S(a,b,c) differs from S([b/a, b/(a-c)])");
  return iv;
}

NumericalSemigroup opened_modular(Int a, Int b) {
  require_opened_range(a, b);
  return semigroup_of_interval(RationalInterval{Rational(b, a), Rational(b, a - 1), true, true});
}

NumericalSemigroup half_line(Int m) {
  if (m < 1) throw Error(ErrorCode::BadParameters, "half-line needs m >= 1");
  std::vector<Int> gens;
  for (Int g = m; g < 2 * m; ++g) gens.push_back(g);
  return NumericalSemigroup::from_generators(gens);
}

Int delta(Int a, Int b, Int c) {
  if (!(0 < c && c < a && a < b)) {
    throw Error(ErrorCode::BadParameters, "delta needs 0 < c < a < b");
  }
  const Wide rhs = static_cast<Wide>(c - 1) * b + a - c;
  for (Int k = 1; k <= a - 1; ++k) {
    const Wide kb = static_cast<Wide>(k) * b;
    if (kb % a + (kb / a) * c > rhs) return k;
  }
  throw Error(ErrorCode::NoDelta, "no k in [1, a-1] satisfies the delta condition");
}

Int frobenius_modular(Int a, Int b, Int c) {
  const Int d = delta(a, b, c);
  const Int value = b - floor_div(static_cast<Wide>(d) * b, a) - 1;
  detail::ensure(value == solve_inequality({a, b, c}).frobenius(), "Frobenius formula for S(a,b,c) disagrees with scan");
  return value;
}

OpenedModularInvariants opened_modular_invariants(Int a, Int b) {
  require_opened_range(a, b);
  const Int d = std::gcd(a, b);
  const Int dp = std::gcd(a - 1, b);
  detail::ensure((b + d + dp - 1) % 2 == 0, "b + d + d' - 1 must be even");
  OpenedModularInvariants inv{b, (b + d + dp - 1) / 2, d + dp - 1};

  const auto h = opened_modular(a, b);
  detail::ensure(inv.frobenius == h.frobenius(), "opened modular: F != b");
  detail::ensure(inv.genus == h.genus(), "opened modular: genus formula mismatch");
  detail::ensure(inv.type == type_of(h), "opened modular: type formula mismatch");
  return inv;
}

Int closed_interval_genus(Int a, Int b) {
  require_opened_range(a, b);
  const Int d = std::gcd(a, b);
  const Int dp = std::gcd(a - 1, b);
  detail::ensure((b + 1 - d - dp) % 2 == 0, "b + 1 - d - d' must be even");
  const Int value = (b + 1 - d - dp) / 2;
  const auto h = semigroup_of_interval(RationalInterval{Rational(b, a), Rational(b, a - 1), false, false});
  detail::ensure(value == h.genus(), "closed interval genus formula mismatch");
  return value;
}

MultiplicityResult multiplicity_opened_modular(Int a, Int b) {
  require_opened_range(a, b);
  const Int direct = opened_modular(a, b).multiplicity();
  if (a == b) return {direct, false};
  const Int d = delta(a, b, 1);
  const Int value = floor_div(static_cast<Wide>(d) * b, a) + 1;
  detail::ensure(value == direct, "multiplicity formula disagrees with the opened modular semigroup");
  return {value, true};
}

std::optional<std::vector<Int>> proportionally_modular_arrangement(const NumericalSemigroup& h) {
  const auto& gens = h.generators();
  const std::size_t n = gens.size();
  std::vector<Int> path;
  std::vector<char> used(n, 0);
  path.reserve(n);

  auto extend = [&](auto&& self) -> bool {
    if (path.size() == n) return true;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const Int g = gens[i];
      const std::size_t len = path.size();
      if (len >= 1 && std::gcd(path[len - 1], g) != 1) continue;
      if (len >= 2 && (path[len - 2] + g) % path[len - 1] != 0) continue;
      used[i] = 1;
      path.push_back(g);
      if (self(self)) return true;
      path.pop_back();
      used[i] = 0;
    }
    return false;
  };
  if (extend(extend)) return path;
  return std::nullopt;
}

}  // namespace numsg
