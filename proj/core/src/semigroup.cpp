#include "numsg/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "numsg/error.hpp"

namespace numsg {
namespace {

constexpr Int kInf = std::numeric_limits<Int>::max();
constexpr Int kMaxMultiplicity = Int{1} << 24;
constexpr __int128 kMagnitudeLimit = static_cast<__int128>(1) << 62;

// Shortest residue path over the generator graph: dist[r] is the least
// combination of `gens` congruent to r mod m (kInf when unreachable).
std::vector<Int> residue_minima(std::span<const Int> gens, Int m) {
  std::vector<Int> dist(static_cast<std::size_t>(m), kInf);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Int g : gens) {
      const Int next = (r + g) % m;
      const Int nd = d + g;
      if (nd < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = nd;
        queue.emplace(nd, next);
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::natural() { return from_generators({1}); }

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> input) {
  if (input.empty()) throw Error(ErrorCode::EmptyInput, "no generators given");
  std::vector<Int> gens(input.begin(), input.end());
  for (Int g : gens) {
    if (g <= 0) throw Error(ErrorCode::BadParameters, "generators must be positive, got " + std::to_string(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Int d = 0;
  for (Int g : gens) d = std::gcd(d, g);
  if (d != 1) throw Error(ErrorCode::GcdNotOne, "gcd of generators is " + std::to_string(d));

  const Int m = gens.front();
  if (m > kMaxMultiplicity) {
    throw Error(ErrorCode::Overflow, "multiplicity " + std::to_string(m) + " exceeds the Apery table limit");
  }
  // Every Apery element is a sum of at most m-1 generators, so F < (m-1)*max.
  if (static_cast<__int128>(m - 1) * gens.back() + m >= kMagnitudeLimit) {
    throw Error(ErrorCode::Overflow, "Frobenius number bound exceeds 2^62");
  }

  NumericalSemigroup h;
  h.apery_ = residue_minima(gens, m);

  // g is redundant iff g - a lies in H for some smaller generator a.
  h.gens_.reserve(gens.size());
  for (Int g : gens) {
    bool redundant = false;
    for (Int a : gens) {
      if (a >= g) break;
      const Int r = g - a;
      if (r >= h.apery_[static_cast<std::size_t>(r % m)]) {
        redundant = true;
        break;
      }
    }
    if (!redundant) h.gens_.push_back(g);
  }

  Int max_w = 0;
  Int sum = 0;
  for (std::size_t i = 0; i < h.apery_.size(); ++i) {
    max_w = std::max(max_w, h.apery_[i]);
    sum += (h.apery_[i] - static_cast<Int>(i)) / m;
  }
  h.frobenius_ = max_w - m;
  h.genus_ = sum;
  return h;
}

NumericalSemigroup NumericalSemigroup::from_small_elements(std::span<const Int> small, Int conductor) {
  if (conductor <= 1) return natural();
  if (std::find(small.begin(), small.end(), 0) == small.end()) {
    throw Error(ErrorCode::BadParameters, "member list must contain 0");
  }
  Int m = conductor;
  for (Int x : small) {
    if (x < 0 || x >= conductor) throw Error(ErrorCode::BadParameters, "member outside [0, conductor)");
    if (x > 0) m = std::min(m, x);
  }
  const Int limit = conductor + m;
  std::vector<char> member(static_cast<std::size_t>(limit + 1), 0);
  for (Int x : small) member[static_cast<std::size_t>(x)] = 1;
  for (Int x = conductor; x <= limit; ++x) member[static_cast<std::size_t>(x)] = 1;

  std::vector<Int> gens;
  for (Int x = 1; x <= limit; ++x) {
    if (!member[static_cast<std::size_t>(x)]) continue;
    bool decomposable = false;
    for (Int s = 1; s <= x / 2 && !decomposable; ++s) {
      decomposable = member[static_cast<std::size_t>(s)] && member[static_cast<std::size_t>(x - s)];
    }
    if (!decomposable) gens.push_back(x);
  }
  NumericalSemigroup h = from_generators(gens);
  for (Int x = 0; x < conductor; ++x) {
    if (h.contains(x) != static_cast<bool>(member[static_cast<std::size_t>(x)])) {
      throw Error(ErrorCode::BadParameters, "member set is not closed under addition (at " + std::to_string(x) + ")");
    }
  }
  return h;
}

std::string NumericalSemigroup::to_string() const { return join(gens_); }

bool contains(const NumericalSemigroup& h, Int x) noexcept { return h.contains(x); }

AperySet apery_set(const NumericalSemigroup& h, Int n) {
  if (n <= 0 || !h.contains(n)) {
    throw Error(ErrorCode::NotAMember, std::to_string(n) + " is not a nonzero element of <" + h.to_string() + ">");
  }
  AperySet ap{n, {}};
  ap.elements.reserve(static_cast<std::size_t>(n));
  const Int bound = h.frobenius() + n;
  for (Int x = 0; x <= bound; ++x) {
    if (h.contains(x) && !h.contains(x - n)) ap.elements.push_back(x);
  }
  detail::ensure(static_cast<Int>(ap.elements.size()) == n, "Apery set size differs from n");
  return ap;
}

Int frobenius(const NumericalSemigroup& h) noexcept { return h.frobenius(); }

Int genus(const NumericalSemigroup& h) noexcept { return h.genus(); }

std::vector<Int> gaps(const NumericalSemigroup& h) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(h.genus()));
  for (Int x = 1; x <= h.frobenius(); ++x) {
    if (!h.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& h) {
  if (h.is_natural()) return {-1};
  // w in Ap(H, m) is maximal for <=_H iff w + a - m stays in H for every
  // generator a; then w - m is pseudo-Frobenius.
  const Int m = h.multiplicity();
  std::vector<Int> pf;
  for (Int w : h.apery_table()) {
    if (w == 0) continue;
    const bool maximal = std::all_of(h.generators().begin(), h.generators().end(),
                                     [&](Int a) { return h.contains(w + a - m); });
    if (maximal) pf.push_back(w - m);
  }
  std::sort(pf.begin(), pf.end());
  return pf;
}

Int type_of(const NumericalSemigroup& h) { return static_cast<Int>(pseudo_frobenius(h).size()); }

bool is_maximal_embedding_dimension(const NumericalSemigroup& h) noexcept {
  return h.embedding_dimension() == h.multiplicity();
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorCode::Parse, "bad integer '" + std::string(tok) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

NumericalSemigroup parse_semigroup(std::string_view text) {
  const auto values = parse_int_list(text);
  return NumericalSemigroup::from_generators(values);
}

std::string join(std::span<const Int> values, std::string_view sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << sep;
    os << values[i];
  }
  return os.str();
}

}  // namespace numsg
