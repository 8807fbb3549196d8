#include "numsg/threegen.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <vector>

#include "numsg/classify.hpp"
#include "numsg/error.hpp"

namespace numsg {
namespace {

struct MinimalRelation {
  Int multiple = 0;  // least k > 0 with k*x in <y, z>
  Int on_y = 0;
  Int on_z = 0;
};

// Least k with k*x = u*y + v*z, u, v >= 0. Non-symmetric input forces the
// representation to be unique with u, v >= 1.
MinimalRelation minimal_relation(Int x, Int y, Int z) {
  const Int bound = y * z;
  for (Int k = 1; k <= bound; ++k) {
    const Int target = k * x;
    std::vector<std::pair<Int, Int>> reps;
    for (Int u = 0; u * y <= target; ++u) {
      const Int rest = target - u * y;
      if (rest % z == 0) reps.emplace_back(u, rest / z);
    }
    if (reps.empty()) continue;
    for (auto [u, v] : reps) {
      if (u == 0 || v == 0) {
        throw Error(ErrorCode::SymmetricInput, "minimal relation has a zero exponent; the semigroup is symmetric");
      }
    }
    detail::ensure(reps.size() == 1, "minimal relation is not unique");
    return {k, reps.front().first, reps.front().second};
  }
  throw InconsistencyError("no minimal relation within the search bound");
}

void require_three_generated(const NumericalSemigroup& h) {
  if (h.embedding_dimension() != 3) {
    throw Error(ErrorCode::NotThreeGenerated, "<" + h.to_string() + "> has embedding dimension " +
                                                  std::to_string(h.embedding_dimension()));
  }
}

}  // namespace

std::string HerzogMatrix::to_string() const {
  std::ostringstream os;
  os << "X^" << alpha << " Y^" << beta << " Z^" << gamma << "\n"
     << "Y^" << beta_p << " Z^" << gamma_p << " X^" << alpha_p;
  return os.str();
}

bool satisfies_relations(const HerzogMatrix& mt, Int a, Int b, Int c) {
  const bool minors = a == mt.beta * mt.gamma + mt.beta_p * mt.gamma + mt.beta_p * mt.gamma_p &&
                      b == mt.gamma * mt.alpha + mt.gamma_p * mt.alpha + mt.gamma_p * mt.alpha_p &&
                      c == mt.alpha * mt.beta + mt.alpha_p * mt.beta + mt.alpha_p * mt.beta_p;
  const bool kernel = (mt.alpha + mt.alpha_p) * a == mt.beta_p * b + mt.gamma * c &&
                      (mt.beta + mt.beta_p) * b == mt.alpha * a + mt.gamma_p * c &&
                      (mt.gamma + mt.gamma_p) * c == mt.alpha_p * a + mt.beta * b;
  return minors && kernel;
}

HerzogMatrix herzog_matrix(const NumericalSemigroup& h) {
  require_three_generated(h);
  return herzog_matrix(h, h.generators()[0], h.generators()[1], h.generators()[2]);
}

HerzogMatrix herzog_matrix(const NumericalSemigroup& h, Int a, Int b, Int c) {
  require_three_generated(h);
  std::array<Int, 3> labels{a, b, c};
  std::sort(labels.begin(), labels.end());
  if (!std::equal(labels.begin(), labels.end(), h.generators().begin())) {
    throw Error(ErrorCode::BadParameters, "labels must be a permutation of the minimal generators");
  }
  if (is_symmetric(h)) throw Error(ErrorCode::SymmetricInput, "<" + h.to_string() + "> is symmetric");

  const auto ra = minimal_relation(a, b, c);  // (alpha+alpha')a = beta'b + gamma c
  const auto rb = minimal_relation(b, a, c);  // (beta+beta')b = alpha a + gamma'c
  const auto rc = minimal_relation(c, a, b);  // (gamma+gamma')c = alpha'a + beta b

  HerzogMatrix mt;
  mt.beta_p = ra.on_y;
  mt.gamma = ra.on_z;
  mt.alpha = rb.on_y;
  mt.gamma_p = rb.on_z;
  mt.alpha_p = rc.on_y;
  mt.beta = rc.on_z;
  detail::ensure(ra.multiple == mt.alpha + mt.alpha_p, "alpha + alpha' differs from the minimal multiple of a");
  detail::ensure(rb.multiple == mt.beta + mt.beta_p, "beta + beta' differs from the minimal multiple of b");
  detail::ensure(rc.multiple == mt.gamma + mt.gamma_p, "gamma + gamma' differs from the minimal multiple of c");
  detail::ensure(satisfies_relations(mt, a, b, c), "Herzog exponents violate the minor relations");
  return mt;
}

std::pair<Int, Int> pf_from_matrix(const NumericalSemigroup& h, const HerzogMatrix& mt) {
  require_three_generated(h);
  const Int a = h.generators()[0];
  const Int b = h.generators()[1];
  const Int c = h.generators()[2];
  const Int s = a + b + c;
  Int p = mt.alpha * a + (mt.gamma + mt.gamma_p) * c - s;
  Int q = mt.beta_p * b + (mt.gamma + mt.gamma_p) * c - s;
  if (p > q) std::swap(p, q);
  detail::ensure(p != q, "matrix pseudo-Frobenius numbers coincide");
  const auto pf = pseudo_frobenius(h);
  detail::ensure(pf.size() == 2 && pf[0] == p && pf[1] == q, "matrix pseudo-Frobenius numbers differ from PF(H)");
  return {p, q};
}

bool is_pseudo_symmetric_by_matrix(const NumericalSemigroup& h) {
  const auto mt = herzog_matrix(h);
  const bool result = (mt.alpha * mt.beta * mt.gamma == 1) || (mt.alpha_p * mt.beta_p * mt.gamma_p == 1);
  detail::ensure(result == is_pseudo_symmetric(h), "matrix pseudo-symmetry criterion disagrees with 2g = F + 2");
  return result;
}

std::optional<PMThreeGenArrangement> pm_arrangement_3(const NumericalSemigroup& h) {
  require_three_generated(h);
  std::array<Int, 3> g{h.generators()[0], h.generators()[1], h.generators()[2]};
  std::vector<PMThreeGenArrangement> found;
  do {
    const Int a = g[0], b = g[1], c = g[2];
    if (a > c) continue;
    if (std::gcd(a, b) != 1 || std::gcd(b, c) != 1 || (a + c) % b != 0) continue;
    const Int d = (a + c) / b;
    if (d >= 2) found.push_back({a, b, c, d});
  } while (std::next_permutation(g.begin(), g.end()));
  if (found.empty()) return std::nullopt;
  return found.front();
}

PMThreeGenClass classify_pm_threegen(const PMThreeGenArrangement& arr) {
  Int a = arr.a;
  const Int b = arr.b;
  Int c = arr.c;
  const Int d = arr.d;
  if (d < 2 || d * b != a + c || std::gcd(a, b) != 1 || std::gcd(b, c) != 1) {
    throw Error(ErrorCode::BadParameters, "not a normal-form arrangement");
  }
  const auto h = NumericalSemigroup::from_generators({a, b, c});

  PMThreeGenClass out;
  out.symmetric = d == std::gcd(a, c);
  out.pseudo_symmetric = 2 * d == a + 1 || 2 * d == c + 1;
  detail::ensure(out.symmetric == is_symmetric(h), "d = gcd(a, c) disagrees with symmetry");
  detail::ensure(out.pseudo_symmetric == is_pseudo_symmetric(h), "d = (a+1)/2 or (c+1)/2 disagrees with pseudo-symmetry");

  if (out.symmetric) {
    const Int num = a * b * c - a * b - b * c;
    detail::ensure(num % (a + c) == 0 && (num + a + c) % (2 * (a + c)) == 0, "symmetric closed forms are not integral");
    out.frobenius = num / (a + c);
    out.genus = (num + a + c) / (2 * (a + c));
  } else if (out.pseudo_symmetric) {
    if (2 * d != a + 1) std::swap(a, c);
    out.frobenius = 2 * (c - b);
    out.genus = c - b + 1;
  }
  if (out.frobenius) {
    detail::ensure(*out.frobenius == h.frobenius(), "three-generated Frobenius closed form mismatch");
    detail::ensure(*out.genus == h.genus(), "three-generated genus closed form mismatch");
  }
  return out;
}

}  // namespace numsg
