#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "hochq/algebra.hpp"
#include "hochq/cyclotomic.hpp"
#include "hochq/koszul.hpp"

namespace testing {

using hochq::QInstance;
using hochq::ScalarExponent;
using hochq::ScalarGroupSpec;

/// Uniform draw in [lo, hi] that does not depend on the standard library's
/// distribution implementation.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// N = 2, q_{1,2} = t generic, trivial group.
inline QInstance generic_plane() {
  const ScalarGroupSpec spec{1, 1};
  return hochq::make_instance(spec, 2, {spec.make({1}, 0)});
}

/// N = 2, q_{1,2} = zeta_ell, trivial group.
inline QInstance root_plane(int ell) {
  const ScalarGroupSpec spec{0, ell};
  return hochq::make_instance(spec, 2, {spec.make({}, 1)});
}

/// N = 2, q_{1,2} = t, G = <g> with lambda_g = (-1, -1).
inline QInstance generic_plane_sign_group() {
  const ScalarGroupSpec spec{1, 2};
  return hochq::make_instance(spec, 2, {spec.make({1}, 0)}, {{1, 1}});
}

inline ScalarExponent random_exponent(std::mt19937_64& rng, const ScalarGroupSpec& spec,
                                      int free_range) {
  std::vector<std::int64_t> f(spec.free_rank);
  for (auto& v : f) v = draw(rng, -free_range, free_range);
  return spec.make(f, draw(rng, 0, spec.torsion_order - 1));
}

/// Random q upper triangle over spec, optional cyclic group from one random
/// generator vector.
inline QInstance random_instance(std::mt19937_64& rng, int n, const ScalarGroupSpec& spec,
                                 bool with_group, int free_range = 1) {
  std::vector<ScalarExponent> upper;
  for (int i = 0; i < n * (n - 1) / 2; ++i) upper.push_back(random_exponent(rng, spec, free_range));
  std::vector<std::vector<std::int64_t>> gens;
  if (with_group) {
    std::vector<std::int64_t> g(n);
    for (auto& v : g) v = draw(rng, 0, spec.torsion_order - 1);
    gens.push_back(g);
  }
  return hochq::make_instance(spec, n, upper, gens);
}

inline hochq::Monomial random_monomial(std::mt19937_64& rng, int n, int max_degree) {
  hochq::Monomial a = hochq::Monomial::one(n);
  int budget = static_cast<int>(draw(rng, 0, max_degree));
  while (budget-- > 0) ++a.exps[draw(rng, 0, n - 1)];
  return a;
}

inline hochq::WedgeIndex random_wedge(std::mt19937_64& rng, int n) {
  hochq::WedgeIndex b = hochq::WedgeIndex::empty(n);
  for (auto& v : b.bits) v = static_cast<int>(draw(rng, 0, 1));
  return b;
}

/// Numerical image of a field element under zeta_L -> exp(2 pi i / L); a
/// floating-point cross-check independent of the exact reduction code.
inline std::complex<double> evaluate(const hochq::CyclotomicNumber& a) {
  const double pi = 3.14159265358979323846;
  const auto zeta = std::polar(1.0, 2 * pi / static_cast<double>(a.order()));
  std::complex<double> out = 0, power = 1;
  for (const auto& c : a.coeffs()) {
    out += c.get_d() * power;
    power *= zeta;
  }
  return out;
}

}  // namespace testing
