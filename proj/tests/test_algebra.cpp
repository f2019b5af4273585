#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hochq/algebra.hpp"
#include "hochq/error.hpp"
#include "support.hpp"

using namespace hochq;
using testing::draw;

namespace {

// Sorting by repeated leftmost-descent rewriting, written independently of
// the library's rewrite.
Ordered rewrite_oracle(const QMatrix& q, std::vector<int> w) {
  ScalarExponent s = q.scalars().identity();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        s *= q(w[p], w[p + 1]);  // x_i x_j = q_{i,j} x_j x_i
        std::swap(w[p], w[p + 1]);
        changed = true;
        break;
      }
    }
  }
  Monomial m = Monomial::one(q.n());
  for (int i : w) ++m.exps[i];
  return {s, m};
}

std::vector<int> word_of(const Monomial& a) {
  std::vector<int> w;
  for (int i = 0; i < a.n(); ++i) w.insert(w.end(), a.exps[i], i);
  return w;
}

std::vector<int> random_perm(std::mt19937_64& rng, int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  for (int i = k; i > 1; --i) std::swap(p[i - 1], p[draw(rng, 0, i - 1)]);
  return p;
}

std::vector<int> random_distinct(std::mt19937_64& rng, int n, int k) {
  auto p = random_perm(rng, n);
  p.resize(k);
  return p;
}

}  // namespace

TEST_CASE("normal_order examples") {
  const auto inst = testing::generic_plane();
  const auto& q = inst.q;
  auto r = normal_order(q, {0, 1});
  CHECK(r.scalar.is_one());
  CHECK(r.monomial == Monomial({1, 1}));
  r = normal_order(q, {1, 0});
  CHECK(r.scalar == q(1, 0));
  CHECK(r.scalar == q(0, 1).inverse());
  r = normal_order(q, {1, 0, 1, 0});
  CHECK(r.scalar == q(1, 0).pow(3));
  CHECK(r.monomial == Monomial({2, 2}));
  CHECK(normal_order_rewrite(q, {1, 0, 1, 0}).scalar == r.scalar);
  CHECK_THROWS_AS(normal_order(q, {0, 2}), PreconditionError);
}

TEST_CASE("normal_order closed form agrees with rewriting on random words") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(draw(rng, 1, 4));
    const auto inst = testing::random_instance(rng, n, {2, 6}, false, 3);
    std::vector<int> w(draw(rng, 0, 8));
    for (auto& x : w) x = static_cast<int>(draw(rng, 0, n - 1));
    const auto a = normal_order(inst.q, w);
    const auto b = normal_order_rewrite(inst.q, w);
    const auto c = rewrite_oracle(inst.q, w);
    CHECK(a.scalar == b.scalar);
    CHECK(a.monomial == b.monomial);
    CHECK(a.scalar == c.scalar);
    CHECK(a.monomial == c.monomial);
  }
}

TEST_CASE("mono_mul examples") {
  const auto inst = testing::generic_plane();
  const auto& q = inst.q;
  auto r = mono_mul(q, Monomial({1, 0}), Monomial({0, 1}));
  CHECK(r.scalar.is_one());
  CHECK(r.monomial == Monomial({1, 1}));
  r = mono_mul(q, Monomial({0, 1}), Monomial({1, 0}));
  CHECK(r.scalar == q(1, 0));
  r = mono_mul(q, Monomial({0, 2}), Monomial({3, 0}));
  CHECK(r.scalar == q(1, 0).pow(6));
  CHECK(r.monomial == Monomial({3, 2}));
  CHECK(rewrite_oracle(q, {1, 1, 0, 0, 0}).scalar == r.scalar);
}

TEST_CASE("mono_mul agrees with normal_order of the concatenated word") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(draw(rng, 1, 4));
    const auto inst = testing::random_instance(rng, n, {1, 4}, false, 2);
    const auto a = testing::random_monomial(rng, n, 5);
    const auto b = testing::random_monomial(rng, n, 5);
    auto w = word_of(a);
    const auto wb = word_of(b);
    w.insert(w.end(), wb.begin(), wb.end());
    const auto r = mono_mul(inst.q, a, b);
    const auto o = rewrite_oracle(inst.q, w);
    CHECK(r.scalar == o.scalar);
    CHECK(r.monomial == o.monomial);
  }
}

TEST_CASE("mono_mul and skew_mul are associative") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(draw(rng, 1, 4));
    const auto inst = testing::random_instance(rng, n, {1, 6}, true, 2);
    const auto a = testing::random_monomial(rng, n, 4);
    const auto b = testing::random_monomial(rng, n, 4);
    const auto c = testing::random_monomial(rng, n, 4);
    const auto ab = mono_mul(inst.q, a, b);
    const auto ab_c = mono_mul(inst.q, ab.monomial, c);
    const auto bc = mono_mul(inst.q, b, c);
    const auto a_bc = mono_mul(inst.q, a, bc.monomial);
    CHECK(ab.scalar * ab_c.scalar == bc.scalar * a_bc.scalar);
    CHECK(ab_c.monomial == a_bc.monomial);

    const int G = inst.group.size();
    const SkewTerm x{a, static_cast<int>(draw(rng, 0, G - 1))};
    const SkewTerm y{b, static_cast<int>(draw(rng, 0, G - 1))};
    const SkewTerm z{c, static_cast<int>(draw(rng, 0, G - 1))};
    const auto xy = skew_mul(inst, x, y);
    const auto xy_z = skew_mul(inst, {xy.monomial, xy.g}, z);
    const auto yz = skew_mul(inst, y, z);
    const auto x_yz = skew_mul(inst, x, {yz.monomial, yz.g});
    CHECK(xy.scalar * xy_z.scalar == yz.scalar * x_yz.scalar);
    CHECK(xy_z.monomial == x_yz.monomial);
    CHECK(xy_z.g == x_yz.g);
  }
}

TEST_CASE("q_pi examples") {
  std::mt19937_64 rng(4);
  const auto inst = testing::random_instance(rng, 4, {3, 5}, false, 3);
  const auto& q = inst.q;
  CHECK(q_pi(q, {0, 2, 3}, {0, 1, 2}).is_one());
  CHECK(q_pi(q, {1, 3}, {1, 0}) == q(1, 3));
  CHECK(q_pi(q, {0, 2, 3}, {2, 1, 0}) == q(0, 2) * q(0, 3) * q(2, 3));
  // the defining identity q_pi x_{j_pi(1)}... = x_{j_1}...
  CHECK(rewrite_oracle(q, {3, 2, 0}).scalar * q_pi(q, {0, 2, 3}, {2, 1, 0}) ==
        rewrite_oracle(q, {0, 2, 3}).scalar);
  CHECK_THROWS_AS(q_pi(q, {1, 1}, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(q_pi(q, {0, 1}, {0, 0}), PreconditionError);
}

TEST_CASE("q_pi matches the rewriting definition on random data") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(draw(rng, 1, 5));
    const auto inst = testing::random_instance(rng, n, {2, 7}, false, 3);
    const int k = static_cast<int>(draw(rng, 1, n));
    const auto j = random_distinct(rng, n, k);
    const auto pi = random_perm(rng, k);
    std::vector<int> permuted(k);
    for (int p = 0; p < k; ++p) permuted[p] = j[pi[p]];
    CHECK(q_pi(inst.q, j, pi) * rewrite_oracle(inst.q, permuted).scalar ==
          rewrite_oracle(inst.q, j).scalar);
  }
}

TEST_CASE("q_pi composition identity on random triples") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(draw(rng, 1, 5));
    const auto inst = testing::random_instance(rng, n, {2, 6}, false, 3);
    const int k = static_cast<int>(draw(rng, 1, n));
    const auto j = random_distinct(rng, n, k);
    const auto sigma = random_perm(rng, k);
    const auto tau = random_perm(rng, k);
    // product sigma tau: position p of the final word reads j at tau(sigma(p))
    std::vector<int> pi(k), j_tau(k);
    for (int p = 0; p < k; ++p) {
      pi[p] = tau[sigma[p]];
      j_tau[p] = j[tau[p]];
    }
    CHECK(q_pi(inst.q, j, pi) == q_pi(inst.q, j_tau, sigma) * q_pi(inst.q, j, tau));
    // q_{pi^{-1}} on the permuted indices inverts q_pi
    std::vector<int> inv(k), j_pi(k);
    for (int p = 0; p < k; ++p) {
      inv[pi[p]] = p;
      j_pi[p] = j[pi[p]];
    }
    CHECK((q_pi(inst.q, j, pi) * q_pi(inst.q, j_pi, inv)).is_one());
  }
}

TEST_CASE("skew_mul examples") {
  const auto inst = testing::generic_plane_sign_group();
  const int g = 1;
  auto r = skew_mul(inst, {Monomial({1, 0}), 0}, {Monomial({0, 1}), 0});
  CHECK(r.scalar.is_one());
  CHECK(r.monomial == Monomial({1, 1}));
  CHECK(r.g == 0);
  r = skew_mul(inst, {Monomial({0, 0}), g}, {Monomial({0, 1}), 0});
  CHECK(r.scalar == inst.scalars.root_of_unity(1));
  CHECK(r.monomial == Monomial({0, 1}));
  CHECK(r.g == g);
  r = skew_mul(inst, {Monomial({0, 1}), g}, {Monomial({1, 0}), g});
  CHECK(r.scalar == inst.scalars.root_of_unity(1) * inst.q(1, 0));
  CHECK(r.g == inst.group.identity());
  CHECK(r.g == inst.group.multiply(g, g));
}

TEST_CASE("act examples and multiplicativity") {
  const auto inst = testing::generic_plane_sign_group();
  CHECK(act(inst, 0, Monomial({3, 1}), WedgeIndex({0, 1})).is_one());
  CHECK(act(inst, 1, Monomial({1, 1}), WedgeIndex({1, 1})).is_one());
  const auto s = act(inst, 1, Monomial({1, 0}), WedgeIndex({1, 1}));
  CHECK(s.torsion() == 1);

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = testing::random_instance(rng, 3, {0, 6}, true);
    const auto a = testing::random_monomial(rng, 3, 5);
    const auto b = testing::random_wedge(rng, 3);
    for (int g = 0; g < r.group.size(); ++g)
      for (int h = 0; h < r.group.size(); ++h)
        CHECK(act(r, r.group.multiply(g, h), a, b) == act(r, g, a, b) * act(r, h, a, b));
  }
}

TEST_CASE("validate_instance accepts and rejects") {
  const ScalarGroupSpec spec{1, 3};
  RawInstance raw{spec, QMatrix(spec, 2), {}};
  raw.q.set(0, 1, spec.make({2}, 1));
  raw.q.set(1, 0, spec.make({-2}, 2));
  CHECK_NOTHROW(validate_instance(raw));

  auto code_of = [](const RawInstance& r) {
    try {
      validate_instance(r);
    } catch (const ValidationError& e) {
      return e.code() + "@" + e.location();
    }
    return std::string("ok");
  };
  auto bad = raw;
  bad.q.set(0, 0, spec.make({0}, 1));
  CHECK(code_of(bad) == "q_diagonal@q[1][1]");
  bad = raw;
  bad.q.set(1, 0, spec.make({-2}, 1));
  CHECK(code_of(bad) == "q_inverse@q[2][1]");

  // order-3 element without its square
  bad = raw;
  bad.group_elements = {{spec.make({0}, 0), spec.make({0}, 0)}, {spec.make({0}, 1), spec.make({0}, 0)}};
  CHECK(code_of(bad).rfind("group_closure", 0) == 0);
  bad.group_elements.push_back({spec.make({0}, 2), spec.make({0}, 0)});
  CHECK(code_of(bad) == "ok");
  bad.group_elements.push_back({spec.make({0}, 2), spec.make({0}, 0)});
  CHECK(code_of(bad).rfind("group_duplicate", 0) == 0);

  bad = raw;
  bad.group_elements = {{spec.make({0}, 0), spec.make({1}, 0)}};
  CHECK(code_of(bad) == "lambda_finite_order@element 0 entry 2");
  bad = raw;
  bad.group_elements = {{spec.make({0}, 1), spec.make({0}, 0)}, {spec.make({0}, 2), spec.make({0}, 0)}};
  CHECK(code_of(bad).rfind("group_identity", 0) == 0);
}

TEST_CASE("generated groups are closed") {
  const ScalarGroupSpec spec{0, 6};
  const auto g = DiagonalGroup::generated_by(spec, 2, {{2, 3}});
  CHECK(g.size() == 6);
  CHECK(g.character(g.identity()) == std::vector<std::int64_t>{0, 0});
  for (int a = 0; a < g.size(); ++a) {
    CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    for (int b = 0; b < g.size(); ++b) CHECK(g.multiply(a, b) == g.multiply(b, a));
  }
  CHECK(DiagonalGroup::generated_by(spec, 2, {{2, 0}, {0, 3}}).size() == 6);
}
