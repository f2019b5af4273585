#include <random>
#include <set>

#include "doctest.h"
#include "hochq/cohomology.hpp"
#include "hochq/error.hpp"
#include "support.hpp"

using namespace hochq;
using testing::draw;

namespace {

std::set<std::pair<Monomial, WedgeIndex>> keys_of(const std::vector<CohomologyClass>& v) {
  std::set<std::pair<Monomial, WedgeIndex>> out;
  for (const auto& c : v) out.insert({c.key.alpha, c.key.beta});
  return out;
}

}  // namespace

TEST_CASE("in_C_g examples") {
  const auto inst = testing::generic_plane_sign_group();
  for (int g = 0; g < inst.group.size(); ++g) CHECK(in_C_g(inst, g, {-1, -1}));
  CHECK(in_C_g(inst, 0, {0, 0}));
  CHECK_FALSE(in_C_g(inst, 1, {0, 0}));
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = testing::random_instance(rng, 3, {1, 4}, true);
    Signature gamma(3);
    for (auto& v : gamma) v = static_cast<int>(draw(rng, -1, 4));
    const int g = static_cast<int>(draw(rng, 0, r.group.size() - 1));
    CHECK(in_C_g(r, g, gamma) == (graded_norm(r, g, gamma) == 0));
  }
}

TEST_CASE("hh_basis for generic N = 2") {
  const auto inst = testing::generic_plane();
  const auto h1 = hh_basis(inst, 0, 1, 5);
  REQUIRE(h1.size() == 2);
  CHECK(keys_of(h1) == std::set<std::pair<Monomial, WedgeIndex>>{
                           {Monomial({1, 0}), WedgeIndex({1, 0})},
                           {Monomial({0, 1}), WedgeIndex({0, 1})}});
  CHECK(keys_of(hh_basis(inst, 0, 0, 8)) ==
        std::set<std::pair<Monomial, WedgeIndex>>{{Monomial({0, 0}), WedgeIndex({0, 0})}});
  CHECK(keys_of(hh_basis(inst, 0, 2, 8)) == std::set<std::pair<Monomial, WedgeIndex>>{
                                                {Monomial({0, 0}), WedgeIndex({1, 1})},
                                                {Monomial({1, 1}), WedgeIndex({1, 1})}});
}

TEST_CASE("hh_basis for the sign group") {
  const auto inst = testing::generic_plane_sign_group();
  CHECK(hh_basis(inst, 1, 0, 8).empty());
  CHECK(hh_basis(inst, 1, 1, 8).empty());
  const auto h2 = hh_basis(inst, 1, 2, 8);
  REQUIRE(h2.size() == 1);
  CHECK(h2[0].key.alpha == Monomial({0, 0}));
  CHECK(h2[0].key.beta == WedgeIndex({1, 1}));
}

TEST_CASE("hh_basis at a root of unity follows divisibility") {
  for (int ell : {2, 3, 4}) {
    const auto inst = testing::root_plane(ell);
    const int D = 10;
    std::set<std::pair<Monomial, WedgeIndex>> expect[3];
    for (int a = 0; a <= D; ++a) {
      for (int b = 0; a + b <= D; ++b) {
        if (a % ell == 0 && b % ell == 0) expect[0].insert({Monomial({a, b}), WedgeIndex({0, 0})});
        if ((a - 1) % ell == 0 && a >= 1 && b % ell == 0)
          expect[1].insert({Monomial({a, b}), WedgeIndex({1, 0})});
        if (a % ell == 0 && b >= 1 && (b - 1) % ell == 0)
          expect[1].insert({Monomial({a, b}), WedgeIndex({0, 1})});
        if (a >= 1 && b >= 1 && (a - 1) % ell == 0 && (b - 1) % ell == 0)
          expect[2].insert({Monomial({a, b}), WedgeIndex({1, 1})});
      }
    }
    expect[2].insert({Monomial({0, 0}), WedgeIndex({1, 1})});
    for (int m = 0; m <= 2; ++m) CHECK(keys_of(hh_basis(inst, 0, m, D)) == expect[m]);
  }
}

TEST_CASE("hh_basis is sorted and deterministic") {
  std::mt19937_64 rng(2);
  const auto inst = testing::random_instance(rng, 3, {1, 3}, true);
  for (int g = 0; g < inst.group.size(); ++g) {
    for (int m = 0; m <= 3; ++m) {
      const auto b = hh_basis(inst, g, m, 5);
      CHECK(std::is_sorted(b.begin(), b.end()));
      CHECK(b == hh_basis(inst, g, m, 5));
    }
  }
}

TEST_CASE("hh_dim_table examples") {
  auto t = hh_dim_table(testing::generic_plane(), 8);
  CHECK(t.total(0) == 1);
  CHECK(t.total(1) == 2);
  CHECK(t.total(2) == 2);
  CHECK(t.at(0, 3, 0).dim == 0);
  CHECK(t.at(0, 5, 2).dim == 0);
  t = hh_dim_table(testing::root_plane(3), 12);
  CHECK(t.total(0) == 15);
  int count = 0;
  for (int a = 0; a <= 12; a += 3)
    for (int b = 0; a + b <= 12; b += 3) ++count;
  CHECK(count == 15);
}

TEST_CASE("dimension table matches hh_basis cell by cell") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = testing::random_instance(rng, 3, {1, 4}, true);
    const auto t = hh_dim_table(inst, 5);
    for (int g = 0; g < inst.group.size(); ++g) {
      for (int m = 0; m <= 3; ++m) {
        std::map<int, int> per_d, inv_d;
        for (const auto& c : hh_basis(inst, g, m, 5)) {
          ++per_d[c.key.alpha.degree()];
          if (is_invariant(inst, c.key)) ++inv_d[c.key.alpha.degree()];
        }
        for (int d = 0; d <= 5; ++d) {
          CHECK(t.at(g, m, d).dim == per_d[d]);
          CHECK(t.at(g, m, d).invariant_dim == inv_d[d]);
        }
      }
    }
  }
}

TEST_CASE("invariant_basis examples") {
  CHECK(invariant_basis(testing::generic_plane(), 1, 6) == hh_basis(testing::generic_plane(), 0, 1, 6));
  const auto inst = testing::generic_plane_sign_group();
  const auto inv2 = invariant_basis(inst, 2, 2);
  REQUIRE(inv2.size() == 3);
  CHECK(inv2[0].key == CochainKey{0, Monomial({0, 0}), WedgeIndex({1, 1})});
  CHECK(inv2[1].key == CochainKey{0, Monomial({1, 1}), WedgeIndex({1, 1})});
  CHECK(inv2[2].key == CochainKey{1, Monomial({0, 0}), WedgeIndex({1, 1})});
  // gamma = (0,0) for both degree-one classes, so lambda_h^gamma = 1
  const auto inv1 = invariant_basis(inst, 1, 6);
  REQUIRE(inv1.size() == 2);
  CHECK(inv1[0].key == CochainKey{0, Monomial({0, 1}), WedgeIndex({0, 1})});
  CHECK(inv1[1].key == CochainKey{0, Monomial({1, 0}), WedgeIndex({1, 0})});
  // x_1 (x) x_2* has gamma (1,-1), outside C for generic q; x_1 alone is rescaled by -1
  CHECK_FALSE(is_invariant(inst, {0, Monomial({1, 0}), WedgeIndex({0, 0})}));
}

TEST_CASE("center_basis examples") {
  const auto z = center_basis(testing::generic_plane(), 8);
  REQUIRE(z.size() == 1);
  CHECK(z[0] == Monomial({0, 0}));
  for (const auto& a : center_basis(testing::root_plane(4), 12)) {
    CHECK(a.exps[0] % 4 == 0);
    CHECK(a.exps[1] % 4 == 0);
  }
  CHECK(center_basis(testing::root_plane(4), 12).size() == 4 + 3 + 2 + 1);
  const ScalarGroupSpec spec{1, 3};
  const auto one_var = make_instance(spec, 1, {});
  CHECK(center_basis(one_var, 7).size() == 8);
}

TEST_CASE("center equals HH^0 of S_q(V)") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(draw(rng, 1, 3));
    const auto inst = testing::random_instance(rng, n, {static_cast<int>(draw(rng, 0, 1)), draw(rng, 1, 4)}, false);
    std::vector<Monomial> hh0;
    for (const auto& c : hh_basis(inst, 0, 0, 6)) hh0.push_back(c.key.alpha);
    CHECK(center_basis(inst, 6) == hh0);
  }
}

TEST_CASE("enumerated classes are cocycles") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto inst = testing::random_instance(rng, 3, {1, 3}, true);
    for (int g = 0; g < inst.group.size(); ++g) {
      for (int m = 0; m <= 3; ++m) {
        for (const auto& c : hh_basis(inst, g, m, 4)) {
          CHECK(d_star(inst, m + 1, {{c.key, GroupRingElement(inst.scalars.identity())}}).empty());
        }
      }
    }
  }
}

TEST_CASE("enumerate_signatures respects the cap") {
  const auto sigs = enumerate_signatures(2, 3);
  for (const auto& g : sigs) {
    int sum = 0;
    for (int v : g) {
      CHECK(v >= -1);
      if (v > 0) sum += v;
    }
    CHECK(sum <= 3);
  }
  // (-1 and 0..3)^2 with sum of positives <= 3
  CHECK(sigs.size() == 5 + 5 + 4 + 3 + 2);
  CHECK(std::is_sorted(sigs.begin(), sigs.end()));
}

TEST_CASE("make_class rejects non-classes") {
  const auto inst = testing::generic_plane();
  CHECK_THROWS_AS(make_class(inst, {0, Monomial({1, 0}), WedgeIndex({0, 0})}), PreconditionError);
  CHECK_NOTHROW(make_class(inst, {0, Monomial({1, 0}), WedgeIndex({1, 0})}));
}
