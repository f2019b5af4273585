// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "hochq/chainmap.hpp"
#include "hochq/cohomology.hpp"
#include "hochq/cupprod.hpp"
#include "hochq/oracle.hpp"
#include "support.hpp"

using namespace hochq;
using testing::draw;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  /// Records a failed check; only the first message is kept.
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

using KeySet = std::set<std::pair<std::vector<int>, std::vector<int>>>;

KeySet keys_of(const std::vector<CohomologyClass>& classes) {
  KeySet out;
  for (const auto& c : classes) out.insert({c.key.alpha.exps, c.key.beta.bits});
  return out;
}

/// Every (alpha, beta) with |beta| = m, |alpha| <= D and pred(alpha).
KeySet listed(int m, int cap, const std::function<bool(int, int, const std::vector<int>&)>& pred) {
  KeySet out;
  for (const auto& beta : WedgeIndex::all_of_degree(2, m)) {
    for (int a1 = 0; a1 <= cap; ++a1) {
      for (int a2 = 0; a1 + a2 <= cap; ++a2) {
        if (pred(a1, a2, beta.bits)) out.insert({{a1, a2}, beta.bits});
      }
    }
  }
  return out;
}

bool divides(int ell, int x) { return ((x % ell) + ell) % ell == 0; }

std::vector<int> random_perm(std::mt19937_64& rng, int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  for (int i = k; i > 1; --i) std::swap(p[i - 1], p[draw(rng, 0, i - 1)]);
  return p;
}

/// Random instance in the shape of the oracle-equivalence criterion:
/// N <= 3, torsion order 2..5, optional generic parameter, cyclic G.
QInstance oracle_instance(std::mt19937_64& rng, int& cap) {
  const int n = static_cast<int>(draw(rng, 1, 3));
  const ScalarGroupSpec spec{static_cast<int>(draw(rng, 0, 1)), draw(rng, 2, 5)};
  cap = static_cast<int>(draw(rng, 2, n == 3 ? 5 : 6));
  return testing::random_instance(rng, n, spec, true);
}

// ---------------------------------------------------------------------------

void ac1(Verdict& v) {
  const auto inst = testing::generic_plane();
  const int cap = 8;
  const auto table = hh_dim_table(inst, cap);
  v.require(table.total(0) == 1 && table.total(1) == 2 && table.total(2) == 2, "dims (1,2,2)");
  v.require(keys_of(hh_basis(inst, 0, 0, cap)) == KeySet{{{0, 0}, {0, 0}}}, "HH^0 = k");
  v.require(keys_of(hh_basis(inst, 0, 1, cap)) == KeySet{{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}},
            "HH^1 = span{x1 (x) x1*, x2 (x) x2*}");
  v.require(keys_of(hh_basis(inst, 0, 2, cap)) == KeySet{{{0, 0}, {1, 1}}, {{1, 1}, {1, 1}}},
            "HH^2 = span{1 (x) x1*^x2*, x1x2 (x) x1*^x2*}");
  const auto report = verify_instance(inst, cap);
  v.require(report.pass, "oracle agreement");
  v.detail << "dims (" << table.total(0) << "," << table.total(1) << "," << table.total(2)
           << ") at D=8, exact basis, oracle pieces=" << report.pieces.size();
}

void ac2(Verdict& v) {
  const int ell = 3, cap = 12;
  const auto inst = testing::root_plane(ell);
  const auto hh0 = hh_basis(inst, 0, 0, cap);
  v.require(hh0.size() == 15, "HH^0 dim 15");
  const auto h0 = listed(0, cap, [&](int a1, int a2, auto&) { return divides(ell, a1) && divides(ell, a2); });
  const auto h1 = listed(1, cap, [&](int a1, int a2, const std::vector<int>& b) {
    return b[0] == 1 ? divides(ell, a1 - 1) && divides(ell, a2) : divides(ell, a1) && divides(ell, a2 - 1);
  });
  const auto h2 = listed(2, cap, [&](int a1, int a2, auto&) {
    return (a1 == 0 && a2 == 0) || (divides(ell, a1 - 1) && divides(ell, a2 - 1));
  });
  v.require(keys_of(hh0) == h0, "HH^0 divisibility list");
  v.require(keys_of(hh_basis(inst, 0, 1, cap)) == h1, "HH^1 divisibility list");
  v.require(keys_of(hh_basis(inst, 0, 2, cap)) == h2, "HH^2 divisibility list");
  std::set<std::vector<int>> center, zero;
  for (const auto& a : center_basis(inst, cap)) center.insert(a.exps);
  for (const auto& c : hh0) zero.insert(c.key.alpha.exps);
  v.require(center == zero, "HH^0 = center_basis");
  const auto report = verify_instance(inst, cap);
  v.require(report.pass, "oracle agreement");
  v.detail << "ell=3 D=12: HH^0 dim " << hh0.size() << " = center (" << center.size()
           << "), HH^1 " << h1.size() << ", HH^2 " << h2.size() << " match the lists";
}

void ac3(Verdict& v) {
  const auto inst = testing::generic_plane_sign_group();
  const int g = inst.group.find({1, 1});
  v.require(g >= 0 && inst.group.size() == 2, "G = <g> of order 2");
  if (!v.pass) return;
  const int cap = 8;
  std::vector<int> dims;
  for (int m = 0; m <= 2; ++m) dims.push_back(static_cast<int>(hh_basis(inst, g, m, cap).size()));
  v.require(dims == std::vector<int>{0, 0, 1}, "HH_g dims (0,0,1)");
  v.require(keys_of(hh_basis(inst, g, 2, cap)) == KeySet{{{0, 0}, {1, 1}}}, "HH^2_g = (1#g) (x) x1*^x2*");
  const auto invariant = invariant_basis(inst, 2, 2);
  const auto s = choose_specialization(inst.scalars, required_bound(inst, 2));
  int rank = 0;
  bool idempotent = true;
  for (int d = 0; d <= 2; ++d) {
    const auto p = averaging_projector(inst, 2, d, s);
    rank += p.rank;
    idempotent = idempotent && p.idempotent;
  }
  v.require(invariant.size() == 3, "invariant HH^2 dim 3 at D=2");
  v.require(rank == 3 && idempotent, "projector rank 3");
  const auto report = verify_instance(inst, cap);
  v.require(report.pass, "oracle agreement");
  v.detail << "HH_g dims (" << dims[0] << "," << dims[1] << "," << dims[2]
           << "), invariant HH^2 dim " << invariant.size() << " = projector rank " << rank;
}

void ac4(Verdict& v) {
  struct Case {
    int ell, l1, l2;
  };
  int checked = 0;
  for (const auto [ell, l1, l2] : {Case{3, 1, 1}, Case{4, 1, 2}, Case{5, 2, 3}}) {
    const ScalarGroupSpec spec{0, ell};
    // q = zeta; lambda_{g,1} = q^{l1}; lambda_{g,2}^{-1} = q^{l2}.
    const auto inst = make_instance(spec, 2, {spec.make({}, 1)}, {{l1, (ell - l2) % ell}});
    const int g = inst.group.find({l1, (ell - l2) % ell});
    std::ostringstream tag;
    tag << "(ell,l1,l2)=(" << ell << "," << l1 << "," << l2 << ")";
    v.require(inst.q(0, 1) != inst.group.lambda(g, 1) && inst.q(0, 1).inverse() != inst.group.lambda(g, 0),
              tag.str() + " hypotheses");
    const int cap = 2 * ell + l1 + l2;
    const auto h0 = listed(0, cap, [&](int a1, int a2, auto&) {
      return divides(ell, a1 - l2) && divides(ell, a2 - l1);
    });
    const auto h1 = listed(1, cap, [&](int a1, int a2, const std::vector<int>& b) {
      return b[0] == 1 ? divides(ell, a2 - l1) && divides(ell, a1 - l2 - 1)
                       : divides(ell, a1 - l2) && divides(ell, a2 - l1 - 1);
    });
    const auto h2 = listed(2, cap, [&](int a1, int a2, auto&) {
      return (a1 == 0 && a2 == 0) || (divides(ell, a1 - l2 - 1) && divides(ell, a2 - l1 - 1));
    });
    const auto b0 = hh_basis(inst, g, 0, cap);
    v.require(keys_of(b0) == h0, tag.str() + " HH^0_g list");
    v.require(keys_of(hh_basis(inst, g, 1, cap)) == h1, tag.str() + " HH^1_g list");
    v.require(keys_of(hh_basis(inst, g, 2, cap)) == h2, tag.str() + " HH^2_g list");
    if (!b0.empty()) {
      const auto lowest = std::min_element(b0.begin(), b0.end(), [](const auto& a, const auto& b) {
        return a.key.alpha.degree() < b.key.alpha.degree();
      });
      const int count = static_cast<int>(std::count_if(b0.begin(), b0.end(), [&](const auto& c) {
        return c.key.alpha.degree() == lowest->key.alpha.degree();
      }));
      v.require(count == 1 && lowest->key.alpha.exps == std::vector<int>{l2, l1},
                tag.str() + " lowest HH^0_g element x1^l2 x2^l1 # g");
    } else {
      v.require(false, tag.str() + " HH^0_g nonempty");
    }
    const auto report = verify_instance(inst, cap);
    v.require(report.pass, tag.str() + " oracle agreement");
    ++checked;
  }
  v.detail << checked << " parameter triples, three families reproduced at D = 2ell+l1+l2";
}

void ac5(Verdict& v) {
  std::mt19937_64 rng(20240611);
  const auto start = Clock::now();
  int passed = 0;
  std::size_t pieces = 0;
  for (int k = 0; k < 50; ++k) {
    int cap = 0;
    const auto inst = oracle_instance(rng, cap);
    VerifyOptions opts;
    opts.seed = static_cast<std::uint64_t>(k);
    const auto report = verify_instance(inst, cap, opts);
    pieces += report.pieces.size();
    if (report.pass) {
      ++passed;
    } else if (v.pass) {
      std::ostringstream what;
      what << "instance " << k << " (n=" << inst.n() << ", m=" << inst.scalars.torsion_order << ")";
      if (const auto* f = report.first_failure()) {
        what << " g=" << f->g << " gamma=" << format_signature(f->gamma) << " degree=" << f->failed_degree;
      }
      v.require(false, what.str());
    }
  }
  const double total = seconds_since(start);
  v.require(total < 120.0, "total runtime < 2 min");
  if (v.pass) v.detail << passed << "/50 instances, " << pieces << " pieces, " << total << " s";
}

void ac6(Verdict& v) {
  std::mt19937_64 rng(777);
  int homotopy = 0;
  while (homotopy < 200 && v.pass) {
    int cap = 0;
    const auto inst = oracle_instance(rng, cap);
    const auto s = choose_specialization(inst.scalars, required_bound(inst, cap));
    for (int g = 0; g < inst.group.size() && homotopy < 200; ++g) {
      for (const auto& gamma : enumerate_signatures(inst.n(), cap)) {
        if (in_C_g(inst, g, gamma) || draw(rng, 0, 3) != 0) continue;
        v.require(verify_homotopy_identity(inst, g, gamma, s),
                  "h d + d h = id at gamma=" + format_signature(gamma));
        if (++homotopy == 200) break;
      }
    }
  }
  int keys = 0;
  while (keys < 1000 && v.pass) {
    const int n = static_cast<int>(draw(rng, 2, 4));
    const ScalarGroupSpec spec{static_cast<int>(draw(rng, 0, 2)), draw(rng, 1, 6)};
    const auto inst = testing::random_instance(rng, n, spec, true, 2);
    for (int t = 0; t < 50; ++t) {
      CochainKey key{static_cast<int>(draw(rng, 0, inst.group.size() - 1)), testing::random_monomial(rng, n, 6),
                     WedgeIndex::empty(n)};
      const int m = static_cast<int>(draw(rng, 0, n - 2));
      key.beta = WedgeIndex::all_of_degree(n, m)[draw(rng, 0, static_cast<int>(WedgeIndex::all_of_degree(n, m).size()) - 1)];
      const SymbolicCochain c{{key, GroupRingElement(spec.identity())}};
      const auto once = d_star(inst, m + 1, c);
      v.require(d_star(inst, m + 2, once).empty(), "d* d* = 0");
      v.require(once == d_star_module_action(inst, m + 1, c), "d* agrees with the module action");
      ++keys;
    }
  }
  v.detail << homotopy << " homotopy pieces, " << keys << " keys with d*d* = 0";
}

void ac7(Verdict& v) {
  std::mt19937_64 rng(4242);
  int maps = 0, memberships = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k < 20; ++k) {
      const auto inst = testing::random_instance(rng, n, ScalarGroupSpec{2, 6}, false, 2);
      for (int m = 1; m <= std::min(3, n); ++m) {
        const auto report = verify_chain_map(inst.q, m);
        v.require(report.ok(), "phi d = delta phi at n=" + std::to_string(n) + " m=" + std::to_string(m));
        maps += static_cast<int>(report.cases.size());
        for (int i = 0; i + 2 <= m; ++i) {
          const auto mr = verify_relation_membership(inst.q, m, i);
          v.require(mr.ok(), "relation membership");
          memberships += static_cast<int>(mr.cases.size());
        }
      }
    }
  }
  int triples = 0;
  for (; triples < 500; ++triples) {
    const int n = static_cast<int>(draw(rng, 2, 6));
    const auto inst = testing::random_instance(rng, n, ScalarGroupSpec{2, 5}, false, 2);
    const int k = static_cast<int>(draw(rng, 1, n));
    auto j = random_perm(rng, n);
    j.resize(k);
    const auto sigma = random_perm(rng, k);
    const auto tau = random_perm(rng, k);
    std::vector<int> pi(k), j_tau(k);
    for (int p = 0; p < k; ++p) {
      pi[p] = tau[sigma[p]];
      j_tau[p] = j[tau[p]];
    }
    v.require(q_pi(inst.q, j, pi) == q_pi(inst.q, j_tau, sigma) * q_pi(inst.q, j, tau), "q_{sigma tau} composition identity");
  }
  v.detail << maps << " chain-map tuples, " << memberships << " membership tuples, " << triples
           << " permutation triples";
}

void ac8(Verdict& v) {
  std::mt19937_64 rng(99);
  std::vector<QInstance> instances{testing::generic_plane(), testing::root_plane(3),
                                   testing::generic_plane_sign_group()};
  for (int k = 0; k < 3; ++k) {
    const ScalarGroupSpec spec{static_cast<int>(k % 2), draw(rng, 2, 4)};
    instances.push_back(testing::random_instance(rng, 3, spec, true));
  }
  int associative = 0, units = 0, overlaps = 0, closures = 0;
  for (const auto& inst : instances) {
    std::vector<CohomologyClass> pool;
    for (int g = 0; g < inst.group.size(); ++g) {
      for (int m = 0; m <= inst.n(); ++m) {
        for (const auto& c : hh_basis(inst, g, m, 4)) pool.push_back(c);
      }
    }
    if (pool.empty()) continue;
    const auto unit = unit_class(inst);
    for (const auto& u : pool) {
      const auto l = cup(inst, unit, u), r = cup(inst, u, unit);
      v.require(!l.zero && !r.zero && l.key == u.key && r.key == u.key && l.sign == 1 && r.sign == 1 &&
                    l.scalar.is_one() && r.scalar.is_one(),
                "unit law");
      ++units;
    }
    const auto pick = [&] { return pool[draw(rng, 0, static_cast<int>(pool.size()) - 1)]; };
    for (int t = 0; t < 400; ++t) {
      const auto u = pick(), w = pick();
      const auto r = cup(inst, u, w);
      const auto f = free_product(inst, u.key, w.key);
      bool overlap = false;
      for (int i = 0; i < inst.n(); ++i) overlap = overlap || (u.key.beta[i] && w.key.beta[i]);
      if (overlap) {
        v.require(r.zero && r.reason == ZeroReason::kSupportOverlap && f.zero, "support-overlap zero");
        ++overlaps;
      } else if (!r.zero) {
        v.require(in_C_g(inst, r.key.g, r.key.gamma()), "closure in C_gh");
        v.require(!f.zero && f.key == r.key && f.sign == r.sign && f.scalar == r.scalar, "subquotient consistency");
        if (is_invariant(inst, u.key) && is_invariant(inst, w.key)) {
          v.require(is_invariant(inst, r.key), "invariance");
        }
        ++closures;
      } else {
        v.require(r.reason == ZeroReason::kOutsideC && !f.zero && !in_C_g(inst, f.key.g, f.key.gamma()),
                  "coboundary zero lies outside C_gh");
      }
    }
    for (int t = 0; t < 2000 && associative < 200 * 2; ++t) {
      const auto a = pick(), b = pick(), c = pick();
      const auto ab = cup(inst, a, b), bc = cup(inst, b, c);
      if (ab.zero || bc.zero) continue;
      const auto left = cup(inst, make_class(inst, ab.key), c);
      const auto right = cup(inst, a, make_class(inst, bc.key));
      v.require(left.zero == right.zero, "associativity zero pattern");
      if (left.zero) continue;
      v.require(left.key == right.key && left.sign * ab.sign == right.sign * bc.sign &&
                    left.scalar * ab.scalar == right.scalar * bc.scalar,
                "associativity");
      ++associative;
    }
  }
  v.require(associative >= 200, "200 defined triples");
  // x1 (x) x1* and x2 (x) x2* anticommute exactly.
  const auto inst = testing::generic_plane();
  const CohomologyClass a{{0, Monomial({1, 0}), WedgeIndex({1, 0})}};
  const CohomologyClass b{{0, Monomial({0, 1}), WedgeIndex({0, 1})}};
  const auto ab = cup(inst, a, b), ba = cup(inst, b, a);
  v.require(!ab.zero && !ba.zero && ab.key == ba.key && ab.sign * ba.sign == -1 && ab.scalar == ba.scalar,
            "anticommutation scalar -1");
  v.detail << units << " unit checks, " << overlaps << " overlap zeros, " << closures << " closures, "
           << associative << " associative triples, ba = -ab";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Verdict&)>> criteria{
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},
      {"AC5", ac5}, {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}};
  const std::vector<double> limits{1.0, 5.0, 0, 0, 120.0, 0, 0, 0};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    const auto start = Clock::now();
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (limits[k] > 0) v.require(elapsed < limits[k], "runtime under " + std::to_string(limits[k]) + " s");
    failures += v.pass ? 0 : 1;
    std::printf("%s %s  %s  [%.3f s]\n", criteria[k].first, v.pass ? "PASS" : "FAIL", v.detail.str().c_str(),
                elapsed);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
