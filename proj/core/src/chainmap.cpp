#include "hochq/chainmap.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "hochq/error.hpp"

namespace hochq {

void BarTensor::add(std::vector<Monomial> factors, const GroupRingElement& c) {
  if (static_cast<int>(factors.size()) != arity) {
    throw StructuralError("bar tensor of arity " + std::to_string(arity) + " given " +
                          std::to_string(factors.size()) + " factors");
  }
  auto it = terms.find(factors);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(std::move(factors), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::ostream& operator<<(std::ostream& os, const BarTensor& t) {
  if (t.terms.empty()) return os << "0";
  bool first = true;
  for (const auto& [factors, c] : t.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (const auto& f : factors) os << " [" << f << "]";
  }
  return os;
}

BarTensor bar_delta(const QMatrix& q, int m, const BarTensor& t) {
  if (t.arity != m + 2) {
    throw StructuralError("bar_delta_" + std::to_string(m) + " needs arity " +
                          std::to_string(m + 2));
  }
  BarTensor out{m + 1, {}};
  for (const auto& [factors, c] : t.terms) {
    for (int i = 0; i <= m; ++i) {
      auto prod = mono_mul(q, factors[i], factors[i + 1]);
      std::vector<Monomial> f;
      f.reserve(m + 1);
      f.insert(f.end(), factors.begin(), factors.begin() + i);
      f.push_back(std::move(prod.monomial));
      f.insert(f.end(), factors.begin() + i + 2, factors.end());
      GroupRingElement term = c * prod.scalar;
      if (i % 2 == 1) term = -term;
      out.add(std::move(f), term);
    }
  }
  return out;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

BarTensor phi(const QMatrix& q, const std::vector<int>& indices) {
  const int n = q.n();
  const int m = static_cast<int>(indices.size());
  for (int k = 0; k < m; ++k) {
    if (indices[k] < 0 || indices[k] >= n) throw PreconditionError("phi: index out of range");
    if (k > 0 && indices[k - 1] >= indices[k]) {
      throw PreconditionError("phi: indices must be strictly ascending");
    }
  }
  BarTensor out{m + 2, {}};
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Monomial> f;
    f.reserve(m + 2);
    f.push_back(Monomial::one(n));
    for (int p = 0; p < m; ++p) f.push_back(Monomial::unit(n, indices[perm[p]]));
    f.push_back(Monomial::one(n));
    out.add(std::move(f), GroupRingElement(q_pi(q, indices, perm), permutation_sign(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

BarTensor phi(const QMatrix& q, const ResolutionElement& x, int m) {
  BarTensor out{m + 2, {}};
  for (const auto& [key, c] : x) {
    if (key.wedge.degree() != m) throw StructuralError("phi: wedge degree mismatch");
    for (const auto& [factors, d] : phi(q, key.wedge.positions()).terms) {
      auto f = factors;
      auto left = mono_mul(q, key.left, f.front());
      auto right = mono_mul(q, f.back(), key.right);
      f.front() = std::move(left.monomial);
      f.back() = std::move(right.monomial);
      out.add(std::move(f), c * d * (left.scalar * right.scalar));
    }
  }
  return out;
}

bool ChainMapReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.ok; });
}

const ChainMapCase* ChainMapReport::first_failure() const {
  for (const auto& c : cases) {
    if (!c.ok) return &c;
  }
  return nullptr;
}

ChainMapReport verify_chain_map(const QMatrix& q, int m) {
  ChainMapReport report;
  report.m = m;
  report.n = q.n();
  if (m < 1) return report;
  for (const auto& beta : WedgeIndex::all_of_degree(q.n(), m)) {
    const auto lhs = phi(q, koszul_d(q, beta), m - 1);
    const auto rhs = bar_delta(q, m, phi(q, beta.positions()));
    report.cases.push_back({beta.positions(), lhs == rhs});
  }
  return report;
}

bool relation_membership(const QMatrix& q, const BarTensor& t, int i) {
  if (i < 0 || i + 3 > t.arity) return false;
  // other factors -> ((a, b) -> coefficient)
  std::map<std::vector<Monomial>, std::map<std::pair<int, int>, GroupRingElement>> groups;
  for (const auto& [factors, c] : t.terms) {
    const auto& x = factors[i + 1];
    const auto& y = factors[i + 2];
    if (x.degree() != 1 || y.degree() != 1) return false;
    const int a = static_cast<int>(std::find(x.exps.begin(), x.exps.end(), 1) - x.exps.begin());
    const int b = static_cast<int>(std::find(y.exps.begin(), y.exps.end(), 1) - y.exps.begin());
    auto rest = factors;
    rest.erase(rest.begin() + i + 1, rest.begin() + i + 3);
    groups[rest][{a, b}] += c;
  }
  for (auto& [rest, coeffs] : groups) {
    for (const auto& [ab, c] : coeffs) {
      const auto [a, b] = ab;
      if (a == b) {
        if (!c.is_zero()) return false;
        continue;
      }
      const auto it = coeffs.find({b, a});
      const GroupRingElement partner = it == coeffs.end() ? GroupRingElement{} : it->second;
      // c(x_b (x) x_a) = -q_{a,b} c(x_a (x) x_b)
      if (partner != -(c * q(a, b))) return false;
    }
  }
  return true;
}

bool MembershipReport::ok() const {
  return std::all_of(cases.begin(), cases.end(), [](const auto& c) { return c.ok; });
}

MembershipReport verify_relation_membership(const QMatrix& q, int m, int i) {
  MembershipReport report;
  report.m = m;
  report.position = i;
  for (const auto& beta : WedgeIndex::all_of_degree(q.n(), m)) {
    report.cases.push_back({beta.positions(), relation_membership(q, phi(q, beta.positions()), i)});
  }
  return report;
}

}  // namespace hochq
