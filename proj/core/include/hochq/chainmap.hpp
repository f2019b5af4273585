#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hochq/koszul.hpp"

namespace hochq {

/// An element of A^{(x) arity} with monomial tensor factors.
struct BarTensor {
  int arity = 0;
  std::map<std::vector<Monomial>, GroupRingElement> terms;

  void add(std::vector<Monomial> factors, const GroupRingElement& c);
  bool is_zero() const noexcept { return terms.empty(); }
  friend bool operator==(const BarTensor&, const BarTensor&) = default;
};

std::ostream& operator<<(std::ostream& os, const BarTensor& t);

/// delta_m(a_0 (x) ... (x) a_{m+1}) = sum_i (-1)^i a_0 (x) ... (x) a_i a_{i+1} (x) ... .
/// Requires arity m + 2.
BarTensor bar_delta(const QMatrix& q, int m, const BarTensor& t);

/// phi_m(1 (x) 1 (x) x_{j_1} ^ ... ^ x_{j_m}) = sum_pi sgn(pi) q_pi 1 (x) x_{j_pi(1)}
/// (x) ... (x) x_{j_pi(m)} (x) 1, for strictly ascending indices.
BarTensor phi(const QMatrix& q, const std::vector<int>& indices);

/// A^e-linear extension of phi to the Koszul resolution.
BarTensor phi(const QMatrix& q, const ResolutionElement& x, int m);

struct ChainMapCase {
  std::vector<int> indices;
  bool ok = false;
};

struct ChainMapReport {
  int m = 0;
  int n = 0;
  std::vector<ChainMapCase> cases;
  bool ok() const;
  /// Null when every case passed.
  const ChainMapCase* first_failure() const;
};

/// Compares phi_{m-1} d_m with delta_m phi_m on every ascending index tuple.
ChainMapReport verify_chain_map(const QMatrix& q, int m);

/// The tensor restricted to positions (i+1, i+2) lies in the relation space
/// R = span{x_a (x) x_b - q_{a,b} x_b (x) x_a}, group by group over the other
/// factors.
bool relation_membership(const QMatrix& q, const BarTensor& t, int i);

struct MembershipReport {
  int m = 0;
  int position = 0;
  std::vector<ChainMapCase> cases;
  bool ok() const;
};

/// relation_membership of phi_m(beta) at position i for every beta of degree m.
MembershipReport verify_relation_membership(const QMatrix& q, int m, int i);

}  // namespace hochq
