#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hochq/multi_index.hpp"
#include "hochq/scalars.hpp"

namespace hochq {

/// The commutation scalars q_{i,j} of S_q(V): x_i x_j = q_{i,j} x_j x_i.
/// Indices are 0-based.
class QMatrix {
 public:
  QMatrix() = default;
  /// All entries the identity (the commutative polynomial ring).
  QMatrix(const ScalarGroupSpec& scalars, int n);
  /// From the upper triangle listed as (0,1), (0,2), ..., (1,2), ...; the
  /// lower triangle is the inverse.
  static QMatrix from_upper(const ScalarGroupSpec& scalars, int n,
                            const std::vector<ScalarExponent>& upper);

  int n() const noexcept { return n_; }
  const ScalarGroupSpec& scalars() const noexcept { return scalars_; }
  const ScalarExponent& operator()(int i, int j) const { return entries_[i * n_ + j]; }
  /// Raw write; unvalidated until validate_instance.
  void set(int i, int j, ScalarExponent e) { entries_[i * n_ + j] = std::move(e); }

 private:
  ScalarGroupSpec scalars_;
  int n_ = 0;
  std::vector<ScalarExponent> entries_;
};

/// A finite group acting diagonally, ^g x_i = lambda_{g,i} x_i, stored as its
/// character data lambda_g in (Z/m)^N (lambda_{g,i} = zeta^lambda_g[i]).
class DiagonalGroup {
 public:
  DiagonalGroup() = default;
  static DiagonalGroup trivial(const ScalarGroupSpec& scalars, int n);
  /// Closure of the generators under componentwise addition mod m. The
  /// identity is element 0; the rest appear in breadth-first order.
  static DiagonalGroup generated_by(const ScalarGroupSpec& scalars, int n,
                                    const std::vector<std::vector<std::int64_t>>& generators);
  /// An explicit element list; throws ValidationError unless it is a group
  /// with pairwise distinct characters.
  static DiagonalGroup from_elements(const ScalarGroupSpec& scalars, int n,
                                     std::vector<std::vector<std::int64_t>> elements);

  int size() const noexcept { return static_cast<int>(chars_.size()); }
  int n() const noexcept { return n_; }
  int identity() const noexcept { return identity_; }
  int multiply(int g, int h) const { return table_.at(g * size() + h); }
  int inverse(int g) const { return inverses_.at(g); }
  const std::vector<std::int64_t>& character(int g) const { return chars_.at(g); }
  const ScalarExponent& lambda(int g, int i) const { return lambdas_.at(g * n_ + i); }
  /// Index of the element with the given character, or -1.
  int find(const std::vector<std::int64_t>& character) const;

 private:
  void build(const ScalarGroupSpec& scalars);

  int n_ = 0;
  int identity_ = 0;
  std::vector<std::vector<std::int64_t>> chars_;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<ScalarExponent> lambdas_;
};

/// A validated (q, G) pair.
struct QInstance {
  ScalarGroupSpec scalars;
  QMatrix q;
  DiagonalGroup group;

  int n() const noexcept { return q.n(); }
};

/// Unvalidated input for validate_instance: a full q matrix and the group as
/// an explicit element list of lambda vectors.
struct RawInstance {
  ScalarGroupSpec scalars;
  QMatrix q;
  std::vector<std::vector<ScalarExponent>> group_elements;
};

/// Checks q_{i,i} = 1, q_{j,i} = q_{i,j}^{-1}, torsion-only lambdas, and group
/// closure. Every violation throws a ValidationError naming its location.
QInstance validate_instance(const RawInstance& raw);

/// Convenience: instance from an upper triangle and group generators.
QInstance make_instance(const ScalarGroupSpec& scalars, int n,
                        const std::vector<ScalarExponent>& upper,
                        const std::vector<std::vector<std::int64_t>>& generators = {});

struct Ordered {
  ScalarExponent scalar;
  Monomial monomial;
};

/// x_{w_1}...x_{w_k} = s * x^alpha. Closed form: every pair of positions
/// p < p' with w_p > w_{p'} contributes q_{w_p, w_{p'}}.
Ordered normal_order(const QMatrix& q, const std::vector<int>& word);
/// The same product by literal adjacent-swap rewriting.
Ordered normal_order_rewrite(const QMatrix& q, const std::vector<int>& word);

/// x^a * x^b = s * x^{a+b}, s = prod_{i>j} q_{i,j}^{a_i b_j}.
Ordered mono_mul(const QMatrix& q, const Monomial& a, const Monomial& b);

/// q_pi^{j_1..j_k}, defined by q_pi x_{j_pi(1)}...x_{j_pi(k)} = x_{j_1}...x_{j_k}.
/// `perm[p]` is pi(p) (0-based); indices must be distinct.
ScalarExponent q_pi(const QMatrix& q, const std::vector<int>& indices, const std::vector<int>& perm);

struct SkewTerm {
  Monomial monomial;
  int g = 0;
};

struct SkewProduct {
  ScalarExponent scalar;
  Monomial monomial;
  int g = 0;
};

/// (x^a # g)(x^b # h) = x^a (^g x^b) # gh.
SkewProduct skew_mul(const QInstance& inst, const SkewTerm& a, const SkewTerm& b);

/// lambda_g^a = prod_i lambda_{g,i}^{a_i}, the scalar of ^g x^a.
ScalarExponent lambda_power(const QInstance& inst, int g, const Monomial& a);

/// prod_i lambda_{g,i}^{alpha_i - beta_i}: the scalar by which g rescales
/// (x^alpha # h) (x) (x*)^beta (the action on V* is contragredient).
ScalarExponent act(const QInstance& inst, int g, const Monomial& alpha, const WedgeIndex& beta);

}  // namespace hochq
