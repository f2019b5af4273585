#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "hochq/koszul.hpp"

namespace hochq {

/// A basis element (x^alpha # g) (x) (x*)^{wedge beta} of HH, i.e. a key with
/// alpha - beta in C_g.
struct CohomologyClass {
  CochainKey key;
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
  friend auto operator<=>(const CohomologyClass&, const CohomologyClass&) = default;
};

/// Throws PreconditionError unless key.gamma() lies in C_{key.g}.
CohomologyClass make_class(const QInstance& inst, const CochainKey& key);

/// For every i: gamma_i = -1 or prod_s q_{i,s}^{gamma_s} = lambda_{g,i}.
bool in_C_g(const QInstance& inst, int g, const Signature& gamma);

/// Every gamma in {-1..D}^n with sum of nonnegative entries <= D, in
/// lexicographic order.
std::vector<Signature> enumerate_signatures(int n, int degree_cap);

/// All exponent vectors of length n and degree <= D, lexicographic.
std::vector<Monomial> monomials_up_to(int n, int degree_cap);

/// Classes with |beta| = m and |alpha| <= D, ordered by (alpha, beta).
std::vector<CohomologyClass> hh_basis(const QInstance& inst, int g, int m, int degree_cap);

/// True when every h in G fixes the key, i.e. lambda_h^{alpha - beta} = 1.
bool is_invariant(const QInstance& inst, const CochainKey& key);

/// Union over g of the G-fixed classes, ordered by (g, alpha, beta).
std::vector<CohomologyClass> invariant_basis(const QInstance& inst, int m, int degree_cap);

/// Monomials of degree <= D commuting with every x_i, found by comparing
/// x^alpha x_i against x_i x^alpha.
std::vector<Monomial> center_basis(const QInstance& inst, int degree_cap);

struct DimensionCell {
  int dim = 0;
  /// Number of those classes fixed by G.
  int invariant_dim = 0;
};

/// Cell (g, m, d) counts hh_basis(g, m, D) entries with |alpha| = d.
struct DimensionTable {
  int degree_cap = 0;
  int group_size = 1;
  int n = 0;
  std::map<std::tuple<int, int, int>, DimensionCell> cells;

  /// 0 for cells that were never filled (m > n, d > D).
  DimensionCell at(int g, int m, int d) const;
  /// Sum of dim over all g and d for this m.
  int total(int m) const;
  int invariant_total(int m) const;
  /// Sum over d for a single g.
  int total(int g, int m) const;
};

DimensionTable hh_dim_table(const QInstance& inst, int degree_cap);

}  // namespace hochq
