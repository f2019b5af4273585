#include "hochq/cohomology.hpp"

#include <algorithm>
#include <functional>

#include "hochq/error.hpp"

namespace hochq {

CohomologyClass make_class(const QInstance& inst, const CochainKey& key) {
  if (key.g < 0 || key.g >= inst.group.size() || key.alpha.n() != inst.n() ||
      key.beta.n() != inst.n()) {
    throw PreconditionError("cochain key does not fit the instance");
  }
  if (!in_C_g(inst, key.g, key.gamma())) {
    throw PreconditionError("alpha - beta is not in C_g");
  }
  return {key};
}

bool in_C_g(const QInstance& inst, int g, const Signature& gamma) {
  for (int i = 0; i < inst.n(); ++i) {
    if (gamma[i] != -1 && !row_condition(inst, g, gamma, i)) return false;
  }
  return true;
}

std::vector<Signature> enumerate_signatures(int n, int degree_cap) {
  std::vector<Signature> out;
  Signature cur(n);
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = -1; v <= budget; ++v) {
      cur[pos] = v;
      rec(pos + 1, v > 0 ? budget - v : budget);
    }
  };
  rec(0, degree_cap);
  return out;
}

std::vector<Monomial> monomials_up_to(int n, int degree_cap) {
  std::vector<Monomial> out;
  Monomial cur = Monomial::one(n);
  std::function<void(int, int)> rec = [&](int pos, int budget) {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      cur.exps[pos] = v;
      rec(pos + 1, budget - v);
    }
  };
  rec(0, degree_cap);
  return out;
}

std::vector<CohomologyClass> hh_basis(const QInstance& inst, int g, int m, int degree_cap) {
  std::vector<CohomologyClass> out;
  if (degree_cap < 0 || m < 0 || m > inst.n()) return out;
  const auto wedges = WedgeIndex::all_of_degree(inst.n(), m);
  for (const auto& alpha : monomials_up_to(inst.n(), degree_cap)) {
    for (const auto& beta : wedges) {
      CochainKey key{g, alpha, beta};
      if (in_C_g(inst, g, key.gamma())) out.push_back({std::move(key)});
    }
  }
  return out;
}

bool is_invariant(const QInstance& inst, const CochainKey& key) {
  for (int h = 0; h < inst.group.size(); ++h) {
    if (!act(inst, h, key.alpha, key.beta).is_one()) return false;
  }
  return true;
}

std::vector<CohomologyClass> invariant_basis(const QInstance& inst, int m, int degree_cap) {
  std::vector<CohomologyClass> out;
  for (int g = 0; g < inst.group.size(); ++g) {
    for (auto& c : hh_basis(inst, g, m, degree_cap)) {
      if (is_invariant(inst, c.key)) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Monomial> center_basis(const QInstance& inst, int degree_cap) {
  std::vector<Monomial> out;
  const int n = inst.n();
  for (const auto& alpha : monomials_up_to(n, degree_cap)) {
    bool central = true;
    for (int i = 0; i < n && central; ++i) {
      const auto xi = Monomial::unit(n, i);
      central = mono_mul(inst.q, alpha, xi).scalar == mono_mul(inst.q, xi, alpha).scalar;
    }
    if (central) out.push_back(alpha);
  }
  return out;
}

DimensionCell DimensionTable::at(int g, int m, int d) const {
  auto it = cells.find({g, m, d});
  return it == cells.end() ? DimensionCell{} : it->second;
}

int DimensionTable::total(int m) const {
  int sum = 0;
  for (const auto& [k, v] : cells) {
    if (std::get<1>(k) == m) sum += v.dim;
  }
  return sum;
}

int DimensionTable::invariant_total(int m) const {
  int sum = 0;
  for (const auto& [k, v] : cells) {
    if (std::get<1>(k) == m) sum += v.invariant_dim;
  }
  return sum;
}

int DimensionTable::total(int g, int m) const {
  int sum = 0;
  for (const auto& [k, v] : cells) {
    if (std::get<0>(k) == g && std::get<1>(k) == m) sum += v.dim;
  }
  return sum;
}

DimensionTable hh_dim_table(const QInstance& inst, int degree_cap) {
  DimensionTable table;
  table.degree_cap = degree_cap;
  table.group_size = inst.group.size();
  table.n = inst.n();
  for (int g = 0; g < inst.group.size(); ++g) {
    for (int m = 0; m <= inst.n(); ++m) {
      for (int d = 0; d <= degree_cap; ++d) table.cells[{g, m, d}] = {};
      for (const auto& c : hh_basis(inst, g, m, degree_cap)) {
        auto& cell = table.cells[{g, m, c.key.alpha.degree()}];
        ++cell.dim;
        if (is_invariant(inst, c.key)) ++cell.invariant_dim;
      }
    }
  }
  return table;
}

}  // namespace hochq
