#include "hochq/algebra.hpp"

#include <deque>
#include <map>
#include <string>

#include "hochq/error.hpp"

namespace hochq {

namespace {

std::string pair_location(int i, int j) {
  return "q[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
}

std::int64_t mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

void check_word(const QMatrix& q, const std::vector<int>& word) {
  for (int w : word) {
    if (w < 0 || w >= q.n()) {
      throw PreconditionError("generator index " + std::to_string(w) + " out of range for N = " +
                            std::to_string(q.n()));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// QMatrix

QMatrix::QMatrix(const ScalarGroupSpec& scalars, int n)
    : scalars_(scalars), n_(n), entries_(static_cast<std::size_t>(n) * n, scalars.identity()) {
  if (n < 1) throw ValidationError("n", "instance", "need at least one variable");
}

QMatrix QMatrix::from_upper(const ScalarGroupSpec& scalars, int n,
                            const std::vector<ScalarExponent>& upper) {
  QMatrix q(scalars, n);
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper.size() != expected) {
    throw ValidationError("q_count", "q_exponents",
                          "expected " + std::to_string(expected) + " upper-triangle entries, got " +
                              std::to_string(upper.size()));
  }
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const auto& e = upper[k];
      if (e.free_rank() != scalars.free_rank || e.torsion_order() != scalars.torsion_order) {
        throw ValidationError("q_shape", pair_location(i, j),
                              "entry does not belong to the declared scalar group");
      }
      q.set(i, j, e);
      q.set(j, i, e.inverse());
    }
  }
  return q;
}

// ---------------------------------------------------------------------------
// DiagonalGroup

DiagonalGroup DiagonalGroup::trivial(const ScalarGroupSpec& scalars, int n) {
  return generated_by(scalars, n, {});
}

DiagonalGroup DiagonalGroup::generated_by(const ScalarGroupSpec& scalars, int n,
                                          const std::vector<std::vector<std::int64_t>>& generators) {
  const std::int64_t m = scalars.torsion_order;
  std::vector<std::vector<std::int64_t>> gens;
  for (std::size_t k = 0; k < generators.size(); ++k) {
    if (static_cast<int>(generators[k].size()) != n) {
      throw ValidationError("generator_length", "generator " + std::to_string(k),
                            "generator must have one entry per variable");
    }
    std::vector<std::int64_t> g;
    for (auto v : generators[k]) g.push_back(mod(v, m));
    gens.push_back(std::move(g));
  }
  std::vector<std::vector<std::int64_t>> elements{std::vector<std::int64_t>(n, 0)};
  std::map<std::vector<std::int64_t>, int> seen{{elements[0], 0}};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int current = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      std::vector<std::int64_t> next = elements[current];
      for (int i = 0; i < n; ++i) next[i] = mod(next[i] + g[i], m);
      if (seen.try_emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(next);
        queue.push_back(static_cast<int>(elements.size()) - 1);
      }
    }
  }
  DiagonalGroup out;
  out.n_ = n;
  out.chars_ = std::move(elements);
  out.build(scalars);
  return out;
}

DiagonalGroup DiagonalGroup::from_elements(const ScalarGroupSpec& scalars, int n,
                                           std::vector<std::vector<std::int64_t>> elements) {
  const std::int64_t m = scalars.torsion_order;
  if (elements.empty()) throw ValidationError("group_empty", "group", "group has no elements");
  std::map<std::vector<std::int64_t>, int> index;
  for (std::size_t g = 0; g < elements.size(); ++g) {
    if (static_cast<int>(elements[g].size()) != n) {
      throw ValidationError("element_length", "element " + std::to_string(g),
                            "group element must have one entry per variable");
    }
    for (auto& v : elements[g]) v = mod(v, m);
    auto [it, inserted] = index.try_emplace(elements[g], static_cast<int>(g));
    if (!inserted) {
      throw ValidationError("group_duplicate",
                            "elements " + std::to_string(it->second) + "," + std::to_string(g),
                            "group elements must have distinct characters");
    }
  }
  if (!index.count(std::vector<std::int64_t>(n, 0))) {
    throw ValidationError("group_identity", "group", "group does not contain the identity");
  }
  for (std::size_t g = 0; g < elements.size(); ++g) {
    for (std::size_t h = 0; h < elements.size(); ++h) {
      std::vector<std::int64_t> prod(n);
      for (int i = 0; i < n; ++i) prod[i] = mod(elements[g][i] + elements[h][i], m);
      if (!index.count(prod)) {
        throw ValidationError("group_closure",
                              "elements " + std::to_string(g) + "," + std::to_string(h),
                              "group is not closed under multiplication");
      }
    }
  }
  DiagonalGroup out;
  out.n_ = n;
  out.chars_ = std::move(elements);
  out.build(scalars);
  return out;
}

void DiagonalGroup::build(const ScalarGroupSpec& scalars) {
  const std::int64_t m = scalars.torsion_order;
  const int size = static_cast<int>(chars_.size());
  std::map<std::vector<std::int64_t>, int> index;
  for (int g = 0; g < size; ++g) index.emplace(chars_[g], g);
  identity_ = index.at(std::vector<std::int64_t>(n_, 0));
  table_.assign(static_cast<std::size_t>(size) * size, -1);
  inverses_.assign(size, -1);
  for (int g = 0; g < size; ++g) {
    for (int h = 0; h < size; ++h) {
      std::vector<std::int64_t> prod(n_);
      for (int i = 0; i < n_; ++i) prod[i] = mod(chars_[g][i] + chars_[h][i], m);
      const int gh = index.at(prod);
      table_[g * size + h] = gh;
      if (gh == identity_) inverses_[g] = h;
    }
  }
  lambdas_.clear();
  for (int g = 0; g < size; ++g) {
    for (int i = 0; i < n_; ++i) lambdas_.push_back(scalars.root_of_unity(chars_[g][i]));
  }
}

int DiagonalGroup::find(const std::vector<std::int64_t>& character) const {
  for (int g = 0; g < size(); ++g) {
    if (chars_[g] == character) return g;
  }
  return -1;
}

// ---------------------------------------------------------------------------
// Instances

QInstance validate_instance(const RawInstance& raw) {
  raw.scalars.validate();
  const QMatrix& q = raw.q;
  const int n = q.n();
  if (n < 1) throw ValidationError("n", "instance", "need at least one variable");
  if (!(q.scalars() == raw.scalars)) {
    throw ValidationError("q_shape", "q", "q matrix uses a different scalar group");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& e = q(i, j);
      if (e.free_rank() != raw.scalars.free_rank ||
          e.torsion_order() != raw.scalars.torsion_order) {
        throw ValidationError("q_shape", pair_location(i, j),
                              "entry does not belong to the declared scalar group");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!q(i, i).is_one()) {
      throw ValidationError("q_diagonal", pair_location(i, i), "q_{i,i} must be 1");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(q(j, i) * q(i, j)).is_one()) {
        throw ValidationError("q_inverse", pair_location(j, i), "q_{j,i} must equal q_{i,j}^{-1}");
      }
    }
  }
  std::vector<std::vector<std::int64_t>> elements;
  for (std::size_t g = 0; g < raw.group_elements.size(); ++g) {
    const auto& lambdas = raw.group_elements[g];
    if (static_cast<int>(lambdas.size()) != n) {
      throw ValidationError("element_length", "element " + std::to_string(g),
                            "group element must have one entry per variable");
    }
    std::vector<std::int64_t> character;
    for (int i = 0; i < n; ++i) {
      const auto& l = lambdas[i];
      if (l.free_rank() != raw.scalars.free_rank || l.torsion_order() != raw.scalars.torsion_order) {
        throw ValidationError("lambda_shape",
                              "element " + std::to_string(g) + " entry " + std::to_string(i + 1),
                              "lambda does not belong to the declared scalar group");
      }
      if (l.max_abs_free() != 0) {
        throw ValidationError("lambda_finite_order",
                              "element " + std::to_string(g) + " entry " + std::to_string(i + 1),
                              "lambda_{g,i} must be a root of unity (zero free part)");
      }
      character.push_back(l.torsion());
    }
    elements.push_back(std::move(character));
  }
  QInstance inst;
  inst.scalars = raw.scalars;
  inst.q = q;
  inst.group = elements.empty() ? DiagonalGroup::trivial(raw.scalars, n)
                                : DiagonalGroup::from_elements(raw.scalars, n, std::move(elements));
  return inst;
}

QInstance make_instance(const ScalarGroupSpec& scalars, int n,
                        const std::vector<ScalarExponent>& upper,
                        const std::vector<std::vector<std::int64_t>>& generators) {
  scalars.validate();
  QInstance inst;
  inst.scalars = scalars;
  inst.q = QMatrix::from_upper(scalars, n, upper);
  inst.group = DiagonalGroup::generated_by(scalars, n, generators);
  return inst;
}

// ---------------------------------------------------------------------------
// Normal ordering

Ordered normal_order(const QMatrix& q, const std::vector<int>& word) {
  check_word(q, word);
  const int n = q.n();
  // inversions[i * n + j]: positions p < p' with w_p = i > j = w_{p'}.
  std::vector<std::int64_t> inversions(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::int64_t> seen(n, 0);
  Monomial alpha = Monomial::one(n);
  for (int w : word) {
    for (int i = w + 1; i < n; ++i) inversions[i * n + w] += seen[i];
    ++seen[w];
    ++alpha.exps[w];
  }
  ScalarExponent s = q.scalars().identity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) s.multiply_by_power(q(i, j), inversions[i * n + j]);
  }
  return {std::move(s), std::move(alpha)};
}

Ordered normal_order_rewrite(const QMatrix& q, const std::vector<int>& word) {
  check_word(q, word);
  std::vector<int> w = word;
  ScalarExponent s = q.scalars().identity();
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        // x_i x_j = q_{i,j} x_j x_i
        s *= q(w[p], w[p + 1]);
        std::swap(w[p], w[p + 1]);
        swapped = true;
      }
    }
  }
  Monomial alpha = Monomial::one(q.n());
  for (int v : w) ++alpha.exps[v];
  return {std::move(s), std::move(alpha)};
}

Ordered mono_mul(const QMatrix& q, const Monomial& a, const Monomial& b) {
  const int n = q.n();
  if (a.n() != n || b.n() != n) throw StructuralError("monomial length differs from N");
  ScalarExponent s = q.scalars().identity();
  for (int i = 0; i < n; ++i) {
    if (a.exps[i] == 0) continue;
    for (int j = 0; j < i; ++j) {
      if (b.exps[j] != 0) {
        s.multiply_by_power(q(i, j), static_cast<std::int64_t>(a.exps[i]) * b.exps[j]);
      }
    }
  }
  return {std::move(s), a + b};
}

ScalarExponent q_pi(const QMatrix& q, const std::vector<int>& indices,
                    const std::vector<int>& perm) {
  const std::size_t k = indices.size();
  if (perm.size() != k) throw StructuralError("permutation length differs from index count");
  std::vector<bool> used_index(q.n(), false);
  for (int j : indices) {
    if (j < 0 || j >= q.n()) throw StructuralError("index out of range in q_pi");
    if (used_index[j]) throw PreconditionError("repeated index " + std::to_string(j) + " in q_pi");
    used_index[j] = true;
  }
  std::vector<bool> used(k, false);
  std::vector<int> permuted(k);
  for (std::size_t p = 0; p < k; ++p) {
    const int target = perm[p];
    if (target < 0 || static_cast<std::size_t>(target) >= k || used[target]) {
      throw PreconditionError("q_pi requires a bijection");
    }
    used[target] = true;
    permuted[p] = indices[target];
  }
  return normal_order(q, indices).scalar / normal_order(q, permuted).scalar;
}

// ---------------------------------------------------------------------------
// Skew group algebra

ScalarExponent lambda_power(const QInstance& inst, int g, const Monomial& a) {
  if (g < 0 || g >= inst.group.size()) throw StructuralError("unknown group element");
  ScalarExponent s = inst.scalars.identity();
  for (int i = 0; i < inst.n(); ++i) s.multiply_by_power(inst.group.lambda(g, i), a.exps[i]);
  return s;
}

SkewProduct skew_mul(const QInstance& inst, const SkewTerm& a, const SkewTerm& b) {
  if (a.g < 0 || a.g >= inst.group.size() || b.g < 0 || b.g >= inst.group.size()) {
    throw StructuralError("unknown group element");
  }
  auto [s, alpha] = mono_mul(inst.q, a.monomial, b.monomial);
  s *= lambda_power(inst, a.g, b.monomial);
  return {std::move(s), std::move(alpha), inst.group.multiply(a.g, b.g)};
}

ScalarExponent act(const QInstance& inst, int g, const Monomial& alpha, const WedgeIndex& beta) {
  if (g < 0 || g >= inst.group.size()) throw StructuralError("unknown group element");
  ScalarExponent s = inst.scalars.identity();
  for (int i = 0; i < inst.n(); ++i) {
    s.multiply_by_power(inst.group.lambda(g, i), alpha.exps[i] - beta.bits[i]);
  }
  return s;
}

}  // namespace hochq
