#include "hochq/koszul.hpp"

#include <ostream>
#include <string>

#include "hochq/error.hpp"

namespace hochq {

namespace {

void check_degree(const CochainKey& key, int expected) {
  if (key.degree() != expected) {
    throw StructuralError("cochain key of degree " + std::to_string(key.degree()) +
                          " where degree " + std::to_string(expected) + " was expected");
  }
}

Signature difference(const Monomial& alpha, const WedgeIndex& beta) {
  Signature gamma(alpha.n());
  for (int i = 0; i < alpha.n(); ++i) gamma[i] = alpha.exps[i] - beta.bits[i];
  return gamma;
}

}  // namespace

Signature CochainKey::gamma() const { return difference(alpha, beta); }

std::ostream& operator<<(std::ostream& os, const CochainKey& k) {
  return os << "(x^" << k.alpha << " #g" << k.g << ") (x) x*^" << k.beta;
}

ScalarExponent row_character(const QMatrix& q, const Signature& gamma, int i) {
  ScalarExponent s = q.scalars().identity();
  for (int j = 0; j < q.n(); ++j) s.multiply_by_power(q(i, j), gamma[j]);
  return s;
}

bool row_condition(const QInstance& inst, int g, const Signature& gamma, int i) {
  return row_character(inst.q, gamma, i) == inst.group.lambda(g, i);
}

int graded_norm(const QInstance& inst, int g, const Signature& gamma) {
  int count = 0;
  for (int i = 0; i < inst.n(); ++i) {
    if (gamma[i] != -1 && !row_condition(inst, g, gamma, i)) ++count;
  }
  return count;
}

GradedSignature graded_signature(const QInstance& inst, int g, const Signature& gamma) {
  return {gamma, graded_norm(inst, g, gamma)};
}

int epsilon(const WedgeIndex& beta, int i) {
  int sum = 0;
  for (int s = 0; s <= i; ++s) sum += beta.bits[s];
  return sum % 2 == 0 ? 1 : -1;
}

GroupRingElement omega_big(const QInstance& inst, int g, const Monomial& alpha,
                           const WedgeIndex& beta, int i) {
  const Signature gamma = difference(alpha, beta);
  if (row_condition(inst, g, gamma, i)) return {};
  if (beta.bits[i] == 1) return {};
  const QMatrix& q = inst.q;
  ScalarExponent left = inst.scalars.identity();
  for (int s = 0; s <= i; ++s) left.multiply_by_power(q(i, s), gamma[s]);
  ScalarExponent right = inst.group.lambda(g, i);
  for (int s = i; s < inst.n(); ++s) right.multiply_by_power(q(s, i), gamma[s]);
  GroupRingElement out(left, epsilon(beta, i));
  out.add_term(right, -epsilon(beta, i));
  return out;
}

SymbolicCochain d_star(const QInstance& inst, int m, const SymbolicCochain& c) {
  return d_star(inst, m, c, omega_big);
}

SymbolicCochain d_star(const QInstance& inst, int m, const SymbolicCochain& c,
                       const OmegaFn& omega) {
  SymbolicCochain out;
  const int n = inst.n();
  for (const auto& [key, coeff] : c) {
    check_degree(key, m - 1);
    for (int i = 0; i < n; ++i) {
      if (key.beta.bits[i] == 1) continue;
      GroupRingElement w = omega(inst, key.g, key.alpha, key.beta, i);
      if (w.is_zero()) continue;
      CochainKey target = key;
      ++target.alpha.exps[i];
      target.beta.bits[i] = 1;
      auto& slot = out[target];
      slot += coeff * w;
      if (slot.is_zero()) out.erase(target);
    }
  }
  return out;
}

SymbolicCochain d_star_module_action(const QInstance& inst, int m, const SymbolicCochain& c) {
  SymbolicCochain out;
  const int n = inst.n();
  const QMatrix& q = inst.q;
  for (const auto& [key, coeff] : c) {
    check_degree(key, m - 1);
    for (int i = 0; i < n; ++i) {
      if (key.beta.bits[i] != 0) continue;
      int parity = 0;
      for (int s = 0; s <= i; ++s) parity += key.beta.bits[s];
      const int sign = parity % 2 == 0 ? 1 : -1;
      const Monomial xi = Monomial::unit(n, i);

      ScalarExponent left_scalar = inst.scalars.identity();
      for (int s = 0; s <= i; ++s) left_scalar.multiply_by_power(q(s, i), key.beta.bits[s]);
      auto left = mono_mul(q, xi, key.alpha);  // x_i a
      left_scalar *= left.scalar;

      ScalarExponent right_scalar = inst.scalars.identity();
      for (int s = i; s < n; ++s) right_scalar.multiply_by_power(q(i, s), key.beta.bits[s]);
      auto right = mono_mul(q, key.alpha, xi);  // a x_i, then ^g x_i = lambda x_i
      right_scalar *= right.scalar;
      right_scalar *= inst.group.lambda(key.g, i);

      GroupRingElement w(left_scalar, sign);
      w.add_term(right_scalar, -sign);
      if (w.is_zero()) continue;
      CochainKey target{key.g, left.monomial, key.beta};
      target.beta.bits[i] = 1;
      auto& slot = out[target];
      slot += coeff * w;
      if (slot.is_zero()) out.erase(target);
    }
  }
  return out;
}

std::vector<CochainKey> graded_piece_basis(int g, const Signature& gamma, int m) {
  const int n = static_cast<int>(gamma.size());
  std::vector<CochainKey> out;
  for (auto& beta : WedgeIndex::all_of_degree(n, m)) {
    Monomial alpha = Monomial::one(n);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      alpha.exps[i] = gamma[i] + beta.bits[i];
      ok = alpha.exps[i] >= 0;
    }
    if (ok) out.push_back({g, std::move(alpha), std::move(beta)});
  }
  return out;
}

CyclotomicNumber omega_small(const QInstance& inst, int g, const Monomial& alpha,
                             const WedgeIndex& beta, int i, const Specialization& s) {
  const Signature gamma = difference(alpha, beta);
  if (row_condition(inst, g, gamma, i) || alpha.exps[i] == 0 || beta.bits[i] == 0) {
    return s.field->zero();
  }
  Monomial a = alpha;
  WedgeIndex b = beta;
  --a.exps[i];
  b.bits[i] = 0;
  return specialize(omega_big(inst, g, a, b, i), s, BoundCheck::kZeroTest).inverse();
}

FieldCochain homotopy_h(const QInstance& inst, int g, const Signature& gamma, int m,
                        const FieldCochain& c, const Specialization& s) {
  const int norm = graded_norm(inst, g, gamma);
  if (norm == 0) throw PreconditionError("homotopy requires gamma outside C_g");
  const Rational scale(1, norm);
  FieldCochain out;
  for (const auto& [key, coeff] : c) {
    check_degree(key, m);
    if (key.g != g || key.gamma() != gamma) {
      throw PreconditionError("cochain key outside the piece K_{g,gamma}");
    }
    for (int i = 0; i < inst.n(); ++i) {
      auto w = omega_small(inst, g, key.alpha, key.beta, i, s);
      if (w.is_zero()) continue;
      CochainKey target = key;
      --target.alpha.exps[i];
      target.beta.bits[i] = 0;
      auto term = coeff * w;
      term *= scale;
      auto [it, inserted] = out.try_emplace(target, term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

FieldCochain d_star_field(const QInstance& inst, int m, const FieldCochain& c,
                          const Specialization& s) {
  FieldCochain out;
  for (const auto& [key, coeff] : c) {
    check_degree(key, m - 1);
    for (int i = 0; i < inst.n(); ++i) {
      if (key.beta.bits[i] == 1) continue;
      auto w = omega_big(inst, key.g, key.alpha, key.beta, i);
      if (w.is_zero()) continue;
      CochainKey target = key;
      ++target.alpha.exps[i];
      target.beta.bits[i] = 1;
      auto term = coeff * specialize(w, s, BoundCheck::kZeroTest);
      auto [it, inserted] = out.try_emplace(target, term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Resolution differential

ResolutionElement koszul_d(const QMatrix& q, const WedgeIndex& beta) {
  const int n = q.n();
  if (beta.degree() < 1) throw StructuralError("koszul_d needs |beta| >= 1");
  ResolutionElement out;
  int preceding = 0;
  for (int i = 0; i < n; ++i) {
    if (beta.bits[i] != 1) continue;
    const int sign = preceding % 2 == 0 ? 1 : -1;
    ++preceding;
    WedgeIndex rest = beta;
    rest.bits[i] = 0;

    ScalarExponent left = q.scalars().identity();
    for (int s = 0; s <= i; ++s) left.multiply_by_power(q(s, i), beta.bits[s]);
    ScalarExponent right = q.scalars().identity();
    for (int s = i; s < n; ++s) right.multiply_by_power(q(i, s), beta.bits[s]);

    out[{Monomial::unit(n, i), Monomial::one(n), rest}].add_term(left, sign);
    out[{Monomial::one(n), Monomial::unit(n, i), rest}].add_term(right, -sign);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

ResolutionElement koszul_d(const QMatrix& q, const ResolutionElement& x) {
  ResolutionElement out;
  for (const auto& [key, coeff] : x) {
    for (const auto& [inner, c] : koszul_d(q, key.wedge)) {
      // (p (x) r) acting on (u (x) w): p u (x) w r.
      auto left = mono_mul(q, key.left, inner.left);
      auto right = mono_mul(q, inner.right, key.right);
      GroupRingElement term = coeff * c;
      term *= left.scalar * right.scalar;
      out[{left.monomial, right.monomial, inner.wedge}] += term;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace hochq
