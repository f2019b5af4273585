#include "hochq/cupprod.hpp"

#include <ostream>
#include <utility>

namespace hochq {

namespace {

bool overlaps(const WedgeIndex& a, const WedgeIndex& b) {
  for (int i = 0; i < a.n(); ++i) {
    if (a.bits[i] && b.bits[i]) return true;
  }
  return false;
}

WedgeIndex join(const WedgeIndex& a, const WedgeIndex& b) {
  WedgeIndex out = a;
  for (int i = 0; i < a.n(); ++i) out.bits[i] |= b.bits[i];
  return out;
}

}  // namespace

WedgeProduct wedge_mul(const QMatrix& q, const WedgeIndex& a, const WedgeIndex& b) {
  WedgeProduct out;
  out.scalar = q.scalars().identity();
  if (overlaps(a, b)) {
    out.zero = true;
    out.result = WedgeIndex::empty(a.n());
    return out;
  }
  std::vector<int> word = a.positions();
  for (int p : b.positions()) word.push_back(p);
  for (std::size_t k = 1; k < word.size(); ++k) {
    for (std::size_t p = k; p > 0 && word[p - 1] > word[p]; --p) {
      // x_i* x_j* = -q_{i,j}^{-1} x_j* x_i*
      out.sign = -out.sign;
      out.scalar /= q(word[p - 1], word[p]);
      std::swap(word[p - 1], word[p]);
    }
  }
  out.result = WedgeIndex::from_positions(a.n(), word);
  return out;
}

WedgeProduct wedge_mul_closed_form(const QMatrix& q, const WedgeIndex& a, const WedgeIndex& b) {
  WedgeProduct out;
  out.scalar = q.scalars().identity();
  if (overlaps(a, b)) {
    out.zero = true;
    out.result = WedgeIndex::empty(a.n());
    return out;
  }
  for (int i : a.positions()) {
    for (int j : b.positions()) {
      if (i > j) {
        out.sign = -out.sign;
        out.scalar /= q(i, j);
      }
    }
  }
  out.result = join(a, b);
  return out;
}

const char* to_string(ZeroReason r) {
  switch (r) {
    case ZeroReason::kNone:
      return "none";
    case ZeroReason::kSupportOverlap:
      return "support_overlap";
    case ZeroReason::kOutsideC:
      return "outside_C_gh";
  }
  return "unknown";
}

CupResult cup(const QInstance& inst, const CohomologyClass& u, const CohomologyClass& v) {
  make_class(inst, u.key);
  make_class(inst, v.key);
  CupResult out;
  out.scalar = inst.scalars.identity();
  const int gh = inst.group.multiply(u.key.g, v.key.g);
  const auto wedge = wedge_mul(inst.q, u.key.beta, v.key.beta);
  if (wedge.zero) {
    out.zero = true;
    out.reason = ZeroReason::kSupportOverlap;
    return out;
  }
  const auto prod = mono_mul(inst.q, u.key.alpha, v.key.alpha);
  out.key = {gh, prod.monomial, wedge.result};
  if (!in_C_g(inst, gh, out.key.gamma())) {
    out.zero = true;
    out.reason = ZeroReason::kOutsideC;
    return out;
  }
  out.sign = wedge.sign;
  out.scalar = lambda_power(inst, u.key.g, v.key.alpha) * prod.scalar * wedge.scalar;
  return out;
}

CupResult free_product(const QInstance& inst, const CochainKey& u, const CochainKey& v) {
  CupResult out;
  out.scalar = inst.scalars.identity();
  const auto wedge = wedge_mul_closed_form(inst.q, u.beta, v.beta);
  if (wedge.zero) {
    out.zero = true;
    out.reason = ZeroReason::kSupportOverlap;
    return out;
  }
  const auto prod = skew_mul(inst, {u.alpha, u.g}, {v.alpha, v.g});
  out.key = {prod.g, prod.monomial, wedge.result};
  out.sign = wedge.sign;
  out.scalar = prod.scalar * wedge.scalar;
  return out;
}

CohomologyClass unit_class(const QInstance& inst) {
  return {{inst.group.identity(), Monomial::one(inst.n()), WedgeIndex::empty(inst.n())}};
}

std::ostream& operator<<(std::ostream& os, const CupResult& r) {
  if (r.zero) return os << "0 (" << to_string(r.reason) << ")";
  return os << (r.sign < 0 ? "-" : "") << r.scalar << " * " << r.key;
}

}  // namespace hochq
