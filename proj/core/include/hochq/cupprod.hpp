#pragma once

#include <iosfwd>

#include "hochq/cohomology.hpp"

namespace hochq {

/// (x*)^{wedge beta} ^ (x*)^{wedge beta'} = sign * scalar * (x*)^{wedge result}
/// in the quantum exterior algebra on V* with parameters q^{-1}.
struct WedgeProduct {
  bool zero = false;
  int sign = 1;
  ScalarExponent scalar;
  WedgeIndex result;
};

/// Insertion sort of beta's positions followed by beta''s; moving x_j* in
/// front of x_i* (i > j) multiplies by -q_{i,j}^{-1}.
WedgeProduct wedge_mul(const QMatrix& q, const WedgeIndex& a, const WedgeIndex& b);
/// The same product by counting inverted pairs.
WedgeProduct wedge_mul_closed_form(const QMatrix& q, const WedgeIndex& a, const WedgeIndex& b);

enum class ZeroReason { kNone, kSupportOverlap, kOutsideC };

const char* to_string(ZeroReason r);

/// sign * scalar * key, or zero with a reason.
struct CupResult {
  bool zero = false;
  ZeroReason reason = ZeroReason::kNone;
  int sign = 1;
  ScalarExponent scalar;
  CochainKey key;
};

/// u cup v = (x^alpha # g)(x^alpha' # h) (x) (x*)^beta ^ (x*)^beta', taken to
/// be zero when the wedge vanishes or the result falls outside C_{gh}.
CupResult cup(const QInstance& inst, const CohomologyClass& u, const CohomologyClass& v);

/// The same product computed in (A # G) (x) wedge(V*) on raw keys, through
/// skew_mul and the closed-form wedge. Only support overlap gives zero.
CupResult free_product(const QInstance& inst, const CochainKey& u, const CochainKey& v);

/// The class (1 # e) (x) 1.
CohomologyClass unit_class(const QInstance& inst);

std::ostream& operator<<(std::ostream& os, const CupResult& r);

}  // namespace hochq
