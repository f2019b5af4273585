#pragma once

#include <iosfwd>
#include <map>

#include "hochq/cyclotomic.hpp"
#include "hochq/scalars.hpp"
#include "hochq/specialization.hpp"

namespace hochq {

/// A finite Z-linear combination of scalar-group elements, the exact
/// coefficient ring for differentials and chain maps. No zero coefficient is
/// ever stored, so map equality is ring equality.
class GroupRingElement {
 public:
  using Terms = std::map<ScalarExponent, Integer>;

  GroupRingElement() = default;
  /// coeff * [e].
  explicit GroupRingElement(const ScalarExponent& e, const Integer& coeff = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  void add_term(const ScalarExponent& e, const Integer& coeff);

  GroupRingElement& operator+=(const GroupRingElement& rhs);
  GroupRingElement& operator-=(const GroupRingElement& rhs);
  GroupRingElement& operator*=(const GroupRingElement& rhs);
  /// Multiplication by the group element [e].
  GroupRingElement& operator*=(const ScalarExponent& e);
  GroupRingElement& operator*=(const Integer& c);
  GroupRingElement operator-() const;

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend GroupRingElement operator*(GroupRingElement a, const ScalarExponent& e) { return a *= e; }
  friend GroupRingElement operator*(GroupRingElement a, const Integer& c) { return a *= c; }

  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

 private:
  Terms terms_;
};

/// Image of x under the ring homomorphism induced by s. With kZeroTest every
/// term exponent and every ratio of two term exponents must lie in the
/// verified box, which makes "specialized value == 0" agree with the
/// group-ring value for two-term elements such as Omega_g.
CyclotomicNumber specialize(const GroupRingElement& x, const Specialization& s,
                            BoundCheck check = BoundCheck::kNone);

std::ostream& operator<<(std::ostream& os, const GroupRingElement& x);

}  // namespace hochq
