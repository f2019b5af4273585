#include "hochq/group_ring.hpp"

#include <iterator>
#include <ostream>
#include <string>

#include "hochq/error.hpp"

namespace hochq {

GroupRingElement::GroupRingElement(const ScalarExponent& e, const Integer& coeff) {
  add_term(e, coeff);
}

void GroupRingElement::add_term(const ScalarExponent& e, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  GroupRingElement out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea * eb, ca * cb);
  }
  return out;
}

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& rhs) {
  *this = *this * rhs;
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const ScalarExponent& e) {
  Terms shifted;
  for (auto& [key, c] : terms_) shifted.emplace(key * e, std::move(c));
  terms_ = std::move(shifted);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [key, v] : out.terms_) v = -v;
  return out;
}

CyclotomicNumber specialize(const GroupRingElement& x, const Specialization& s, BoundCheck check) {
  if (check == BoundCheck::kZeroTest) {
    for (auto a = x.terms().begin(); a != x.terms().end(); ++a) {
      for (auto b = std::next(a); b != x.terms().end(); ++b) {
        if (!s.in_box(a->first / b->first)) {
          throw OutOfBoundError("term ratio outside the verified box of radius " +
                                std::to_string(s.bound));
        }
      }
    }
  }
  auto out = s.field->zero();
  for (const auto& [e, c] : x.terms()) {
    auto term = specialize(e, s, check);
    term *= Rational(c);
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GroupRingElement& x) {
  if (x.is_zero()) return os << '0';
  bool first = true;
  for (const auto& [e, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*[" << e << ']';
  }
  return os;
}

}  // namespace hochq
