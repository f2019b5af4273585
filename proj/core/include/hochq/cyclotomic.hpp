#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <variant>
#include <vector>

namespace hochq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficients (constant term first) of the L-th cyclotomic polynomial,
/// obtained by dividing x^L - 1 by Phi_d for every proper divisor d of L.
std::vector<Rational> cyclotomic_polynomial(std::int64_t order);

/// Euler's totient.
std::int64_t totient(std::int64_t n);

class CyclotomicNumber;

/// Q(zeta_L) presented as Q[x]/(Phi_L). Immutable; shared by its elements.
class CyclotomicField : public std::enable_shared_from_this<CyclotomicField> {
 public:
  static std::shared_ptr<const CyclotomicField> make(std::int64_t order);

  std::int64_t order() const noexcept { return order_; }
  /// phi(L), the length of every coefficient vector.
  int degree() const noexcept { return degree_; }
  /// Integer coefficients of Phi_L, constant term first, length degree()+1.
  const std::vector<Integer>& modulus() const noexcept { return modulus_; }

  CyclotomicNumber zero() const;
  CyclotomicNumber one() const;
  /// zeta_L^k for any integer k.
  CyclotomicNumber root(std::int64_t k) const;
  CyclotomicNumber constant(const Rational& c) const;

  /// Reduced integer coefficients of zeta^k, k in [0, L).
  const std::vector<Integer>& root_coefficients(std::int64_t k) const;

  /// In-place reduction of an integer coefficient vector modulo Phi_L.
  void reduce(std::vector<Integer>& poly) const;

 private:
  struct Token {};

 public:
  CyclotomicField(Token, std::int64_t order);

 private:
  std::int64_t order_;
  int degree_;
  std::vector<Integer> modulus_;
  // (index, coefficient) of the non-leading nonzero terms of Phi_L.
  std::vector<std::pair<int, Integer>> sparse_tail_;
  std::vector<std::vector<Integer>> roots_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// An element of Q(zeta_L) in canonical form: coefficients num[k]/den of
/// zeta^k for k < phi(L), den > 0 and coprime to the content of num. Zero is
/// the all-zero vector with den = 1.
class CyclotomicNumber {
 public:
  CyclotomicNumber() = default;
  CyclotomicNumber(FieldPtr field, std::vector<Integer> num, Integer den = 1);
  /// Any-length rational coefficient vector, reduced modulo Phi_L.
  static CyclotomicNumber from_rationals(FieldPtr field, const std::vector<Rational>& coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  std::int64_t order() const noexcept;
  Rational coeff(int k) const;
  std::vector<Rational> coeffs() const;

  bool is_zero() const noexcept;
  bool is_one() const;

  CyclotomicNumber inverse() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const Rational& rhs);
  CyclotomicNumber operator-() const;

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& b) { return a *= b; }
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a * b.inverse();
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  void check_same_field(const CyclotomicNumber& rhs) const;
  void normalize();

  FieldPtr field_;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& a);

enum class CycOp { kAdd, kMul, kInv, kIsZero };

/// Single entry point over the field operations; b is ignored for kInv and
/// kIsZero. kInv of zero throws DivisionByZero.
std::variant<CyclotomicNumber, bool> cyc_arith(CycOp op, const CyclotomicNumber& a,
                                               const CyclotomicNumber* b = nullptr);

}  // namespace hochq
