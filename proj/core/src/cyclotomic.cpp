#include "hochq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <string>

#include "hochq/error.hpp"

namespace hochq {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

// Quotient and remainder of a / b over Q; b must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (deg(a) < deg(b)) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  const Rational lead = b.back();
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const Rational c = a.back() / lead;
    q[shift] = c;
    for (int j = 0; j <= deg(b); ++j) a[shift + j] -= c * b[j];
    trim(a);
  }
  return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::int64_t totient(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Rational> cyclotomic_polynomial(std::int64_t order) {
  if (order < 1) throw PreconditionError("cyclotomic order must be >= 1");
  static std::mutex mutex;
  static std::map<std::int64_t, RatPoly> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(order); it != memo.end()) return it->second;
  }
  RatPoly poly(order + 1, 0);
  poly[0] = -1;
  poly[order] = 1;
  for (std::int64_t d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    auto [q, r] = divmod(poly, cyclotomic_polynomial(d));
    if (!r.empty()) throw Error("inexact cyclotomic division");
    poly = std::move(q);
  }
  std::lock_guard lock(mutex);
  memo.emplace(order, poly);
  return poly;
}

// ---------------------------------------------------------------------------
// CyclotomicField

std::shared_ptr<const CyclotomicField> CyclotomicField::make(std::int64_t order) {
  return std::make_shared<const CyclotomicField>(Token{}, order);
}

CyclotomicField::CyclotomicField(Token, std::int64_t order) : order_(order) {
  if (order < 1) throw PreconditionError("cyclotomic order must be >= 1");
  for (const auto& c : cyclotomic_polynomial(order)) {
    if (c.get_den() != 1) throw Error("non-integral cyclotomic polynomial");
    modulus_.push_back(c.get_num());
  }
  degree_ = static_cast<int>(modulus_.size()) - 1;
  for (int j = 0; j < degree_; ++j) {
    if (modulus_[j] != 0) sparse_tail_.emplace_back(j, modulus_[j]);
  }
  roots_.reserve(order);
  std::vector<Integer> current(degree_, 0);
  current[0] = 1;
  for (std::int64_t k = 0; k < order; ++k) {
    roots_.push_back(current);
    std::vector<Integer> next(degree_ + 1, 0);
    for (int j = 0; j < degree_; ++j) next[j + 1] = current[j];
    reduce(next);
    current = std::move(next);
  }
}

void CyclotomicField::reduce(std::vector<Integer>& poly) const {
  for (int k = static_cast<int>(poly.size()) - 1; k >= degree_; --k) {
    if (poly[k] == 0) continue;
    const Integer c = poly[k];
    const int base = k - degree_;
    for (const auto& [j, coef] : sparse_tail_) {
      mpz_submul(poly[base + j].get_mpz_t(), c.get_mpz_t(), coef.get_mpz_t());
    }
    poly[k] = 0;
  }
  poly.resize(degree_, 0);
}

const std::vector<Integer>& CyclotomicField::root_coefficients(std::int64_t k) const {
  k %= order_;
  if (k < 0) k += order_;
  return roots_[k];
}

CyclotomicNumber CyclotomicField::zero() const {
  return CyclotomicNumber(shared_from_this(), std::vector<Integer>(degree_, 0));
}

CyclotomicNumber CyclotomicField::one() const { return root(0); }

CyclotomicNumber CyclotomicField::root(std::int64_t k) const {
  return CyclotomicNumber(shared_from_this(), root_coefficients(k));
}

CyclotomicNumber CyclotomicField::constant(const Rational& c) const {
  auto out = one();
  out *= c;
  return out;
}

// ---------------------------------------------------------------------------
// CyclotomicNumber

CyclotomicNumber::CyclotomicNumber(FieldPtr field, std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (!field_) throw StructuralError("cyclotomic number without a field");
  if (den_ == 0) throw DivisionByZero("zero denominator");
  if (static_cast<int>(num_.size()) != field_->degree()) field_->reduce(num_);
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  normalize();
}

CyclotomicNumber CyclotomicNumber::from_rationals(FieldPtr field,
                                                  const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.push_back(c.get_num() * (den / c.get_den()));
  if (static_cast<int>(num.size()) < field->degree()) num.resize(field->degree(), 0);
  return CyclotomicNumber(std::move(field), std::move(num), std::move(den));
}

std::int64_t CyclotomicNumber::order() const noexcept { return field_ ? field_->order() : 0; }

Rational CyclotomicNumber::coeff(int k) const {
  Rational r(num_.at(k), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CyclotomicNumber::coeffs() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (int k = 0; k < static_cast<int>(num_.size()); ++k) out.push_back(coeff(k));
  return out;
}

bool CyclotomicNumber::is_zero() const noexcept {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicNumber::is_one() const {
  if (den_ != 1 || num_.empty() || num_[0] != 1) return false;
  for (std::size_t k = 1; k < num_.size(); ++k) {
    if (num_[k] != 0) return false;
  }
  return true;
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& rhs) const {
  if (!field_ || !rhs.field_ || field_->order() != rhs.field_->order()) {
    throw StructuralError("cyclotomic operands from different fields");
  }
}

void CyclotomicNumber::normalize() {
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  check_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += rhs.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= rhs.den_;
      mpz_addmul(num_[k].get_mpz_t(), rhs.num_[k].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  check_same_field(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] -= rhs.num_[k];
  } else {
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= rhs.den_;
      mpz_submul(num_[k].get_mpz_t(), rhs.num_[k].get_mpz_t(), den_.get_mpz_t());
    }
    den_ *= rhs.den_;
  }
  normalize();
  return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  a.check_same_field(b);
  const int n = a.field_->degree();
  std::vector<Integer> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  a.field_->reduce(prod);
  return CyclotomicNumber(a.field_, std::move(prod), a.den_ * b.den_);
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  *this = *this * rhs;
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    for (auto& c : num_) c = 0;
    den_ = 1;
    return *this;
  }
  for (auto& c : num_) c *= rhs.get_num();
  den_ *= rhs.get_den();
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  normalize();
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order()) + ")");
  RatPoly a = coeffs();
  trim(a);
  if (deg(a) == 0) return field_->constant(1 / a[0]);
  RatPoly r0;
  for (const auto& c : field_->modulus()) r0.emplace_back(c);
  RatPoly r1 = a;
  RatPoly s0, s1{Rational(1)};
  while (deg(r1) > 0) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // gcd(a, Phi_L) = 1 in the field, so r1 is a nonzero constant c with s1 * a = c.
  const Rational c = r1.at(0);
  for (auto& v : s1) v /= c;
  return from_rationals(field_, s1);
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() != b.order()) return false;
  return a.den_ == b.den_ && a.num_ == b.num_;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& a) {
  bool first = true;
  const auto cs = a.coeffs();
  for (int k = 0; k < static_cast<int>(cs.size()); ++k) {
    const Rational& c = cs[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << '(' << c.get_str() << ')';
    if (k > 0) os << "*z^" << k;
  }
  if (first) os << '0';
  return os;
}

std::variant<CyclotomicNumber, bool> cyc_arith(CycOp op, const CyclotomicNumber& a,
                                               const CyclotomicNumber* b) {
  switch (op) {
    case CycOp::kAdd:
      if (!b) throw PreconditionError("add needs two operands");
      return a + *b;
    case CycOp::kMul:
      if (!b) throw PreconditionError("mul needs two operands");
      return a * *b;
    case CycOp::kInv:
      return a.inverse();
    case CycOp::kIsZero:
      return a.is_zero();
  }
  throw PreconditionError("unknown cyclotomic operation");
}

}  // namespace hochq
