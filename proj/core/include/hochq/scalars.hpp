#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace hochq {

class ScalarExponent;

/// The multiplicative group Z^r x Z/m: r generic parameters t_1..t_r and a
/// root of unity zeta of order m. Every scalar of the library lives here.
struct ScalarGroupSpec {
  int free_rank = 0;
  std::int64_t torsion_order = 1;

  /// Throws ValidationError unless r >= 0 and 1 <= m <= 10^6.
  void validate() const;

  ScalarExponent identity() const;
  /// t_k (0-based k).
  ScalarExponent parameter(int k) const;
  /// zeta^power.
  ScalarExponent root_of_unity(std::int64_t power) const;
  ScalarExponent make(std::vector<std::int64_t> free, std::int64_t torsion) const;

  friend bool operator==(const ScalarGroupSpec&, const ScalarGroupSpec&) = default;
};

/// zeta^torsion * prod_k t_k^free[k], written additively.
///
/// The torsion part is kept reduced to [0, m). Two exponents combine only if
/// they share free rank and torsion order; otherwise StructuralError.
class ScalarExponent {
 public:
  /// The identity of the trivial group (r = 0, m = 1).
  ScalarExponent() = default;
  ScalarExponent(std::vector<std::int64_t> free, std::int64_t torsion,
                 std::int64_t torsion_order);

  const std::vector<std::int64_t>& free() const noexcept { return free_; }
  std::int64_t torsion() const noexcept { return torsion_; }
  std::int64_t torsion_order() const noexcept { return order_; }
  int free_rank() const noexcept { return static_cast<int>(free_.size()); }

  bool is_one() const noexcept;
  ScalarExponent inverse() const;
  ScalarExponent pow(std::int64_t k) const;
  /// Largest |free[k]|; 0 when r = 0.
  std::int64_t max_abs_free() const noexcept;

  /// *this *= e^k without materializing e^k.
  ScalarExponent& multiply_by_power(const ScalarExponent& e, std::int64_t k);

  ScalarExponent& operator*=(const ScalarExponent& rhs);
  ScalarExponent& operator/=(const ScalarExponent& rhs);
  friend ScalarExponent operator*(ScalarExponent lhs, const ScalarExponent& rhs) {
    return lhs *= rhs;
  }
  friend ScalarExponent operator/(ScalarExponent lhs, const ScalarExponent& rhs) {
    return lhs /= rhs;
  }

  friend bool operator==(const ScalarExponent&, const ScalarExponent&) = default;
  friend auto operator<=>(const ScalarExponent&, const ScalarExponent&) = default;

 private:
  void check_compatible(const ScalarExponent& rhs) const;

  std::vector<std::int64_t> free_;
  std::int64_t torsion_ = 0;
  std::int64_t order_ = 1;
};

ScalarExponent scalar_mul(const ScalarExponent& a, const ScalarExponent& b);
ScalarExponent scalar_pow(const ScalarExponent& a, std::int64_t k);
bool is_one(const ScalarExponent& a);

/// Human-readable form, e.g. "z^2*t1^-1" or "1".
std::ostream& operator<<(std::ostream& os, const ScalarExponent& e);

}  // namespace hochq
