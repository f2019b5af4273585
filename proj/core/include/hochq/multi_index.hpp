#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

namespace hochq {

/// Exponent vector alpha of x^alpha = x_1^alpha_1 ... x_N^alpha_N.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}
  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
  /// The unit vector [i].
  static Monomial unit(int n, int i);

  int n() const noexcept { return static_cast<int>(exps.size()); }
  int degree() const noexcept;
  int operator[](int i) const { return exps[i]; }

  /// alpha + alpha'.
  friend Monomial operator+(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// beta in {0,1}^N, naming x^{wedge beta} and (x*)^{wedge beta}.
struct WedgeIndex {
  std::vector<int> bits;

  WedgeIndex() = default;
  explicit WedgeIndex(std::vector<int> b) : bits(std::move(b)) {}
  static WedgeIndex empty(int n) { return WedgeIndex(std::vector<int>(n, 0)); }
  /// Ascending positions -> indicator vector.
  static WedgeIndex from_positions(int n, const std::vector<int>& positions);

  int n() const noexcept { return static_cast<int>(bits.size()); }
  int degree() const noexcept;
  int operator[](int i) const { return bits[i]; }
  /// Ascending list of i with beta_i = 1.
  std::vector<int> positions() const;
  /// All wedge indices of length n and degree m, lexicographically.
  static std::vector<WedgeIndex> all_of_degree(int n, int m);

  friend bool operator==(const WedgeIndex&, const WedgeIndex&) = default;
  friend auto operator<=>(const WedgeIndex&, const WedgeIndex&) = default;
};

std::ostream& operator<<(std::ostream& os, const Monomial& a);
std::ostream& operator<<(std::ostream& os, const WedgeIndex& b);

}  // namespace hochq
