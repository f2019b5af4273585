#include "hochq/multi_index.hpp"

#include <numeric>
#include <ostream>

#include "hochq/error.hpp"

namespace hochq {

Monomial Monomial::unit(int n, int i) {
  if (i < 0 || i >= n) throw StructuralError("unit index out of range");
  Monomial m = one(n);
  m.exps[i] = 1;
  return m;
}

int Monomial::degree() const noexcept { return std::accumulate(exps.begin(), exps.end(), 0); }

Monomial operator+(const Monomial& a, const Monomial& b) {
  if (a.n() != b.n()) throw StructuralError("monomials in different numbers of variables");
  Monomial out = a;
  for (int i = 0; i < a.n(); ++i) out.exps[i] += b.exps[i];
  return out;
}

WedgeIndex WedgeIndex::from_positions(int n, const std::vector<int>& positions) {
  WedgeIndex b = empty(n);
  for (int p : positions) {
    if (p < 0 || p >= n) throw StructuralError("wedge position out of range");
    if (b.bits[p]) throw StructuralError("repeated wedge position");
    b.bits[p] = 1;
  }
  return b;
}

int WedgeIndex::degree() const noexcept { return std::accumulate(bits.begin(), bits.end(), 0); }

std::vector<int> WedgeIndex::positions() const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i) {
    if (bits[i]) out.push_back(i);
  }
  return out;
}

std::vector<WedgeIndex> WedgeIndex::all_of_degree(int n, int m) {
  std::vector<WedgeIndex> out;
  if (m < 0 || m > n) return out;
  // Lexicographic order on the bit vectors.
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    WedgeIndex b = empty(n);
    int count = 0;
    for (int i = 0; i < n; ++i) {
      b.bits[i] = (mask >> (n - 1 - i)) & 1u;
      count += b.bits[i];
    }
    if (count == m) out.push_back(std::move(b));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& a) {
  os << '(';
  for (int i = 0; i < a.n(); ++i) os << (i ? "," : "") << a.exps[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const WedgeIndex& b) {
  os << '[';
  for (int i = 0; i < b.n(); ++i) os << b.bits[i];
  return os << ']';
}

}  // namespace hochq
