#include "hochq/specialization.hpp"

#include <algorithm>
#include <string>

#include "hochq/error.hpp"

namespace hochq {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t v, std::int64_t m) {
  v %= m;
  return v < 0 ? v + m : v;
}

// Walks every free vector in [-B, B]^r and every torsion value; the only
// exponent allowed to land on 1 is the identity.
bool box_injective(const Specialization& s) {
  const int r = s.group.free_rank;
  const std::int64_t m = s.group.torsion_order;
  const std::int64_t L = s.target_order;
  std::vector<std::int64_t> a(r, -s.bound);
  while (true) {
    std::int64_t base = 0;
    bool zero_free = true;
    for (int k = 0; k < r; ++k) {
      base = mod(base + mod(a[k], L) * s.free_images[k], L);
      zero_free = zero_free && a[k] == 0;
    }
    for (std::int64_t tau = 0; tau < m; ++tau) {
      const bool identity = zero_free && tau == 0;
      const bool lands_on_one = mod(base + tau * s.torsion_image, L) == 0;
      if (lands_on_one != identity) return false;
    }
    int k = 0;
    while (k < r && a[k] == s.bound) a[k++] = -s.bound;
    if (k == r) break;
    ++a[k];
  }
  return true;
}

}  // namespace

std::int64_t Specialization::exponent_of(const ScalarExponent& e) const {
  if (e.free_rank() != group.free_rank || e.torsion_order() != group.torsion_order) {
    throw StructuralError("exponent does not belong to the specialized scalar group");
  }
  std::int64_t out = mod(e.torsion() * torsion_image, target_order);
  for (int k = 0; k < group.free_rank; ++k) {
    out = mod(out + mod(e.free()[k], target_order) * free_images[k], target_order);
  }
  return out;
}

bool Specialization::verify_injective() const { return box_injective(*this); }

Specialization choose_specialization(const ScalarGroupSpec& spec, std::int64_t bound,
                                     std::int64_t min_prime) {
  spec.validate();
  if (bound < 1) throw PreconditionError("specialization bound must be >= 1");
  const std::int64_t m = spec.torsion_order;
  Specialization s;
  s.group = spec;
  s.bound = bound;
  if (spec.free_rank == 0) {
    s.target_order = m;
    s.torsion_image = 1;
    s.field = CyclotomicField::make(m);
    return s;
  }
  for (std::int64_t p = std::max(2 * bound + 1, min_prime);; ++p) {
    if (!is_prime(p) || m % p == 0) continue;
    s.target_order = m * p;
    s.torsion_image = p;
    // Candidate images t_k -> zeta_L^(m * w^k) for successive w; the first
    // k = 0 coordinate is always m.
    for (std::int64_t w = 1; w < p; ++w) {
      s.free_images.assign(spec.free_rank, 0);
      std::int64_t power = 1;
      for (int k = 0; k < spec.free_rank; ++k) {
        s.free_images[k] = mod(m * power, s.target_order);
        power = mod(power * w, p);
      }
      if (box_injective(s)) {
        s.field = CyclotomicField::make(s.target_order);
        return s;
      }
      if (spec.free_rank == 1) break;
    }
  }
}

CyclotomicNumber specialize(const ScalarExponent& e, const Specialization& s, BoundCheck check) {
  if (check == BoundCheck::kZeroTest && !s.in_box(e)) {
    throw OutOfBoundError("exponent with |free| = " + std::to_string(e.max_abs_free()) +
                          " outside the verified box of radius " + std::to_string(s.bound));
  }
  return s.field->root(s.exponent_of(e));
}

}  // namespace hochq
