#pragma once

#include <cstdint>
#include <vector>

#include "hochq/cyclotomic.hpp"
#include "hochq/scalars.hpp"

namespace hochq {

/// A homomorphism Z^r x Z/m -> <zeta_L> sending zeta to zeta_L^torsion_image
/// and t_k to zeta_L^free_images[k]. It is injective on the box
/// {|free_k| <= bound} (checked by enumeration when it is chosen).
struct Specialization {
  ScalarGroupSpec group;
  std::int64_t target_order = 1;
  std::int64_t torsion_image = 0;
  std::vector<std::int64_t> free_images;
  std::int64_t bound = 0;
  FieldPtr field;

  /// Exponent of the image of e as a power of zeta_L, in [0, L).
  std::int64_t exponent_of(const ScalarExponent& e) const;
  bool in_box(const ScalarExponent& e) const noexcept { return e.max_abs_free() <= bound; }
  /// Re-runs the box enumeration.
  bool verify_injective() const;
};

/// Picks L = m*P for the first prime P > max(2B, min_prime - 1) coprime to m
/// for which some image choice is injective on the exponent box of radius B.
/// With r = 0 the choice is L = m. Passing a larger min_prime yields an
/// independent second specialization.
Specialization choose_specialization(const ScalarGroupSpec& spec, std::int64_t bound,
                                     std::int64_t min_prime = 0);

enum class BoundCheck { kNone, kZeroTest };

/// The image of e in Q(zeta_L). With kZeroTest an exponent outside the
/// verified box throws OutOfBoundError, since its zero tests would no longer
/// be faithful.
CyclotomicNumber specialize(const ScalarExponent& e, const Specialization& s,
                            BoundCheck check = BoundCheck::kNone);

}  // namespace hochq
