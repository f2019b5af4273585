#include "hochq/scalars.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

#include "hochq/error.hpp"

namespace hochq {

namespace {

std::int64_t reduce_mod(std::int64_t value, std::int64_t m) {
  std::int64_t r = value % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void ScalarGroupSpec::validate() const {
  if (free_rank < 0) {
    throw ValidationError("free_rank", "scalar_group",
                          "free rank must be non-negative, got " + std::to_string(free_rank));
  }
  if (torsion_order < 1) {
    throw ValidationError("torsion_order", "scalar_group",
                          "torsion order must be >= 1, got " + std::to_string(torsion_order));
  }
  if (torsion_order > 1'000'000) {
    throw ValidationError("torsion_order", "scalar_group",
                          "torsion order above 10^6 is not supported, got " +
                              std::to_string(torsion_order));
  }
}

ScalarExponent ScalarGroupSpec::identity() const {
  return ScalarExponent(std::vector<std::int64_t>(free_rank, 0), 0, torsion_order);
}

ScalarExponent ScalarGroupSpec::parameter(int k) const {
  if (k < 0 || k >= free_rank) {
    throw StructuralError("parameter index " + std::to_string(k) + " outside free rank " +
                          std::to_string(free_rank));
  }
  std::vector<std::int64_t> free(free_rank, 0);
  free[k] = 1;
  return ScalarExponent(std::move(free), 0, torsion_order);
}

ScalarExponent ScalarGroupSpec::root_of_unity(std::int64_t power) const {
  return ScalarExponent(std::vector<std::int64_t>(free_rank, 0), power, torsion_order);
}

ScalarExponent ScalarGroupSpec::make(std::vector<std::int64_t> free, std::int64_t torsion) const {
  if (static_cast<int>(free.size()) != free_rank) {
    throw StructuralError("free part has length " + std::to_string(free.size()) +
                          ", expected " + std::to_string(free_rank));
  }
  return ScalarExponent(std::move(free), torsion, torsion_order);
}

ScalarExponent::ScalarExponent(std::vector<std::int64_t> free, std::int64_t torsion,
                               std::int64_t torsion_order)
    : free_(std::move(free)), order_(torsion_order) {
  if (order_ < 1) throw StructuralError("torsion order must be >= 1");
  torsion_ = reduce_mod(torsion, order_);
}

bool ScalarExponent::is_one() const noexcept {
  return torsion_ == 0 &&
         std::all_of(free_.begin(), free_.end(), [](std::int64_t v) { return v == 0; });
}

ScalarExponent ScalarExponent::inverse() const { return pow(-1); }

ScalarExponent ScalarExponent::pow(std::int64_t k) const {
  ScalarExponent out = *this;
  for (auto& v : out.free_) v *= k;
  out.torsion_ = reduce_mod(torsion_ * reduce_mod(k, order_), order_);
  return out;
}

std::int64_t ScalarExponent::max_abs_free() const noexcept {
  std::int64_t best = 0;
  for (auto v : free_) best = std::max(best, v < 0 ? -v : v);
  return best;
}

void ScalarExponent::check_compatible(const ScalarExponent& rhs) const {
  if (free_.size() != rhs.free_.size()) {
    throw StructuralError("mismatched free rank: " + std::to_string(free_.size()) + " vs " +
                          std::to_string(rhs.free_.size()));
  }
  if (order_ != rhs.order_) {
    throw StructuralError("mismatched torsion order: " + std::to_string(order_) + " vs " +
                          std::to_string(rhs.order_));
  }
}

ScalarExponent& ScalarExponent::operator*=(const ScalarExponent& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < free_.size(); ++k) free_[k] += rhs.free_[k];
  torsion_ += rhs.torsion_;
  if (torsion_ >= order_) torsion_ -= order_;
  return *this;
}

ScalarExponent& ScalarExponent::multiply_by_power(const ScalarExponent& e, std::int64_t k) {
  check_compatible(e);
  if (k == 0) return *this;
  for (std::size_t i = 0; i < free_.size(); ++i) free_[i] += k * e.free_[i];
  torsion_ = reduce_mod(torsion_ + e.torsion_ * reduce_mod(k, order_), order_);
  return *this;
}

ScalarExponent& ScalarExponent::operator/=(const ScalarExponent& rhs) {
  check_compatible(rhs);
  for (std::size_t k = 0; k < free_.size(); ++k) free_[k] -= rhs.free_[k];
  torsion_ -= rhs.torsion_;
  if (torsion_ < 0) torsion_ += order_;
  return *this;
}

ScalarExponent scalar_mul(const ScalarExponent& a, const ScalarExponent& b) { return a * b; }
ScalarExponent scalar_pow(const ScalarExponent& a, std::int64_t k) { return a.pow(k); }
bool is_one(const ScalarExponent& a) { return a.is_one(); }

std::ostream& operator<<(std::ostream& os, const ScalarExponent& e) {
  bool first = true;
  auto sep = [&] {
    if (!first) os << '*';
    first = false;
  };
  if (e.torsion() != 0) {
    sep();
    os << "z^" << e.torsion();
  }
  for (int k = 0; k < e.free_rank(); ++k) {
    if (e.free()[k] == 0) continue;
    sep();
    os << 't' << (k + 1) << '^' << e.free()[k];
  }
  if (first) os << '1';
  return os;
}

}  // namespace hochq
