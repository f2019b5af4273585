#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hochq/cohomology.hpp"
#include "hochq/field_matrix.hpp"
#include "hochq/koszul.hpp"

namespace hochq {

/// Smallest box radius covering every exponent (and ratio of exponents)
/// that arises in the pieces K_{g,gamma} with gamma enumerated under cap D.
std::int64_t required_bound(const QInstance& inst, int degree_cap);

/// Matrix of d_m^* : K_{g,gamma}^{m-1} -> K_{g,gamma}^m in the bases of
/// graded_piece_basis (rows index degree m).
FieldMatrix piece_differential(const QInstance& inst, int g, const Signature& gamma, int m,
                               const Specialization& s, const OmegaFn& omega = omega_big);

/// Matrix of h_m : K_{g,gamma}^m -> K_{g,gamma}^{m-1}.
FieldMatrix piece_homotopy(const QInstance& inst, int g, const Signature& gamma, int m,
                           const Specialization& s);

/// dim H^m(K_{g,gamma}) for m = 0..N by ranks of the specialized differentials.
std::vector<int> graded_cohomology_dims(const QInstance& inst, int g, const Signature& gamma,
                                        const Specialization& s,
                                        const OmegaFn& omega = omega_big);

/// H_{m+1} D_{m+1} + D_m H_m = I for every m. Throws PreconditionError for
/// gamma in C_g.
bool verify_homotopy_identity(const QInstance& inst, int g, const Signature& gamma,
                              const Specialization& s);

struct ProjectorResult {
  int cell_dim = 0;
  int rank = 0;
  bool idempotent = false;
};

/// Average over G of the action matrices on the classes at (m, d), with the
/// action computed by conjugation (1#h) . (x^alpha#g) . (1#h^{-1}) and the
/// contragredient rescaling of (x*)^beta.
ProjectorResult averaging_projector(const QInstance& inst, int m, int internal_degree,
                                    const Specialization& s);

struct PieceRecord {
  int g = 0;
  Signature gamma;
  std::vector<int> dims_enumerated;
  std::vector<int> dims_oracle;
  /// Empty unless a second specialization was used.
  std::vector<int> dims_second;
  bool complex_ok = true;
  bool homotopy_checked = false;
  bool homotopy_ok = true;
  bool match = true;
  /// First cohomological degree at which something failed, or -1.
  int failed_degree = -1;
};

struct CellRecord {
  int m = 0;
  int internal_degree = 0;
  int enumerated = 0;
  ProjectorResult projector;
  bool match = true;
};

struct VerificationReport {
  int n = 0;
  int group_size = 1;
  int degree_cap = 0;
  std::int64_t bound = 0;
  std::int64_t field_order = 1;
  std::int64_t second_field_order = 0;
  std::uint64_t seed = 0;
  std::vector<PieceRecord> pieces;
  std::vector<CellRecord> cells;
  /// Per (g, m): enumerated piece counts restricted to |alpha| <= D agree
  /// with hh_basis.
  bool table_ok = true;
  bool pass = false;

  const PieceRecord* first_failure() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Homotopy checks on this many pieces outside C_g, or all when negative.
  int homotopy_samples = -1;
  bool second_specialization = true;
  bool projector_checks = true;
  /// Substitute for omega_big in the differentials (negative controls).
  std::optional<OmegaFn> omega;
};

VerificationReport verify_instance(const QInstance& inst, int degree_cap,
                                   const VerifyOptions& options = {});

/// "(1,-1,0)".
std::string format_signature(const Signature& gamma);

}  // namespace hochq
